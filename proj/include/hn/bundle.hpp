#pragma once

#include <utility>
#include <vector>

#include "hn/rational.hpp"

namespace hn {

// Slope of a stable bundle: degree / rank as an exact rational in lowest
// terms. For lambda = s/r in lowest terms, O(lambda) has rank r and degree s.
using Slope = Rational;

// One segment of a Harder-Narasimhan polygon: the (rank, degree) vector of a
// semistable direct summand.
struct HNVector {
  long long rank = 0;
  long long degree = 0;

  Slope slope() const { return Rational(degree, rank); }

  friend bool operator==(const HNVector&, const HNVector&) = default;
};

// Isomorphism class of a vector bundle on the curve, represented by its
// Harder-Narasimhan type: a list of (slope, multiplicity) pairs with strictly
// decreasing slopes and positive multiplicities. This list is a complete
// isomorphism invariant. The empty list is the zero bundle.
class Bundle {
 public:
  struct Summand {
    Slope slope;
    long long mult = 1;

    friend bool operator==(const Summand&, const Summand&) = default;
  };

  Bundle() = default;  // zero bundle

  // O(lambda): the stable bundle of slope lambda.
  static Bundle stable(const Slope& lambda);
  // O(lambda)^{+m}; m = 0 gives the zero bundle.
  static Bundle semistable(const Slope& lambda, long long mult);
  // Normalizes arbitrary input: drops zero multiplicities, sorts slopes in
  // decreasing order and merges equal slopes. Negative multiplicities are
  // rejected.
  static Bundle from_summands(std::vector<Summand> parts);

  const std::vector<Summand>& summands() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  // Semistable bundles are exactly those with at most one slope; the zero
  // bundle counts as (vacuously) semistable.
  bool is_semistable() const { return parts_.size() <= 1; }

  long long rank() const;
  long long degree() const;
  Slope slope() const;   // degree/rank; undefined-slope error on the zero bundle
  Slope mu_max() const;  // largest HN slope; undefined-slope error on the zero bundle
  Slope mu_min() const;  // smallest HN slope; ditto

  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  std::vector<Summand> parts_;
};

enum class Cmp { Ge, Gt, Le, Lt };

// Summand-wise operations on HN types.
Bundle dual(const Bundle& v);
Bundle direct_sum(const Bundle& v, const Bundle& w);
// Bilinear over summands, with O(a) (x) O(b) = O(a+b)^{+(r_a r_b / r_{a+b})}.
Bundle tensor(const Bundle& v, const Bundle& w);
// twist(v, lambda) = v (x) O(lambda).
Bundle twist(const Bundle& v, const Slope& lambda);
// Keeps exactly the summands whose slope satisfies the comparison against mu.
Bundle truncate(const Bundle& v, const Slope& mu, Cmp cmp);

// One (rank, degree) vector per summand, in slope-decreasing order. Component
// sums equal (rank(v), degree(v)).
std::vector<HNVector> hn_vectors(const Bundle& v);

// The unique semistable bundle of the given rank and degree. Rank 0 requires
// degree 0 and yields the zero bundle.
Bundle semistable_of(long long rank, long long degree);

}  // namespace hn
