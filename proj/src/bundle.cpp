#include "hn/bundle.hpp"

#include <algorithm>
#include <map>

#include "hn/errors.hpp"

namespace hn {

Bundle Bundle::stable(const Slope& lambda) { return semistable(lambda, 1); }

Bundle Bundle::semistable(const Slope& lambda, long long mult) {
  if (mult < 0) throw DomainError("invalid-argument", "negative multiplicity");
  Bundle b;
  if (mult > 0) b.parts_.push_back({lambda, mult});
  return b;
}

Bundle Bundle::from_summands(std::vector<Summand> parts) {
  for (const auto& p : parts)
    if (p.mult < 0) throw DomainError("invalid-argument", "negative multiplicity");
  std::sort(parts.begin(), parts.end(),
            [](const Summand& a, const Summand& b) { return a.slope > b.slope; });
  Bundle b;
  for (const auto& p : parts) {
    if (p.mult == 0) continue;
    if (!b.parts_.empty() && b.parts_.back().slope == p.slope)
      b.parts_.back().mult += p.mult;
    else
      b.parts_.push_back(p);
  }
  return b;
}

long long Bundle::rank() const {
  long long r = 0;
  for (const auto& p : parts_) r += p.mult * p.slope.den();
  return r;
}

long long Bundle::degree() const {
  long long d = 0;
  for (const auto& p : parts_) d += p.mult * p.slope.num();
  return d;
}

Slope Bundle::slope() const {
  if (is_zero()) throw DomainError("undefined-slope", "zero bundle has no slope");
  return Rational(degree(), rank());
}

Slope Bundle::mu_max() const {
  if (is_zero()) throw DomainError("undefined-slope", "zero bundle has no HN slopes");
  return parts_.front().slope;
}

Slope Bundle::mu_min() const {
  if (is_zero()) throw DomainError("undefined-slope", "zero bundle has no HN slopes");
  return parts_.back().slope;
}

Bundle dual(const Bundle& v) {
  std::vector<Bundle::Summand> parts;
  parts.reserve(v.summands().size());
  for (auto it = v.summands().rbegin(); it != v.summands().rend(); ++it)
    parts.push_back({-it->slope, it->mult});
  // Negating and reversing preserves the strictly-decreasing order.
  return Bundle::from_summands(std::move(parts));
}

Bundle direct_sum(const Bundle& v, const Bundle& w) {
  std::vector<Bundle::Summand> parts = v.summands();
  parts.insert(parts.end(), w.summands().begin(), w.summands().end());
  return Bundle::from_summands(std::move(parts));
}

Bundle tensor(const Bundle& v, const Bundle& w) {
  std::map<Slope, long long, std::greater<Slope>> acc;
  for (const auto& a : v.summands()) {
    for (const auto& b : w.summands()) {
      Slope nu = a.slope + b.slope;
      // r_a * r_b / r_{a+b} copies of O(a+b); the division is exact because
      // den(a+b) divides den(a)*den(b).
      long long copies = a.slope.den() * b.slope.den() / nu.den();
      acc[nu] += a.mult * b.mult * copies;
    }
  }
  std::vector<Bundle::Summand> parts;
  parts.reserve(acc.size());
  for (const auto& [slope, mult] : acc) parts.push_back({slope, mult});
  return Bundle::from_summands(std::move(parts));
}

Bundle twist(const Bundle& v, const Slope& lambda) {
  return tensor(v, Bundle::stable(lambda));
}

Bundle truncate(const Bundle& v, const Slope& mu, Cmp cmp) {
  std::vector<Bundle::Summand> kept;
  for (const auto& p : v.summands()) {
    bool keep = false;
    switch (cmp) {
      case Cmp::Ge: keep = p.slope >= mu; break;
      case Cmp::Gt: keep = p.slope > mu; break;
      case Cmp::Le: keep = p.slope <= mu; break;
      case Cmp::Lt: keep = p.slope < mu; break;
    }
    if (keep) kept.push_back(p);
  }
  return Bundle::from_summands(std::move(kept));
}

std::vector<HNVector> hn_vectors(const Bundle& v) {
  std::vector<HNVector> vecs;
  vecs.reserve(v.summands().size());
  for (const auto& p : v.summands())
    vecs.push_back({p.mult * p.slope.den(), p.mult * p.slope.num()});
  return vecs;
}

Bundle semistable_of(long long rank, long long degree) {
  if (rank < 0) throw DomainError("invalid-argument", "negative rank");
  if (rank == 0) {
    if (degree != 0)
      throw DomainError("invalid-argument", "rank 0 with nonzero degree");
    return Bundle();
  }
  Rational lambda(degree, rank);
  return Bundle::semistable(lambda, rank / lambda.den());
}

}  // namespace hn
