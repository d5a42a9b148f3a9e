#pragma once

#include <utility>

#include "hn/bundle.hpp"

namespace hn {

// H^0(O(l)) = 0 iff l < 0 and H^1(O(l)) = 0 iff l >= 0, extended over direct
// sums. Both hold vacuously for the zero bundle.
bool h0_vanishes(const Bundle& v);
bool h1_vanishes(const Bundle& v);

// Dimension of the moduli of bundle maps e -> f: deg(e^dual (x) f)^{>=0}.
long long dim_hom(const Bundle& e, const Bundle& f);

// Dimension of the automorphism moduli: deg(v^dual (x) v)^{>=0}.
long long dim_aut(const Bundle& v);

// Dimension of H^1(e) for mu_max(e) < 0: deg(e^dual)^{>=0}. Slope-order error
// when a slope is >= 0; the zero bundle passes vacuously with dimension 0.
long long dim_h1(const Bundle& e);

// For lambda < 0, the short exact sequence
//   0 -> O(lambda)^{+m} -> O^{+(r-d)} -> O(1)^{+(-d)} -> 0
// with r, d the rank and degree of O(lambda)^{+m}. Returns (middle, quotient).
std::pair<Bundle, Bundle> canonical_resolution(const Slope& lambda, long long mult);

// Dimension formula for the stratum of surjections e ->> f with kernel type k:
//   deg(e*f) + deg(k*e) - deg(k*f) - deg(k*k)   (all deg(x*y) = dim_hom(x, y)).
// Requires rank(k) = rank(e) - rank(f) and degree(k) = degree(e) - degree(f);
// incompatible-kernel error otherwise. Returns the formula value regardless of
// whether the stratum is nonempty.
long long dim_surj_stratum(const Bundle& e, const Bundle& f, const Bundle& k);

// Dimension formula for the stratum of extensions of f by d with middle term
// type e: deg(d*e) + deg(e*f) - deg(d*f) - deg(e*e). Requires the rank/degree
// additivity; incompatible-extension error otherwise.
long long dim_ext_stratum(const Bundle& d, const Bundle& f, const Bundle& e);

// Total dimension of the extension moduli of f by d when
// mu_max(d) < mu_min(f): dim H^1(f^dual (x) d) = deg(d^dual (x) f)^{>=0}.
// The gap holds vacuously when d or f is zero.
long long dim_ext_total(const Bundle& f, const Bundle& d);

// The pair of dimensions compared by the stratification arguments.
struct StratumDims {
  long long total = 0;
  long long stratum = 0;
  long long gap = 0;  // total - stratum
};

StratumDims surj_stratum_dims(const Bundle& e, const Bundle& f, const Bundle& k);
StratumDims ext_stratum_dims(const Bundle& d, const Bundle& f, const Bundle& e);

}  // namespace hn
