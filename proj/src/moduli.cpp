#include "hn/moduli.hpp"

#include "hn/degrees.hpp"
#include "hn/errors.hpp"

namespace hn {

bool h0_vanishes(const Bundle& v) {
  return v.is_zero() || v.mu_max() < Rational(0);
}

bool h1_vanishes(const Bundle& v) {
  return v.is_zero() || v.mu_min() >= Rational(0);
}

long long dim_hom(const Bundle& e, const Bundle& f) { return hom_degree(e, f); }

long long dim_aut(const Bundle& v) { return aut_degree(v); }

long long dim_h1(const Bundle& e) {
  if (!e.is_zero() && e.mu_max() >= Rational(0))
    throw DomainError("slope-order", "dim_h1 requires mu_max < 0");
  return pos_part_degree(dual(e));
}

std::pair<Bundle, Bundle> canonical_resolution(const Slope& lambda, long long mult) {
  if (lambda >= Rational(0))
    throw DomainError("slope-order", "canonical resolution requires lambda < 0");
  if (mult < 1) throw DomainError("invalid-argument", "multiplicity must be >= 1");
  long long r = mult * lambda.den();
  long long d = mult * lambda.num();  // d < 0
  return {Bundle::semistable(Rational(0), r - d), Bundle::semistable(Rational(1), -d)};
}

long long dim_surj_stratum(const Bundle& e, const Bundle& f, const Bundle& k) {
  if (k.rank() != e.rank() - f.rank() || k.degree() != e.degree() - f.degree())
    throw DomainError("incompatible-kernel",
                      "kernel rank/degree must equal the surjection's difference");
  return hom_degree(e, f) + hom_degree(k, e) - hom_degree(k, f) - hom_degree(k, k);
}

long long dim_ext_stratum(const Bundle& d, const Bundle& f, const Bundle& e) {
  if (e.rank() != d.rank() + f.rank() || e.degree() != d.degree() + f.degree())
    throw DomainError("incompatible-extension",
                      "middle term rank/degree must equal the sum of the ends");
  return hom_degree(d, e) + hom_degree(e, f) - hom_degree(d, f) - hom_degree(e, e);
}

long long dim_ext_total(const Bundle& f, const Bundle& d) {
  if (!d.is_zero() && !f.is_zero() && !(d.mu_max() < f.mu_min()))
    throw DomainError("slope-order", "dim_ext_total requires mu_max(d) < mu_min(f)");
  return hom_degree(d, f);
}

StratumDims surj_stratum_dims(const Bundle& e, const Bundle& f, const Bundle& k) {
  StratumDims dims;
  dims.total = dim_hom(e, f);
  dims.stratum = dim_surj_stratum(e, f, k);
  dims.gap = dims.total - dims.stratum;
  return dims;
}

StratumDims ext_stratum_dims(const Bundle& d, const Bundle& f, const Bundle& e) {
  StratumDims dims;
  dims.total = dim_ext_total(f, d);
  dims.stratum = dim_ext_stratum(d, f, e);
  dims.gap = dims.total - dims.stratum;
  return dims;
}

}  // namespace hn
