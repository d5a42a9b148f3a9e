#pragma once

#include "hn/bundle.hpp"

namespace hn {

// deg(v)^{>=0}: the degree of the slope->=0 truncation. Always >= 0.
long long pos_part_degree(const Bundle& v);

// deg(e^dual (x) f)^{>=0} as the sum of two-dimensional cross products
// e_i x f_j over the HN-vector pairs with slope(e_i) <= slope(f_j).
long long hom_degree(const Bundle& e, const Bundle& f);

// Same quantity computed along an independent route: expand the tensor
// product summand by summand, then take the positive-part degree.
long long hom_degree_oracle(const Bundle& e, const Bundle& f);

// Cross product of the total (rank, degree) vectors. Requires
// mu_max(e) <= mu_min(f) with both bundles nonzero, where it equals
// hom_degree(e, f); slope-order error otherwise.
long long parallelogram_degree(const Bundle& e, const Bundle& f);

// deg(v^dual (x) v)^{>=0} = hom_degree(v, v). Zero exactly for semistable v.
long long aut_degree(const Bundle& v);

// The same value as twice the area enclosed between HN(v) and its chord.
long long aut_degree_via_area(const Bundle& v);

// The bundle whose HN polygon is the vertical stretch of HN(v) by the
// positive integer factor c (every HN vector (r, d) becomes (r, c*d)).
Bundle vertical_stretch(const Bundle& v, long long c);

}  // namespace hn
