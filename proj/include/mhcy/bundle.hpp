#pragma once

#include <memory>
#include <vector>

#include "mhcy/ring.hpp"

namespace mhcy {

// A (possibly virtual) bundle on a presented ring: rank plus total Chern
// class with constant term 1. Whitney sums multiply Chern classes and add
// ranks.
struct BundleClass {
    std::shared_ptr<const RingPresentation> pres;
    int rank = 0;
    GradedClass<Rational> total_chern;

    static BundleClass trivial(std::shared_ptr<const RingPresentation> p, int rank);
    static BundleClass line(std::shared_ptr<const RingPresentation> p,
                            const GradedClass<Rational>& c1);
    // T P^n as O(1)^(n+1) - O: rank n, Chern (1+h)^(n+1) truncated.
    static BundleClass tangent_projective(std::shared_ptr<const RingPresentation> p, unsigned n);
    // tangent bundle of a product of projective spaces over its own ring
    static BundleClass tangent_projective_product(std::shared_ptr<const RingPresentation> p,
                                                  const std::vector<unsigned>& ns);
};

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b);

// p_1..p_dim by the Newton identities
//   p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k.
std::vector<GradedClass<Rational>> chern_to_power_sums(const BundleClass& b);

// One-variable series with coefficients in the (1+y)-localized ring; index
// is the power of the formal Chern-root variable.
using GenusSeries = std::vector<LocalizedPoly>;

GenusSeries todd_genus_series(unsigned dim);         // x/(1-e^-x)
GenusSeries lambda_y_genus_series(unsigned dim);     // 1 + y e^-x
GenusSeries tilde_ty_genus_series(unsigned dim);     // x (1 + y e^-x)/(1-e^-x)
GenusSeries normalized_ty_genus_series(unsigned dim);  // x(1+y)/(1-e^-x(1+y)) - xy

// Product of Q over the Chern roots, computed through power sums as
// Q(0)^rank * exp(sum_k log(Q/Q(0))_k p_k). Exact in the localized ring.
GradedClass<LocalizedPoly> genus_from_series_localized(const GenusSeries& q, const BundleClass& b);

// Same, asserting the result clears all (1+y) denominators.
GradedClass<LaurentPoly> genus_from_series(const GenusSeries& q, const BundleClass& b);

GradedClass<LaurentPoly> lambda_y_character(const BundleClass& b);
GradedClass<LaurentPoly> tilde_ty_class(const BundleClass& b);
GradedClass<LaurentPoly> todd_class(const BundleClass& b);
GradedClass<LaurentPoly> normalized_ty_class(const BundleClass& b);

// chi_y genus of a product of projective spaces (degree of tilde_ty of the
// tangent bundle).
LaurentPoly chi_y_genus(const std::vector<unsigned>& projective_factors);

GradedClass<Rational> eval_y(const GradedClass<LaurentPoly>& g, const Rational& y0);
GradedClass<LaurentPoly> to_laurent(const GradedClass<LocalizedPoly>& g);
GradedClass<LocalizedPoly> to_localized(const GradedClass<LaurentPoly>& g);

}  // namespace mhcy
