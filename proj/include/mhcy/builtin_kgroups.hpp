#pragma once

#include <memory>
#include <vector>

#include "mhcy/kgroup.hpp"

namespace mhcy {

// Built-in K-presentations with complete relation sets: the point, projective
// spaces in the twist basis [O], [O(-1)], ..., [O(-n)], and coordinate
// arrangements (assembled by the scenario builders).

std::shared_ptr<const KPresentation> point_kgroup();

// Free basis of structure-sheaf twists with their sheaf Euler
// characteristics chi(P^n, O(-d)).
std::shared_ptr<const KPresentation> projective_kgroup(unsigned n);

// [O(-d)] for arbitrary d >= 0, reduced into the standard basis through
// u^{n+1} = sum_j C(n+1,j) (-1)^{n-j} u^j, u = [O(-1)].
KClass projective_twist(const std::shared_ptr<const KPresentation>& pres, unsigned n, unsigned d);

// [Omega^p] of P^n in the standard basis: coefficient of t^p in
// (1 + t u)^{n+1} / (1 + t).
KClass projective_omega(const std::shared_ptr<const KPresentation>& pres, unsigned n, unsigned p);

// [O_H(-d)] pushed from a hyperplane H = P^{n-1} into G_0(P^n):
// [O(-d)] - [O(-d-1)].
KClass hyperplane_twist_pushforward(const std::shared_ptr<const KPresentation>& pres, unsigned n,
                                    unsigned d);

}  // namespace mhcy
