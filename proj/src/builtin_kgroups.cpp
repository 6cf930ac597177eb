#include "mhcy/builtin_kgroups.hpp"

#include "mhcy/errors.hpp"

namespace mhcy {

std::shared_ptr<const KPresentation> point_kgroup() {
    return KPresentation::make("G0(pt)", {{"O_pt", 0, Rational(1)}}, {}, true);
}

namespace {

Rational chi_of_twist(unsigned n, unsigned d) {
    // chi(P^n, O(-d)) = C(n-d, n); zero for 1 <= d <= n
    if (d == 0) return Rational(1);
    if (d <= n) return Rational(0);
    // d > n: (-1)^n C(d-1, n)
    Rational c(binomial(d - 1, n));
    return (n % 2) ? -c : c;
}

// coefficients of u^0..u^n representing a class of Z[u]/((u-1)^{n+1})
using UPoly = std::vector<Rational>;

UPoly u_power(unsigned n, unsigned d) {
    UPoly v(n + 1, Rational(0));
    if (d <= n) {
        v[d] = 1;
        return v;
    }
    // u^{n+1} = sum_j C(n+1,j) (-1)^{n-j} u^j
    UPoly top(n + 1, Rational(0));
    for (unsigned j = 0; j <= n; ++j) {
        Rational c(binomial(n + 1, j));
        top[j] = ((n - j) % 2) ? -c : c;
    }
    UPoly cur = u_power(n, n);  // u^n
    for (unsigned k = n; k < d; ++k) {
        // multiply by u
        UPoly next(n + 1, Rational(0));
        Rational overflow = cur[n];
        for (unsigned j = n; j >= 1; --j) next[j] = cur[j - 1];
        next[0] = 0;
        for (unsigned j = 0; j <= n; ++j) next[j] += overflow * top[j];
        cur = std::move(next);
    }
    return cur;
}

KClass upoly_to_class(const std::shared_ptr<const KPresentation>& pres, const UPoly& v) {
    std::map<unsigned, LaurentPoly> raw;
    for (unsigned d = 0; d < v.size(); ++d)
        if (v[d] != 0) raw[pres->index_of(d == 0 ? "O" : "O(-" + std::to_string(d) + ")")] =
            LaurentPoly(v[d]);
    return KClass(pres, std::move(raw));
}

}  // namespace

std::shared_ptr<const KPresentation> projective_kgroup(unsigned n) {
    std::vector<KGenerator> gens;
    for (unsigned d = 0; d <= n; ++d) {
        std::string nm = d == 0 ? "O" : "O(-" + std::to_string(d) + ")";
        gens.push_back({nm, static_cast<int>(n), chi_of_twist(n, d)});
    }
    return KPresentation::make("G0(P" + std::to_string(n) + ")", std::move(gens), {}, true);
}

KClass projective_twist(const std::shared_ptr<const KPresentation>& pres, unsigned n, unsigned d) {
    return upoly_to_class(pres, u_power(n, d));
}

KClass projective_omega(const std::shared_ptr<const KPresentation>& pres, unsigned n, unsigned p) {
    if (p > n) return KClass(pres);
    // coefficient of t^p in (1+tu)^{n+1} * sum_b (-t)^b
    UPoly acc(n + 1, Rational(0));
    for (unsigned a = 0; a <= p && a <= n + 1; ++a) {
        UPoly ua = u_power(n, a);
        Rational c(binomial(n + 1, a));
        if ((p - a) % 2) c = -c;
        for (unsigned j = 0; j <= n; ++j) acc[j] += c * ua[j];
    }
    return upoly_to_class(pres, acc);
}

KClass hyperplane_twist_pushforward(const std::shared_ptr<const KPresentation>& pres, unsigned n,
                                    unsigned d) {
    return projective_twist(pres, n, d) - projective_twist(pres, n, d + 1);
}

}  // namespace mhcy
