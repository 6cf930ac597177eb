#include "mhcy/bundle.hpp"

namespace mhcy {

BundleClass BundleClass::trivial(std::shared_ptr<const RingPresentation> p, int rank) {
    return {p, rank, GradedClass<Rational>::unit(p)};
}

BundleClass BundleClass::line(std::shared_ptr<const RingPresentation> p,
                              const GradedClass<Rational>& c1) {
    return {p, 1, GradedClass<Rational>::unit(p) + c1};
}

BundleClass BundleClass::tangent_projective(std::shared_ptr<const RingPresentation> p,
                                            unsigned n) {
    auto h = GradedClass<Rational>::generator(p, 0);
    auto c = GradedClass<Rational>::unit(p);
    auto one_plus_h = GradedClass<Rational>::unit(p) + h;
    for (unsigned i = 0; i <= n; ++i) c *= one_plus_h;
    return {p, static_cast<int>(n), c};
}

BundleClass BundleClass::tangent_projective_product(std::shared_ptr<const RingPresentation> p,
                                                    const std::vector<unsigned>& ns) {
    auto c = GradedClass<Rational>::unit(p);
    int rank = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        auto hi = GradedClass<Rational>::generator(p, static_cast<unsigned>(i));
        auto f = GradedClass<Rational>::unit(p) + hi;
        for (unsigned j = 0; j <= ns[i]; ++j) c *= f;
        rank += static_cast<int>(ns[i]);
    }
    return {p, rank, c};
}

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b) {
    if (a.pres.get() != b.pres.get())
        throw presentation_mismatch("whitney sum over different presentations");
    return {a.pres, a.rank + b.rank, a.total_chern * b.total_chern};
}

std::vector<GradedClass<Rational>> chern_to_power_sums(const BundleClass& b) {
    unsigned dim = b.pres->dimension();
    std::vector<GradedClass<Rational>> c(dim + 1, GradedClass<Rational>(b.pres));
    for (unsigned k = 1; k <= dim; ++k) c[k] = b.total_chern.component(k);
    std::vector<GradedClass<Rational>> p(dim + 1, GradedClass<Rational>(b.pres));
    for (unsigned k = 1; k <= dim; ++k) {
        GradedClass<Rational> acc = c[k].scaled(Rational(static_cast<long>(k)));
        if (k % 2 == 0) acc = -acc;  // (-1)^{k-1} k c_k
        for (unsigned j = 1; j < k; ++j) {
            auto term = c[j] * p[k - j];
            if (j % 2 == 0) term = -term;  // (-1)^{j-1} c_j p_{k-j}
            acc += term;
        }
        p[k] = acc;
    }
    p.erase(p.begin());
    return p;
}

namespace {

GenusSeries series_mul(const GenusSeries& a, const GenusSeries& b) {
    GenusSeries r(a.size(), LocalizedPoly());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// multiplicative inverse of a series with constant term 1
GenusSeries series_inverse(const GenusSeries& a) {
    GenusSeries r(a.size(), LocalizedPoly());
    r[0] = LocalizedPoly::one();
    for (std::size_t k = 1; k < a.size(); ++k) {
        LocalizedPoly acc;
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
        r[k] = -acc;
    }
    return r;
}

// log of a series with constant term 1
GenusSeries series_log1(const GenusSeries& a) {
    std::size_t n = a.size();
    GenusSeries v = a;
    v[0] = LocalizedPoly();
    GenusSeries acc(n, LocalizedPoly());
    GenusSeries power(n, LocalizedPoly());
    power[0] = LocalizedPoly::one();
    for (std::size_t k = 1; k < n; ++k) {
        power = series_mul(power, v);
        Rational c = Rational((k % 2) ? 1 : -1) / Rational(static_cast<long>(k));
        for (std::size_t i = 0; i < n; ++i) acc[i] += power[i] * c;
    }
    return acc;
}

Rational factorial(unsigned n) {
    Rational f(1);
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

GenusSeries todd_genus_series(unsigned dim) {
    // invert (1-e^-x)/x = sum (-1)^k x^k/(k+1)!
    GenusSeries base(dim + 1, LocalizedPoly());
    for (unsigned k = 0; k <= dim; ++k) {
        Rational c = Rational((k % 2) ? -1 : 1) / factorial(k + 1);
        base[k] = LocalizedPoly(c);
    }
    return series_inverse(base);
}

GenusSeries lambda_y_genus_series(unsigned dim) {
    GenusSeries s(dim + 1, LocalizedPoly());
    s[0] = LocalizedPoly(LaurentPoly::one_plus_y());
    for (unsigned k = 1; k <= dim; ++k) {
        Rational c = Rational((k % 2) ? -1 : 1) / factorial(k);
        s[k] = LocalizedPoly(LaurentPoly::y() * c);
    }
    return s;
}

GenusSeries tilde_ty_genus_series(unsigned dim) {
    return series_mul(todd_genus_series(dim), lambda_y_genus_series(dim));
}

GenusSeries normalized_ty_genus_series(unsigned dim) {
    // substitute x -> x(1+y) in the Todd series, then subtract xy
    GenusSeries todd = todd_genus_series(dim);
    GenusSeries s(dim + 1, LocalizedPoly());
    for (unsigned k = 0; k <= dim; ++k)
        s[k] = todd[k] * LocalizedPoly::one_plus_y_power(static_cast<int>(k));
    if (dim >= 1) s[1] -= LocalizedPoly(LaurentPoly::y());
    return s;
}

GradedClass<LocalizedPoly> genus_from_series_localized(const GenusSeries& q,
                                                       const BundleClass& b) {
    unsigned dim = b.pres->dimension();
    if (q.size() < dim + 1) throw error("genus series truncated below ring dimension");
    LocalizedPoly q0 = q[0];
    if (q0.is_zero()) throw error("genus series constant term must be invertible");
    LocalizedPoly q0_inv = q0.unit_inverse();

    GenusSeries normalized(dim + 1, LocalizedPoly());
    for (unsigned k = 0; k <= dim; ++k) normalized[k] = q[k] * q0_inv;
    GenusSeries logq = series_log1(normalized);

    auto power_sums = chern_to_power_sums(b);
    GradedClass<LocalizedPoly> exponent(b.pres);
    for (unsigned k = 1; k <= dim; ++k) {
        auto pk = lift<LocalizedPoly>(b.pres, power_sums[k - 1]);
        exponent += pk.scaled(logq[k]);
    }
    GradedClass<LocalizedPoly> g = series_exp(exponent);
    return g.scaled(q0.pow(b.rank));
}

GradedClass<LaurentPoly> to_laurent(const GradedClass<LocalizedPoly>& g) {
    GradedClass<LaurentPoly> r(g.presentation());
    for (auto& [m, c] : g.terms()) r.add_term(m, c.as_laurent());
    return r;
}

GradedClass<LocalizedPoly> to_localized(const GradedClass<LaurentPoly>& g) {
    GradedClass<LocalizedPoly> r(g.presentation());
    for (auto& [m, c] : g.terms()) r.add_term(m, LocalizedPoly(c));
    return r;
}

GradedClass<LaurentPoly> genus_from_series(const GenusSeries& q, const BundleClass& b) {
    return to_laurent(genus_from_series_localized(q, b));
}

GradedClass<LaurentPoly> lambda_y_character(const BundleClass& b) {
    return genus_from_series(lambda_y_genus_series(b.pres->dimension()), b);
}

GradedClass<LaurentPoly> tilde_ty_class(const BundleClass& b) {
    return genus_from_series(tilde_ty_genus_series(b.pres->dimension()), b);
}

GradedClass<LaurentPoly> todd_class(const BundleClass& b) {
    return genus_from_series(todd_genus_series(b.pres->dimension()), b);
}

GradedClass<LaurentPoly> normalized_ty_class(const BundleClass& b) {
    return genus_from_series(normalized_ty_genus_series(b.pres->dimension()), b);
}

LaurentPoly chi_y_genus(const std::vector<unsigned>& projective_factors) {
    if (projective_factors.empty()) return LaurentPoly::one();
    auto pres = RingPresentation::projective_product(projective_factors);
    auto t = BundleClass::tangent_projective_product(pres, projective_factors);
    return tilde_ty_class(t).degree_functional();
}

GradedClass<Rational> eval_y(const GradedClass<LaurentPoly>& g, const Rational& y0) {
    GradedClass<Rational> r(g.presentation());
    for (auto& [m, c] : g.terms()) r.add_term(m, c.eval_at(y0));
    return r;
}

}  // namespace mhcy
