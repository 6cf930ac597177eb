#include "mhcy/verify.hpp"

#include <chrono>
#include <fstream>
#include <future>

#include <json.hpp>

#include "mhcy/errors.hpp"

namespace mhcy {

namespace {

unsigned base_dim(ProductBase b) {
    switch (b) {
        case ProductBase::point: return 0;
        case ProductBase::p1: return 1;
        case ProductBase::p2: return 2;
    }
    return 0;
}

BundleClass base_tangent(std::shared_ptr<const RingPresentation> pres, ProductBase b) {
    unsigned n = base_dim(b);
    if (n == 0) return BundleClass::trivial(pres, 0);
    return BundleClass::tangent_projective(pres, n);
}

// homological renormalization: the cohomological degree-c component of a
// class on a d-dimensional space picks up (1+y)^-(d-c)
GradedClass<LocalizedPoly> renormalize(const GradedClass<LaurentPoly>& g, unsigned d) {
    auto pres = g.presentation();
    GradedClass<LocalizedPoly> out(pres);
    for (auto& [m, c] : g.terms()) {
        unsigned deg = pres->degree_of(m);
        LocalizedPoly v = LocalizedPoly(c) * LocalizedPoly::one_plus_y_power(
                                                 static_cast<int>(deg) - static_cast<int>(d));
        out.add_term(m, v);
    }
    return out;
}

bool denominators_clear(const GradedClass<LocalizedPoly>& g) {
    for (auto& [m, c] : g.terms()) {
        (void)m;
        if (c.denom_exponent() != 0) return false;
    }
    return true;
}

}  // namespace

VerificationReport check_specialization(const SNCScenario& s, TwistRule rule) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.scenario = s.name;
    r.rule = rule;
    r.builtin = s.builtin_presentations;

    MotivicClass nearby = s.nearby_class();
    KClass nearby_k = hodge_chern(nearby, rule);
    r.lhs = nearby_k.scaled(LaurentPoly::one_plus_y());

    KClass ambient_k = hodge_chern(s.input_class());
    r.rhs = gysin_shriek(ambient_k, s.gysin);

    r.defect = r.lhs - r.rhs;
    r.pass = r.defect.is_zero();
    r.rhs_divisible = r.rhs.divisible_by_one_plus_y();
    r.shadow = check_euler_shadow(s, rule);
    r.acampo = s.acampo_check();
    if (s.kind == AmbientKind::product) {
        r.smooth = check_smooth_product(s, rule);
        r.todd = check_todd_level(s);
    }

    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

SmoothRouteResult check_smooth_product(const SNCScenario& s, TwistRule rule) {
    SmoothRouteResult out;
    if (s.kind != AmbientKind::product) return out;
    out.checked = true;

    // route through the zero fiber
    KClass route_a = hodge_chern(s.nearby_class(), rule).scaled(LaurentPoly::one_plus_y());
    // route through the ambient space and the Gysin map
    KClass route_b = gysin_shriek(hodge_chern(s.input_class()), s.gysin);
    out.routes_agree = route_a == route_b;

    // restricted cotangent powers of the product split off one trivial line:
    // gysin(Omega^q of X) = omega_q + omega_{q-1}
    const MotivicGenerator& idx = s.reg_x->generators()[s.reg_x->index_of("id_X")];
    const MotivicGenerator& m = s.reg_x0->generators()[s.reg_x0->index_of("M")];
    out.whitney_termwise = true;
    for (std::size_t q = 0; q < idx.omega_images.size(); ++q) {
        KClass want(s.k_x0);
        if (q < m.omega_images.size()) want += m.omega_images[q];
        if (q >= 1 && q - 1 < m.omega_images.size()) want += m.omega_images[q - 1];
        if (gysin_shriek(idx.omega_images[q], s.gysin) != want) {
            out.whitney_termwise = false;
            break;
        }
    }

    // lambda_y of a trivial line bundle, in the intersection-ring world
    auto ring = base_dim(s.base) == 0 ? RingPresentation::point()
                                      : RingPresentation::projective(base_dim(s.base));
    auto lam = lambda_y_character(BundleClass::trivial(ring, 1));
    auto expect = GradedClass<LaurentPoly>::unit(ring).scaled(LaurentPoly::one_plus_y());
    out.lambda_constant = lam == expect;
    return out;
}

ToddLevelResult check_todd_level(const SNCScenario& s) {
    ToddLevelResult out;
    if (s.kind != AmbientKind::product) return out;
    out.checked = true;

    unsigned n = base_dim(s.base);
    auto ring = n == 0 ? RingPresentation::point() : RingPresentation::projective(n);
    BundleClass tm = base_tangent(ring, s.base);
    BundleClass tx = whitney_sum(tm, BundleClass::trivial(ring, 1));

    // the Gysin map restricts pulled-back classes identically, so both sides
    // live in the base ring
    GradedClass<LaurentPoly> lhs = tilde_ty_class(tm).scaled(LaurentPoly::one_plus_y());
    GradedClass<LaurentPoly> rhs = tilde_ty_class(tx);
    out.homology_equal = lhs == rhs;
    out.lhs = lhs.to_string();
    out.rhs = rhs.to_string();

    // normalized variant: homological renormalization of both sides agrees,
    // clears every (1+y) denominator, and matches the normalized genus
    GradedClass<LocalizedPoly> norm_lhs = renormalize(tilde_ty_class(tm), n);
    GradedClass<LocalizedPoly> norm_rhs = renormalize(rhs, n + 1);
    GradedClass<LocalizedPoly> norm_direct = to_localized(normalized_ty_class(tm));
    out.normalized_equal = norm_lhs == norm_rhs && norm_lhs == norm_direct;
    out.normalized_clean = denominators_clear(norm_lhs) && denominators_clear(norm_rhs);
    return out;
}

ShadowResult check_euler_shadow(const SNCScenario& s, TwistRule rule) {
    ShadowResult out;
    KClass nearby_k = hodge_chern(s.nearby_class(), rule);
    KClass rhs = gysin_shriek(hodge_chern(s.input_class()), s.gysin);
    KClass rhs_normalized;
    try {
        rhs_normalized = rhs.divide_by_one_plus_y();
    } catch (const divisibility_error&) {
        out.pole_free = false;
        out.equal = false;
        return out;
    }
    out.lhs = nearby_k.euler_pairing_at(Rational(-1));
    out.rhs = rhs_normalized.euler_pairing_at(Rational(-1));
    out.equal = out.lhs == out.rhs &&
                nearby_k.eval_at(Rational(-1)) == rhs_normalized.eval_at(Rational(-1));
    return out;
}

CalibrationResult calibrate(const SNCScenario& s) {
    CalibrationResult out;
    auto naive = check_specialization(s, TwistRule::naive);
    auto shifted = check_specialization(s, TwistRule::shifted);
    out.defect_naive = naive.defect;
    out.defect_shifted = shifted.defect;
    out.unique = naive.pass != shifted.pass;
    if (out.unique) out.chosen = naive.pass ? TwistRule::naive : TwistRule::shifted;
    return out;
}

Conventions read_conventions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot read conventions file '" + path + "'");
    nlohmann::json j;
    in >> j;
    Conventions c;
    c.nearby_twist = twist_rule_from_label(j.at("nearby_twist").get<std::string>());
    c.calibrated_on = j.value("calibrated_on", "");
    return c;
}

void write_conventions(const std::string& path, const Conventions& c) {
    nlohmann::ordered_json j;
    j["nearby_twist"] = to_label(c.nearby_twist);
    j["calibrated_on"] = c.calibrated_on;
    std::ofstream out(path);
    if (!out) throw error("cannot write conventions file '" + path + "'");
    out << j.dump(2) << "\n";
}

std::vector<VerificationReport> run_suite(const std::vector<const SNCScenario*>& scenarios,
                                          TwistRule rule) {
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(scenarios.size());
    for (const SNCScenario* s : scenarios)
        futures.push_back(std::async(std::launch::async,
                                     [s, rule] { return check_specialization(*s, rule); }));
    std::vector<VerificationReport> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace mhcy
