#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhcy/bundle.hpp"
#include "mhcy/scenario.hpp"

namespace mhcy {

struct ShadowResult {
    Rational lhs = 0, rhs = 0;
    bool equal = false;
    bool pole_free = true;
};

struct SmoothRouteResult {
    bool checked = false;
    bool routes_agree = false;     // (1+y)*MHC(nearby) vs Gysin of the ambient class
    bool whitney_termwise = false; // restricted cotangent powers split off one trivial line
    bool lambda_constant = false;  // lambda_y of a trivial line is exactly 1+y
    bool pass() const { return !checked || (routes_agree && whitney_termwise && lambda_constant); }
};

struct ToddLevelResult {
    bool checked = false;
    bool homology_equal = false;
    bool normalized_equal = false;
    bool normalized_clean = false;  // no (1+y)-denominators after canonicalization
    std::string lhs, rhs;
    bool pass() const { return !checked || (homology_equal && normalized_equal && normalized_clean); }
};

struct VerificationReport {
    std::string scenario;
    TwistRule rule = TwistRule::naive;
    bool builtin = true;
    KClass lhs, rhs, defect;
    bool pass = false;
    bool rhs_divisible = false;
    ShadowResult shadow;
    SmoothRouteResult smooth;
    ToddLevelResult todd;
    std::tuple<long, long, bool> acampo{0, 0, false};
    double wall_ms = 0;

    bool all_pass() const {
        return pass && rhs_divisible && shadow.equal && std::get<2>(acampo) && smooth.pass() &&
               todd.pass();
    }
};

// (1+y) * MHC_y of the nearby class against the Gysin image of MHC_y of the
// input class, certified in the declared zero-fiber presentation.
VerificationReport check_specialization(const SNCScenario& s, TwistRule rule);

// Both routes of the smooth product comparison, including the exact constant
// lambda_y(trivial line) = 1+y and the termwise Whitney split.
SmoothRouteResult check_smooth_product(const SNCScenario& s, TwistRule rule);

// Homology-level comparison through the Todd-composed class on compact
// product scenarios, with the (1+y)-normalized variant and its
// denominator-exponent assertion.
ToddLevelResult check_todd_level(const SNCScenario& s);

// Euler-level shadow at y = -1 of the normalized identity.
ShadowResult check_euler_shadow(const SNCScenario& s, TwistRule rule);

struct CalibrationResult {
    bool unique = false;
    TwistRule chosen = TwistRule::naive;
    KClass defect_naive, defect_shifted;
};

// Runs the specialization check under both twist rules; exactly one may
// come out defect-free.
CalibrationResult calibrate(const SNCScenario& s);

struct Conventions {
    TwistRule nearby_twist = TwistRule::naive;
    std::string calibrated_on;
};

Conventions read_conventions(const std::string& path);
void write_conventions(const std::string& path, const Conventions& c);

// Runs scenarios concurrently; reports come back in input order.
std::vector<VerificationReport> run_suite(const std::vector<const SNCScenario*>& scenarios,
                                          TwistRule rule);

}  // namespace mhcy
