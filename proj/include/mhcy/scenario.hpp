#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "mhcy/builtin_kgroups.hpp"
#include "mhcy/motivic.hpp"

namespace mhcy {

enum class AmbientKind { affine, product };
enum class ProductBase { point, p1, p2 };

const char* to_label(ProductBase b);
ProductBase product_base_from_label(const std::string& s);

struct DivisorComponent {
    std::string name;   // E1, E2, ... (or M0 for products)
    unsigned coord = 0; // affine coordinate index, 0-based
    unsigned mult = 1;
};

struct StratumInfo {
    std::vector<unsigned> comps;  // sorted component indices, nonempty
    std::string name;             // motivic generator name
    int dim = 0;
};

// Declarative description of a function with normal-crossing zero divisor:
// components with multiplicities, the intersection poset with per-stratum
// class data, cover classes, K-presentations for the ambient space and the
// zero fiber, and the Gysin table.
struct SNCScenario {
    std::string name;
    AmbientKind kind = AmbientKind::affine;

    // affine data
    unsigned ambient_dim = 0;
    std::vector<std::string> coords;
    std::vector<unsigned> exponents;  // per coordinate; empty for projections

    // product data
    ProductBase base = ProductBase::point;

    std::vector<DivisorComponent> components;
    std::vector<StratumInfo> strata;
    std::map<std::vector<unsigned>, MotivicClass> covers;  // declared covers only

    std::shared_ptr<const KPresentation> k_x, k_x0;
    std::shared_ptr<const MotivicRegistry> reg_x0, reg_x;
    GysinTable gysin;
    bool builtin_presentations = true;
    std::string input_generator = "id_X";

    static SNCScenario affine_monomial(const std::string& name,
                                       const std::vector<unsigned>& exponents);
    static SNCScenario product(const std::string& name, ProductBase base);

    // cover class for the stratum cut out by the named components
    void declare_cover(const std::vector<std::string>& component_names, MotivicClass cls);

    void validate() const;  // throws scenario_error

    const StratumInfo& stratum(const std::vector<unsigned>& comps) const;
    unsigned stratum_gcd(const StratumInfo& s) const;

    // inclusion-exclusion expansion of the open part of a closed stratum
    MotivicClass open_stratum_class(const StratumInfo& s) const;
    MotivicClass cover_class(const StratumInfo& s) const;  // declared or default

    // sum over nonempty I of (1-L)^{|I|-1} [cover of the open stratum]
    MotivicClass nearby_class() const;
    // inclusion-exclusion class of the reduced fiber
    MotivicClass reduced_fiber_class() const;
    // nearby minus reduced fiber
    MotivicClass vanishing_class() const;

    // (euler of nearby, sum_i m_i * euler of open stratum, equal?)
    std::tuple<long, long, bool> acampo_check() const;

    MotivicClass input_class() const;  // [id_X] (or the selected input generator)
    bool smooth_reduced() const;
};

}  // namespace mhcy
