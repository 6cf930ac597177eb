#include "mhcy/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mhcy/errors.hpp"

namespace mhcy {

const char* to_label(ProductBase b) {
    switch (b) {
        case ProductBase::point: return "pt";
        case ProductBase::p1: return "P1";
        case ProductBase::p2: return "P2";
    }
    return "?";
}

ProductBase product_base_from_label(const std::string& s) {
    if (s == "pt") return ProductBase::point;
    if (s == "P1") return ProductBase::p1;
    if (s == "P2") return ProductBase::p2;
    throw scenario_error(scenario_errc::schema, "unknown product base '" + s + "'");
}

namespace {

std::string stratum_name(const std::vector<unsigned>& comps,
                         const std::vector<DivisorComponent>& components, int dim) {
    if (dim == 0) return "pt";
    if (comps.size() == 1) return components[comps[0]].name;
    std::string nm = "E";
    for (unsigned c : comps) nm += std::to_string(c + 1);
    return nm;
}

std::vector<std::vector<unsigned>> nonempty_subsets(unsigned c) {
    std::vector<std::vector<unsigned>> out;
    for (unsigned mask = 1; mask < (1u << c); ++mask) {
        std::vector<unsigned> s;
        for (unsigned i = 0; i < c; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

SNCScenario SNCScenario::affine_monomial(const std::string& name,
                                         const std::vector<unsigned>& exponents) {
    SNCScenario s;
    s.name = name;
    s.kind = AmbientKind::affine;
    s.ambient_dim = static_cast<unsigned>(exponents.size());
    s.exponents = exponents;
    for (unsigned i = 0; i < s.ambient_dim; ++i)
        s.coords.push_back("x" + std::to_string(i + 1));

    for (unsigned i = 0; i < s.ambient_dim; ++i)
        if (exponents[i] >= 1)
            s.components.push_back(
                {"E" + std::to_string(s.components.size() + 1), i, exponents[i]});
    unsigned c = static_cast<unsigned>(s.components.size());
    if (c == 0)
        throw scenario_error(scenario_errc::invariant, "monomial function has empty divisor");

    for (auto& comps : nonempty_subsets(c)) {
        int dim = static_cast<int>(s.ambient_dim) - static_cast<int>(comps.size());
        s.strata.push_back({comps, stratum_name(comps, s.components, dim), dim});
    }

    bool squarefree = std::all_of(s.components.begin(), s.components.end(),
                                  [](const DivisorComponent& d) { return d.mult == 1; });
    bool with_union_gen = squarefree && c >= 2;

    // zero-fiber K-presentation: optional reduced-union generator first, then
    // one structure sheaf per stratum; inclusion-exclusion relation rewrites
    // the union class.
    std::vector<KGenerator> kgens;
    std::vector<std::vector<Rational>> rels;
    if (with_union_gen)
        kgens.push_back({"O_X0", static_cast<int>(s.ambient_dim) - 1, Rational(1)});
    for (auto& st : s.strata) kgens.push_back({"O_" + st.name, st.dim, Rational(1)});
    if (with_union_gen) {
        std::vector<Rational> rel(kgens.size(), Rational(0));
        rel[0] = 1;
        for (std::size_t i = 0; i < s.strata.size(); ++i) {
            unsigned sz = static_cast<unsigned>(s.strata[i].comps.size());
            rel[i + 1] = (sz % 2) ? Rational(-1) : Rational(1);
        }
        rels.push_back(std::move(rel));
    }
    s.k_x0 = KPresentation::make("G0(" + name + ":X0)", std::move(kgens), std::move(rels), true);

    s.k_x = KPresentation::make("G0(" + name + ":X)",
                                {{"O_X", static_cast<int>(s.ambient_dim), Rational(0)}}, {}, true);

    // Gysin image of O_X: lengths along components plus the reduced union
    KClass img(s.k_x0);
    for (auto& comp : s.components) {
        if (comp.mult > 1) {
            auto one_comp =
                std::find_if(s.strata.begin(), s.strata.end(), [&](const StratumInfo& st) {
                    return st.comps.size() == 1 && s.components[st.comps[0]].name == comp.name;
                });
            img += KClass::generator(s.k_x0, "O_" + one_comp->name,
                                     LaurentPoly(Rational(comp.mult - 1)));
        }
    }
    if (with_union_gen) {
        img += KClass::generator(s.k_x0, "O_X0");
    } else if (c == 1) {
        img += KClass::generator(s.k_x0, "O_" + s.strata[0].name);
    } else {
        // non-squarefree with several components: reduced union expanded by
        // inclusion-exclusion over the strata
        for (auto& st : s.strata) {
            long sign = (st.comps.size() % 2) ? 1 : -1;
            img += KClass::generator(s.k_x0, "O_" + st.name, LaurentPoly(Rational(sign)));
        }
    }
    s.gysin.source = s.k_x;
    s.gysin.target = s.k_x0;
    s.gysin.set("O_X", img);

    std::vector<MotivicGenerator> mgens;
    for (auto& st : s.strata) {
        MotivicGenerator g;
        g.name = st.name;
        g.dim = st.dim;
        g.smooth = true;
        g.compact = (st.dim == 0);
        g.trivial_cotangent = true;
        g.structure_image = KClass::generator(s.k_x0, "O_" + st.name);
        LaurentPoly my = -LaurentPoly::y();
        g.chi_y = my.pow(static_cast<unsigned>(st.dim));
        g.euler = 1;
        mgens.push_back(std::move(g));
    }
    s.reg_x0 = MotivicRegistry::make(name + ":X0", s.k_x0, std::move(mgens));

    MotivicGenerator idx;
    idx.name = "id_X";
    idx.dim = static_cast<int>(s.ambient_dim);
    idx.smooth = true;
    idx.compact = false;
    idx.trivial_cotangent = true;
    idx.structure_image = KClass::generator(s.k_x, "O_X");
    LaurentPoly my = -LaurentPoly::y();
    idx.chi_y = my.pow(s.ambient_dim);
    idx.euler = 1;
    std::vector<MotivicGenerator> xg;
    xg.push_back(std::move(idx));
    s.reg_x = MotivicRegistry::make(name + ":X", s.k_x, std::move(xg));
    return s;
}

SNCScenario SNCScenario::product(const std::string& name, ProductBase base) {
    SNCScenario s;
    s.name = name;
    s.kind = AmbientKind::product;
    s.base = base;
    unsigned n = base == ProductBase::point ? 0 : (base == ProductBase::p1 ? 1 : 2);
    s.ambient_dim = n + 1;
    s.components.push_back({"M0", 0, 1});
    s.strata.push_back({{0}, "M", static_cast<int>(n)});

    s.k_x0 = base == ProductBase::point ? point_kgroup() : projective_kgroup(n);

    // ambient presentation: pullbacks of the base twists; the Euler pairing
    // is only evaluated on the zero-fiber side
    std::vector<KGenerator> xgens;
    for (auto& g : s.k_x0->generators())
        xgens.push_back({"pr*" + g.name, g.dim + 1, Rational(0)});
    s.k_x = KPresentation::make("G0(" + name + ":X)", std::move(xgens), {}, true);

    s.gysin.source = s.k_x;
    s.gysin.target = s.k_x0;
    for (auto& g : s.k_x0->generators())
        s.gysin.set("pr*" + g.name, KClass::generator(s.k_x0, g.name));

    auto pullback = [&](const KClass& cls) {
        KClass out(s.k_x);
        for (auto& [gi, coeff] : cls.coefficients())
            out += KClass::generator(s.k_x, "pr*" + s.k_x0->generators()[gi].name, coeff);
        return out;
    };

    auto chi_projective = [](unsigned m) {
        LaurentPoly acc;
        LaurentPoly my = -LaurentPoly::y();
        for (unsigned p = 0; p <= m; ++p) acc += my.pow(p);
        return acc;
    };

    std::vector<KClass> omega;  // Omega^p of the base in its own K-group
    if (base == ProductBase::point) {
        omega.push_back(KClass::generator(s.k_x0, "O_pt"));
    } else {
        for (unsigned p = 0; p <= n; ++p) omega.push_back(projective_omega(s.k_x0, n, p));
    }

    MotivicGenerator mg;
    mg.name = "M";
    mg.dim = static_cast<int>(n);
    mg.smooth = true;
    mg.compact = true;
    mg.omega_images = omega;
    mg.chi_y = chi_projective(n);
    mg.euler = static_cast<long>(n) + 1;
    std::vector<MotivicGenerator> x0_gens;
    x0_gens.push_back(std::move(mg));

    MotivicGenerator idx;
    idx.name = "id_X";
    idx.dim = static_cast<int>(n) + 1;
    idx.smooth = true;
    idx.compact = false;
    for (unsigned q = 0; q <= n + 1; ++q) {
        KClass img(s.k_x);
        if (q <= n) img += pullback(omega[q]);
        if (q >= 1 && q - 1 <= n) img += pullback(omega[q - 1]);
        idx.omega_images.push_back(std::move(img));
    }
    idx.chi_y = (-LaurentPoly::y()) * chi_projective(n);
    idx.euler = static_cast<long>(n) + 1;
    std::vector<MotivicGenerator> x_gens;
    x_gens.push_back(std::move(idx));

    if (base == ProductBase::p2) {
        // a line P^1 inside P^2 and its cylinder upstairs; extra admissible
        // input for the specialization check
        MotivicGenerator z;
        z.name = "Z_P1";
        z.dim = 1;
        z.smooth = true;
        z.compact = true;
        z.omega_images.push_back(hyperplane_twist_pushforward(s.k_x0, 2, 0));
        z.omega_images.push_back(hyperplane_twist_pushforward(s.k_x0, 2, 2));
        z.chi_y = chi_projective(1);
        z.euler = 2;

        MotivicGenerator zc;
        zc.name = "Z_P1xA1";
        zc.dim = 2;
        zc.smooth = true;
        zc.compact = false;
        for (unsigned q = 0; q <= 2; ++q) {
            KClass img(s.k_x);
            if (q <= 1) img += pullback(z.omega_images[q]);
            if (q >= 1) img += pullback(z.omega_images[q - 1]);
            zc.omega_images.push_back(std::move(img));
        }
        zc.chi_y = (-LaurentPoly::y()) * chi_projective(1);
        zc.euler = 2;

        x0_gens.push_back(std::move(z));
        x_gens.push_back(std::move(zc));
    }

    s.reg_x0 = MotivicRegistry::make(name + ":X0", s.k_x0, std::move(x0_gens));
    s.reg_x = MotivicRegistry::make(name + ":X", s.k_x, std::move(x_gens));
    return s;
}

void SNCScenario::declare_cover(const std::vector<std::string>& component_names,
                                MotivicClass cls) {
    std::vector<unsigned> comps;
    for (auto& nm : component_names) {
        auto it = std::find_if(components.begin(), components.end(),
                               [&](const DivisorComponent& d) { return d.name == nm; });
        if (it == components.end())
            throw scenario_error(scenario_errc::crossref,
                                 "cover names unknown component '" + nm + "'");
        comps.push_back(static_cast<unsigned>(it - components.begin()));
    }
    std::sort(comps.begin(), comps.end());
    covers[comps] = std::move(cls);
}

const StratumInfo& SNCScenario::stratum(const std::vector<unsigned>& comps) const {
    for (auto& st : strata)
        if (st.comps == comps) return st;
    throw scenario_error(scenario_errc::crossref, "stratum not declared");
}

unsigned SNCScenario::stratum_gcd(const StratumInfo& s) const {
    unsigned g = 0;
    for (unsigned c : s.comps) g = std::gcd(g, components[c].mult);
    return g;
}

MotivicClass SNCScenario::open_stratum_class(const StratumInfo& s) const {
    MotivicClass acc(reg_x0);
    for (auto& st : strata) {
        if (!std::includes(st.comps.begin(), st.comps.end(), s.comps.begin(), s.comps.end()))
            continue;
        long sign = ((st.comps.size() - s.comps.size()) % 2) ? -1 : 1;
        acc.add(reg_x0->index_of(st.name), 0, sign);
    }
    return acc;
}

MotivicClass SNCScenario::cover_class(const StratumInfo& s) const {
    auto it = covers.find(s.comps);
    if (it != covers.end()) return it->second;
    if (stratum_gcd(s) > 1)
        throw scenario_error(scenario_errc::invariant,
                             "missing cover data for stratum " + s.name);
    return open_stratum_class(s);
}

MotivicClass SNCScenario::nearby_class() const {
    MotivicClass acc(reg_x0);
    for (auto& st : strata) {
        MotivicClass cover = cover_class(st);
        unsigned j = static_cast<unsigned>(st.comps.size());
        // (1-L)^{j-1} = sum_i C(j-1,i) (-1)^i L^i
        for (unsigned i = 0; i + 1 <= j; ++i) {
            long coeff = binomial(j - 1, i);
            if (i % 2) coeff = -coeff;
            acc += cover.l_shift(i).scaled(coeff);
        }
    }
    return acc;
}

MotivicClass SNCScenario::reduced_fiber_class() const {
    MotivicClass acc(reg_x0);
    for (auto& st : strata) {
        long sign = (st.comps.size() % 2) ? 1 : -1;
        acc.add(reg_x0->index_of(st.name), 0, sign);
    }
    return acc;
}

MotivicClass SNCScenario::vanishing_class() const {
    return nearby_class() - reduced_fiber_class();
}

std::tuple<long, long, bool> SNCScenario::acampo_check() const {
    long lhs = euler_of(nearby_class());
    long rhs = 0;
    for (auto& st : strata) {
        if (st.comps.size() != 1) continue;
        rhs += static_cast<long>(components[st.comps[0]].mult) *
               euler_of(open_stratum_class(st));
    }
    return {lhs, rhs, lhs == rhs};
}

MotivicClass SNCScenario::input_class() const {
    return MotivicClass::generator(reg_x, input_generator);
}

bool SNCScenario::smooth_reduced() const {
    return components.size() == 1 && components[0].mult == 1;
}

void SNCScenario::validate() const {
    for (auto& c : components)
        if (c.mult < 1)
            throw scenario_error(scenario_errc::invariant, "multiplicity must be positive");
    if (kind == AmbientKind::affine) {
        if (exponents.size() != ambient_dim)
            throw scenario_error(scenario_errc::schema, "exponent arity mismatch");
        std::map<unsigned, unsigned> declared;
        for (auto& c : components) {
            if (c.coord >= ambient_dim)
                throw scenario_error(scenario_errc::crossref,
                                     "component coordinate out of range");
            if (!declared.emplace(c.coord, c.mult).second)
                throw scenario_error(scenario_errc::invariant,
                                     "duplicate component on one coordinate");
        }
        // the divisor of the monomial is exactly the declared components
        for (unsigned i = 0; i < ambient_dim; ++i) {
            unsigned want = exponents[i];
            auto it = declared.find(i);
            unsigned got = it == declared.end() ? 0 : it->second;
            if (want != got)
                throw scenario_error(scenario_errc::invariant,
                                     "divisor mismatch: coordinate " + std::to_string(i + 1) +
                                         " carries multiplicity " + std::to_string(got) +
                                         ", function requires " + std::to_string(want));
        }
    }
    for (auto& a : strata)
        for (auto& b : strata) {
            std::vector<unsigned> u;
            std::set_union(a.comps.begin(), a.comps.end(), b.comps.begin(), b.comps.end(),
                           std::back_inserter(u));
            bool found = std::any_of(strata.begin(), strata.end(),
                                     [&](const StratumInfo& st) { return st.comps == u; });
            if (!found)
                throw scenario_error(scenario_errc::invariant,
                                     "stratum poset not closed under intersection");
        }
    for (auto& st : strata)
        if (!reg_x0->has(st.name))
            throw scenario_error(scenario_errc::crossref,
                                 "stratum " + st.name + " has no registered class data");
    if (!reg_x->has(input_generator))
        throw scenario_error(scenario_errc::crossref,
                             "input generator " + input_generator + " is not registered");
    for (auto& st : strata) {
        unsigned g = stratum_gcd(st);
        auto it = covers.find(st.comps);
        if (g > 1 && it == covers.end())
            throw scenario_error(scenario_errc::invariant,
                                 "missing cover data for stratum " + st.name);
        if (it != covers.end()) {
            if (g == 1 && it->second != open_stratum_class(st))
                throw scenario_error(
                    scenario_errc::invariant,
                    "cover for " + st.name +
                        " must equal the open stratum when multiplicities are 1");
            long expect = static_cast<long>(g) * euler_of(open_stratum_class(st));
            if (euler_of(it->second) != expect)
                throw scenario_error(scenario_errc::invariant,
                                     "cover for " + st.name + " has Euler characteristic " +
                                         std::to_string(euler_of(it->second)) + ", expected " +
                                         std::to_string(expect));
        }
    }
}

}  // namespace mhcy
