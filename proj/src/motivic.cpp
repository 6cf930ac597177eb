#include "mhcy/motivic.hpp"

#include <sstream>

#include "mhcy/errors.hpp"

namespace mhcy {

std::shared_ptr<const MotivicRegistry> MotivicRegistry::make(
    std::string base_label, std::shared_ptr<const KPresentation> target,
    std::vector<MotivicGenerator> gens) {
    auto r = std::make_shared<MotivicRegistry>();
    r->base_ = std::move(base_label);
    r->target_ = std::move(target);
    r->gens_ = std::move(gens);
    r->validate();
    return r;
}

void MotivicRegistry::validate() const {
    for (auto& g : gens_) {
        if (g.dim < 0) throw error("negative generator dimension: " + g.name);
        if (g.euler != g.chi_y.eval_at(Rational(-1)))
            throw error("euler/chi_y mismatch for generator " + g.name);
        if (g.trivial_cotangent) {
            if (g.structure_image.presentation().get() != target_.get())
                throw error("structure image of " + g.name + " lives in the wrong K-group");
        } else {
            if (g.omega_images.size() != static_cast<std::size_t>(g.dim) + 1)
                throw error("generator " + g.name + " needs cotangent powers 0.." +
                            std::to_string(g.dim));
            for (auto& w : g.omega_images)
                if (w.presentation().get() != target_.get())
                    throw error("cotangent image of " + g.name + " lives in the wrong K-group");
        }
    }
}

unsigned MotivicRegistry::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<unsigned>(i);
    throw error("unknown motivic generator '" + name + "' over " + base_);
}

bool MotivicRegistry::has(const std::string& name) const {
    for (auto& g : gens_)
        if (g.name == name) return true;
    return false;
}

MotivicClass MotivicClass::generator(std::shared_ptr<const MotivicRegistry> reg,
                                     const std::string& name, long mult, unsigned l_exp) {
    MotivicClass m(reg);
    m.add(reg->index_of(name), l_exp, mult);
    return m;
}

void MotivicClass::add(unsigned gen, unsigned l_exp, long mult) {
    if (mult == 0) return;
    auto key = std::make_pair(gen, l_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = mult;
    } else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

void MotivicClass::check_same(const MotivicClass& o) const {
    if (reg_.get() != o.reg_.get())
        throw presentation_mismatch("motivic classes over different registries");
}

MotivicClass MotivicClass::operator-() const {
    MotivicClass r(reg_);
    for (auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
}

MotivicClass MotivicClass::operator+(const MotivicClass& o) const {
    MotivicClass r = *this;
    r += o;
    return r;
}

MotivicClass MotivicClass::operator-(const MotivicClass& o) const {
    MotivicClass r = *this;
    r -= o;
    return r;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
    check_same(o);
    for (auto& [k, v] : o.terms_) add(k.first, k.second, v);
    return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) {
    check_same(o);
    for (auto& [k, v] : o.terms_) add(k.first, k.second, -v);
    return *this;
}

MotivicClass MotivicClass::scaled(long s) const {
    MotivicClass r(reg_);
    if (s == 0) return r;
    for (auto& [k, v] : terms_) r.terms_[k] = v * s;
    return r;
}

MotivicClass MotivicClass::l_shift(unsigned k) const {
    MotivicClass r(reg_);
    for (auto& [key, v] : terms_) r.terms_[{key.first, key.second + k}] = v;
    return r;
}

bool MotivicClass::operator==(const MotivicClass& o) const {
    return reg_.get() == o.reg_.get() && terms_ == o.terms_;
}

std::string MotivicClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [key, v] : terms_) {
        long a = v;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out << a << "*";
        if (key.second > 0) {
            out << "L";
            if (key.second > 1) out << "^" << key.second;
            out << "*";
        }
        out << "[" << reg_->generators()[key.first].name << "]";
    }
    return out.str();
}

MotivicClass expand_open_stratum(const MotivicClass& closure, const MotivicClass& boundary) {
    return closure - boundary;
}

const char* to_label(TwistRule r) {
    return r == TwistRule::naive ? "naive" : "shifted";
}

TwistRule twist_rule_from_label(const std::string& s) {
    if (s == "naive") return TwistRule::naive;
    if (s == "shifted") return TwistRule::shifted;
    throw error("unknown twist rule '" + s + "'");
}

LaurentPoly twist_multiplier(TwistRule rule, unsigned l_exp) {
    if (l_exp == 0) return LaurentPoly::one();
    if (rule == TwistRule::naive) {
        LaurentPoly m = -LaurentPoly::y();
        return m.pow(l_exp);
    }
    // y (1+y)^{k-1}
    return LaurentPoly::y() * LaurentPoly::one_plus_y().pow(l_exp - 1);
}

KClass generator_hodge_chern(const MotivicGenerator& g) {
    if (g.trivial_cotangent)
        return g.structure_image.scaled(LaurentPoly::one_plus_y().pow(static_cast<unsigned>(g.dim)));
    KClass acc(g.omega_images[0].presentation());
    for (std::size_t p = 0; p < g.omega_images.size(); ++p)
        acc += g.omega_images[p].scaled(LaurentPoly::y(static_cast<int>(p)));
    return acc;
}

KClass hodge_chern(const MotivicClass& m, TwistRule rule) {
    if (!m.registry()) throw error("hodge_chern of a detached motivic class");
    KClass acc(m.registry()->target());
    for (auto& [key, mult] : m.terms()) {
        const MotivicGenerator& g = m.registry()->generators()[key.first];
        KClass base = generator_hodge_chern(g);
        acc += base.scaled(twist_multiplier(rule, key.second) * Rational(mult));
    }
    return acc;
}

LaurentPoly chi_y_of(const MotivicClass& m) {
    LaurentPoly acc;
    LaurentPoly minus_y = -LaurentPoly::y();
    for (auto& [key, mult] : m.terms()) {
        const MotivicGenerator& g = m.registry()->generators()[key.first];
        acc += g.chi_y * minus_y.pow(key.second) * Rational(mult);
    }
    return acc;
}

long euler_of(const MotivicClass& m) {
    long acc = 0;
    for (auto& [key, mult] : m.terms())
        acc += mult * m.registry()->generators()[key.first].euler;
    return acc;
}

MotivicGenerator line_product_generator(const MotivicGenerator& z) {
    MotivicGenerator g;
    g.name = "P1x" + z.name;
    g.dim = z.dim + 1;
    g.smooth = z.smooth;
    g.compact = z.compact;
    g.trivial_cotangent = false;

    // chi(P^1, O) = 1, chi(P^1, Omega^1) = -1
    std::vector<Rational> chi_p1 = {Rational(1), Rational(-1)};
    std::vector<KClass> z_omega;
    if (z.trivial_cotangent) {
        for (int p = 0; p <= z.dim; ++p)
            z_omega.push_back(z.structure_image.scaled(Rational(binomial(
                static_cast<unsigned>(z.dim), static_cast<unsigned>(p)))));
    } else {
        z_omega = z.omega_images;
    }
    auto target = z_omega[0].presentation();
    for (int p = 0; p <= g.dim; ++p) {
        KClass img(target);
        for (int a = 0; a <= 1; ++a) {
            int b = p - a;
            if (b < 0 || b > z.dim) continue;
            img += z_omega[static_cast<std::size_t>(b)].scaled(chi_p1[static_cast<std::size_t>(a)]);
        }
        g.omega_images.push_back(std::move(img));
    }
    g.chi_y = LaurentPoly::one() - LaurentPoly::y();  // chi_y(P^1)
    g.chi_y *= z.chi_y;
    g.euler = 2 * z.euler;
    return g;
}

}  // namespace mhcy
