#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "mhcy/errors.hpp"
#include "mhcy/laurent.hpp"
#include "mhcy/rational.hpp"

namespace mhcy {

// Exponent vector over the presentation's generators.
using Monomial = std::vector<unsigned>;

// A graded commutative ring given by generators with degrees, monomials
// forced to zero, homogeneous linear relations among generators, and a
// truncation dimension. Products reduce to a unique normal form.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    struct Generator {
        std::string name;
        unsigned degree;
    };

    enum class Strategy { low_pivot_first, high_pivot_first };

    static std::shared_ptr<const RingPresentation> point();
    static std::shared_ptr<const RingPresentation> projective(unsigned n);
    static std::shared_ptr<const RingPresentation> projective_product(const std::vector<unsigned>& ns);
    static std::shared_ptr<const RingPresentation> user(
        std::vector<Generator> gens,
        std::vector<Monomial> monomial_relations,
        std::vector<std::vector<Rational>> linear_relations,
        unsigned dimension,
        Monomial point_class);

    unsigned dimension() const { return dim_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Monomial& point_class() const { return point_; }
    const std::string& name() const { return name_; }

    unsigned degree_of(const Monomial& m) const;
    std::string monomial_name(const Monomial& m) const;

    // Accumulates c * (normal form of m) into acc.
    template <class Coeff>
    void reduce_into(std::map<Monomial, Coeff>& acc, const Monomial& m, const Coeff& c,
                     Strategy strategy = Strategy::low_pivot_first) const;

    // Reduces `samples` random generator products along both strategies and
    // in both association orders; throws on any disagreement.
    void confluence_self_test(unsigned samples, unsigned seed) const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::vector<Monomial> monomial_rels_;
    struct LinearRule {
        unsigned pivot;
        std::vector<std::pair<unsigned, Rational>> tail;  // pivot = sum tail
    };
    std::vector<LinearRule> rules_;
    unsigned dim_ = 0;
    Monomial point_;

    void build_rules(std::vector<std::vector<Rational>> raw);
    void validate() const;
    bool killed_by_monomial_relation(const Monomial& m) const;
    int find_pivot_in(const Monomial& m, Strategy s) const;
};

namespace detail {

template <class Coeff>
Coeff coeff_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<Coeff, Rational>)
        return r;
    else
        return Coeff(r);
}

template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Rational>)
        return c == 0;
    else
        return c.is_zero();
}

template <class Coeff>
std::string coeff_to_string(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Rational>)
        return to_string(c);
    else
        return c.to_string();
}

}  // namespace detail

template <class Coeff>
void RingPresentation::reduce_into(std::map<Monomial, Coeff>& acc, const Monomial& m,
                                   const Coeff& c, Strategy strategy) const {
    if (degree_of(m) > dim_) return;
    if (killed_by_monomial_relation(m)) return;
    int pivot_rule = find_pivot_in(m, strategy);
    if (pivot_rule < 0) {
        auto it = acc.find(m);
        if (it == acc.end()) {
            if (!detail::coeff_is_zero(c)) acc[m] = c;
        } else {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) acc.erase(it);
        }
        return;
    }
    const LinearRule& rule = rules_[static_cast<std::size_t>(pivot_rule)];
    Monomial rest = m;
    --rest[rule.pivot];
    for (auto& [g, t] : rule.tail) {
        Monomial next = rest;
        ++next[g];
        reduce_into(acc, next, Coeff(c * t), strategy);
    }
}

// Element of a presented graded ring with coefficients in Coeff (exact
// rationals, Laurent polynomials in y, or the (1+y)-localized ring).
template <class Coeff>
class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(std::shared_ptr<const RingPresentation> pres) : pres_(std::move(pres)) {}

    static GradedClass unit(std::shared_ptr<const RingPresentation> pres) {
        GradedClass g(std::move(pres));
        g.add_term(Monomial(g.pres_->generators().size(), 0), detail::coeff_from_rational<Coeff>(Rational(1)));
        return g;
    }

    static GradedClass generator(std::shared_ptr<const RingPresentation> pres, unsigned index) {
        GradedClass g(pres);
        Monomial m(pres->generators().size(), 0);
        m[index] = 1;
        g.add_term(m, detail::coeff_from_rational<Coeff>(Rational(1)));
        return g;
    }

    const std::shared_ptr<const RingPresentation>& presentation() const { return pres_; }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Coeff& c) {
        pres_->reduce_into(terms_, m, c);
    }

    GradedClass operator-() const {
        GradedClass r(pres_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    GradedClass& operator+=(const GradedClass& o) {
        check_same(o);
        for (auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_[m] = c;
            } else {
                it->second += c;
                if (detail::coeff_is_zero(it->second)) terms_.erase(it);
            }
        }
        return *this;
    }

    GradedClass& operator-=(const GradedClass& o) { return *this += -o; }
    GradedClass operator+(const GradedClass& o) const {
        GradedClass r = *this;
        r += o;
        return r;
    }
    GradedClass operator-(const GradedClass& o) const {
        GradedClass r = *this;
        r -= o;
        return r;
    }

    GradedClass operator*(const GradedClass& o) const {
        check_same(o);
        GradedClass r(pres_);
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) {
                Coeff p = c1 * c2;
                if (detail::coeff_is_zero(p)) continue;
                Monomial m(m1.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
                pres_->reduce_into(r.terms_, m, p);
            }
        return r;
    }

    GradedClass& operator*=(const GradedClass& o) {
        *this = *this * o;
        return *this;
    }

    GradedClass scaled(const Coeff& s) const {
        GradedClass r(pres_);
        if (detail::coeff_is_zero(s)) return r;
        for (auto& [m, c] : terms_) {
            Coeff p = c * s;
            if (!detail::coeff_is_zero(p)) r.terms_[m] = p;
        }
        return r;
    }

    template <class C = Coeff, class = std::enable_if_t<!std::is_same_v<C, Rational>>>
    GradedClass scaled(const Rational& s) const {
        return scaled(detail::coeff_from_rational<Coeff>(s));
    }

    bool operator==(const GradedClass& o) const {
        return pres_.get() == o.pres_.get() && terms_ == o.terms_;
    }
    bool operator!=(const GradedClass& o) const { return !(*this == o); }

    GradedClass component(unsigned degree) const {
        GradedClass r(pres_);
        for (auto& [m, c] : terms_)
            if (pres_->degree_of(m) == degree) r.terms_[m] = c;
        return r;
    }

    Coeff constant_term() const {
        Monomial unit_m(pres_->generators().size(), 0);
        auto it = terms_.find(unit_m);
        return it == terms_.end() ? detail::coeff_from_rational<Coeff>(Rational(0)) : it->second;
    }

    // Coefficient of the point class; zero on everything below top degree.
    Coeff degree_functional() const {
        auto it = terms_.find(pres_->point_class());
        return it == terms_.end() ? detail::coeff_from_rational<Coeff>(Rational(0)) : it->second;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // degree-major ordering for readability
        std::map<std::pair<unsigned, Monomial>, const Coeff*> ordered;
        for (auto& [m, c] : terms_) ordered[{pres_->degree_of(m), m}] = &c;
        std::string out;
        bool first = true;
        for (auto& [key, c] : ordered) {
            if (!first) out += " + ";
            first = false;
            std::string mono = pres_->monomial_name(key.second);
            std::string cs = detail::coeff_to_string(*c);
            if (mono == "1") {
                out += cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                bool wrap = cs.find(' ') != std::string::npos;
                out += (wrap ? "(" + cs + ")" : cs) + "*" + mono;
            }
        }
        return out;
    }

private:
    std::shared_ptr<const RingPresentation> pres_;
    std::map<Monomial, Coeff> terms_;

    void check_same(const GradedClass& o) const {
        if (pres_.get() != o.pres_.get())
            throw presentation_mismatch("graded classes over different presentations");
    }
};

template <class Coeff>
GradedClass<Coeff> lift(std::shared_ptr<const RingPresentation> pres,
                        const GradedClass<Rational>& g) {
    GradedClass<Coeff> r(pres);
    for (auto& [m, c] : g.terms()) r.add_term(m, detail::coeff_from_rational<Coeff>(c));
    return r;
}

// exp of a class with zero constant term; truncation makes the sum finite.
template <class Coeff>
GradedClass<Coeff> series_exp(const GradedClass<Coeff>& s) {
    if (!detail::coeff_is_zero(s.constant_term()))
        throw error("series_exp requires zero constant term");
    auto pres = s.presentation();
    GradedClass<Coeff> acc = GradedClass<Coeff>::unit(pres);
    GradedClass<Coeff> power = GradedClass<Coeff>::unit(pres);
    Rational factorial(1);
    for (unsigned k = 1; k <= pres->dimension(); ++k) {
        power *= s;
        if (power.is_zero()) break;
        factorial *= k;
        acc += power.scaled(Rational(1) / factorial);
    }
    return acc;
}

// log of a class with constant term 1.
template <class Coeff>
GradedClass<Coeff> series_log(const GradedClass<Coeff>& u) {
    auto pres = u.presentation();
    GradedClass<Coeff> v = u - GradedClass<Coeff>::unit(pres);
    if (!detail::coeff_is_zero(v.constant_term()))
        throw error("series_log requires constant term 1");
    GradedClass<Coeff> acc(pres);
    GradedClass<Coeff> power = GradedClass<Coeff>::unit(pres);
    for (unsigned k = 1; k <= pres->dimension(); ++k) {
        power *= v;
        if (power.is_zero()) break;
        Rational c = Rational((k % 2) ? 1 : -1) / Rational(static_cast<long>(k));
        acc += power.scaled(c);
    }
    return acc;
}

// sum q_k s^k for a univariate series q, with s of zero constant term.
template <class Coeff>
GradedClass<Coeff> series_compose(const std::vector<Coeff>& q, const GradedClass<Coeff>& s) {
    if (!detail::coeff_is_zero(s.constant_term()))
        throw error("series_compose requires zero constant term in the inner class");
    auto pres = s.presentation();
    GradedClass<Coeff> acc(pres);
    GradedClass<Coeff> power = GradedClass<Coeff>::unit(pres);
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (k > 0) {
            power *= s;
            if (power.is_zero()) break;
        }
        acc += power.scaled(q[k]);
    }
    return acc;
}

}  // namespace mhcy
