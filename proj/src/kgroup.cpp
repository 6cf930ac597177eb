#include "mhcy/kgroup.hpp"

#include <random>
#include <sstream>

#include "mhcy/errors.hpp"

namespace mhcy {

std::shared_ptr<const KPresentation> KPresentation::make(
    std::string name, std::vector<KGenerator> gens,
    std::vector<std::vector<Rational>> relations, bool builtin) {
    auto p = std::make_shared<KPresentation>();
    p->name_ = std::move(name);
    p->gens_ = std::move(gens);
    p->raw_relations_ = std::move(relations);
    p->builtin_ = builtin;
    p->build_rules();
    p->validate();
    return p;
}

unsigned KPresentation::index_of(const std::string& gen_name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == gen_name) return static_cast<unsigned>(i);
    throw error("unknown K-group generator '" + gen_name + "' in " + name_);
}

bool KPresentation::has(const std::string& gen_name) const {
    for (auto& g : gens_)
        if (g.name == gen_name) return true;
    return false;
}

void KPresentation::build_rules() {
    std::size_t ng = gens_.size();
    std::vector<std::vector<Rational>> rows;
    for (auto& r : raw_relations_) {
        if (r.size() != ng) throw error("relation arity mismatch in K-presentation " + name_);
        rows.push_back(r);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ng && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational lead = rows[rank][col];
        for (auto& v : rows[rank]) v /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = 0; c < ng; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t pivot = 0;
        while (pivot < ng && rows[r][pivot] == 0) ++pivot;
        if (pivot == ng) continue;
        Rule rule;
        rule.pivot = static_cast<unsigned>(pivot);
        for (std::size_t c = pivot + 1; c < ng; ++c)
            if (rows[r][c] != 0) rule.tail.push_back({static_cast<unsigned>(c), -rows[r][c]});
        rules_.push_back(std::move(rule));
    }
}

void KPresentation::validate() const {
    // the Euler functional must kill every declared relation
    for (auto& rel : raw_relations_) {
        Rational acc(0);
        for (std::size_t i = 0; i < rel.size(); ++i) acc += rel[i] * gens_[i].euler;
        if (acc != 0)
            throw error("Euler data inconsistent with a relation in K-presentation " + name_);
    }
}

void KPresentation::normalize(std::map<unsigned, LaurentPoly>& coeff) const {
    for (auto& rule : rules_) {
        auto it = coeff.find(rule.pivot);
        if (it == coeff.end()) continue;
        LaurentPoly c = it->second;
        coeff.erase(it);
        for (auto& [g, t] : rule.tail) {
            LaurentPoly add = c * t;
            auto jt = coeff.find(g);
            if (jt == coeff.end()) {
                if (!add.is_zero()) coeff[g] = add;
            } else {
                jt->second += add;
                if (jt->second.is_zero()) coeff.erase(jt);
            }
        }
    }
}

void KPresentation::normalize_reversed(std::map<unsigned, LaurentPoly>& coeff) const {
    for (auto r = rules_.rbegin(); r != rules_.rend(); ++r) {
        auto it = coeff.find(r->pivot);
        if (it == coeff.end()) continue;
        LaurentPoly c = it->second;
        coeff.erase(it);
        for (auto& [g, t] : r->tail) {
            LaurentPoly add = c * t;
            auto jt = coeff.find(g);
            if (jt == coeff.end()) {
                if (!add.is_zero()) coeff[g] = add;
            } else {
                jt->second += add;
                if (jt->second.is_zero()) coeff.erase(jt);
            }
        }
    }
}

void KPresentation::self_test(unsigned samples, unsigned seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<int> exp_dist(-1, 2);
    for (unsigned s = 0; s < samples; ++s) {
        std::map<unsigned, LaurentPoly> raw;
        for (unsigned g = 0; g < gens_.size(); ++g) {
            LaurentPoly c = LaurentPoly::term(Rational(coeff_dist(rng)), exp_dist(rng));
            if (!c.is_zero()) raw[g] = c;
        }
        auto a = raw;
        auto b = raw;
        normalize(a);
        normalize_reversed(b);
        if (a != b) throw error("normal-form self-test failed for K-presentation " + name_);
        auto c = a;
        normalize(c);
        if (c != a) throw error("normalization not idempotent for K-presentation " + name_);
        // every raw relation must normalize to zero
        for (auto& rel : raw_relations_) {
            std::map<unsigned, LaurentPoly> r;
            for (std::size_t i = 0; i < rel.size(); ++i)
                if (rel[i] != 0) r[static_cast<unsigned>(i)] = LaurentPoly(rel[i]);
            normalize(r);
            if (!r.empty()) throw error("relation does not normalize to zero in " + name_);
        }
    }
}

KClass::KClass(std::shared_ptr<const KPresentation> pres, std::map<unsigned, LaurentPoly> raw)
    : pres_(std::move(pres)), coeff_(std::move(raw)) {
    for (auto it = coeff_.begin(); it != coeff_.end();) {
        if (it->second.is_zero())
            it = coeff_.erase(it);
        else
            ++it;
    }
    pres_->normalize(coeff_);
}

KClass KClass::generator(std::shared_ptr<const KPresentation> pres, const std::string& name,
                         LaurentPoly coeff) {
    unsigned idx = pres->index_of(name);
    std::map<unsigned, LaurentPoly> raw;
    if (!coeff.is_zero()) raw[idx] = std::move(coeff);
    return KClass(std::move(pres), std::move(raw));
}

LaurentPoly KClass::coefficient(const std::string& gen_name) const {
    auto it = coeff_.find(pres_->index_of(gen_name));
    return it == coeff_.end() ? LaurentPoly::zero() : it->second;
}

void KClass::check_same(const KClass& o) const {
    if (pres_.get() != o.pres_.get())
        throw presentation_mismatch("K-classes over different presentations");
}

KClass KClass::operator-() const {
    KClass r(pres_);
    for (auto& [g, c] : coeff_) r.coeff_[g] = -c;
    return r;
}

KClass KClass::operator+(const KClass& o) const {
    KClass r = *this;
    r += o;
    return r;
}

KClass KClass::operator-(const KClass& o) const {
    KClass r = *this;
    r -= o;
    return r;
}

KClass& KClass::operator+=(const KClass& o) {
    check_same(o);
    for (auto& [g, c] : o.coeff_) {
        auto it = coeff_.find(g);
        if (it == coeff_.end()) {
            coeff_[g] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    return *this += -o;
}

KClass KClass::scaled(const LaurentPoly& s) const {
    KClass r(pres_);
    if (s.is_zero()) return r;
    for (auto& [g, c] : coeff_) {
        LaurentPoly p = c * s;
        if (!p.is_zero()) r.coeff_[g] = p;
    }
    return r;
}

KClass KClass::scaled(const Rational& s) const {
    return scaled(LaurentPoly(s));
}

bool KClass::operator==(const KClass& o) const {
    return pres_.get() == o.pres_.get() && coeff_ == o.coeff_;
}

bool KClass::divisible_by_one_plus_y() const {
    for (auto& [g, c] : coeff_) {
        (void)g;
        if (!c.divisible_by_one_plus_y()) return false;
    }
    return true;
}

KClass KClass::divide_by_one_plus_y() const {
    KClass r(pres_);
    for (auto& [g, c] : coeff_) r.coeff_[g] = c.divide_by_one_plus_y();
    return r;
}

std::map<unsigned, Rational> KClass::eval_at(const Rational& y0) const {
    std::map<unsigned, Rational> r;
    for (auto& [g, c] : coeff_) {
        Rational v = c.eval_at(y0);
        if (v != 0) r[g] = v;
    }
    return r;
}

Rational KClass::euler_pairing_at(const Rational& y0) const {
    Rational acc(0);
    for (auto& [g, c] : coeff_) acc += pres_->generators()[g].euler * c.eval_at(y0);
    return acc;
}

std::string KClass::to_string() const {
    if (coeff_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [g, c] : coeff_) {
        if (!first) out << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs == "1") {
            out << "[" << pres_->generators()[g].name << "]";
        } else {
            bool wrap = cs.find(' ') != std::string::npos;
            out << (wrap ? "(" + cs + ")" : cs) << "*[" << pres_->generators()[g].name << "]";
        }
    }
    return out.str();
}

void GysinTable::set(const std::string& src_gen, KClass img) {
    image[source->index_of(src_gen)] = std::move(img);
}

KClass gysin_shriek(const KClass& c, const GysinTable& table) {
    if (c.presentation().get() != table.source.get())
        throw presentation_mismatch("Gysin table source mismatch");
    KClass acc(table.target);
    for (auto& [g, coeff] : c.coefficients()) {
        auto it = table.image.find(g);
        if (it == table.image.end())
            throw missing_table_entry("no Gysin entry for generator '" +
                                      table.source->generators()[g].name + "'");
        acc += it->second.scaled(coeff);
    }
    return acc;
}

}  // namespace mhcy
