#include "mhcy/ring.hpp"

#include <algorithm>
#include <sstream>

namespace mhcy {

std::shared_ptr<const RingPresentation> RingPresentation::point() {
    auto p = std::make_shared<RingPresentation>();
    p->name_ = "pt";
    p->dim_ = 0;
    p->point_ = {};
    p->validate();
    return p;
}

std::shared_ptr<const RingPresentation> RingPresentation::projective(unsigned n) {
    auto p = std::make_shared<RingPresentation>();
    p->name_ = "P" + std::to_string(n);
    p->gens_ = {{"h", 1}};
    Monomial rel = {n + 1};
    p->monomial_rels_ = {rel};
    p->dim_ = n;
    p->point_ = {n};
    p->validate();
    return p;
}

std::shared_ptr<const RingPresentation> RingPresentation::projective_product(
    const std::vector<unsigned>& ns) {
    auto p = std::make_shared<RingPresentation>();
    std::ostringstream nm;
    unsigned dim = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (i) nm << "x";
        nm << "P" << ns[i];
        p->gens_.push_back({"h" + std::to_string(i + 1), 1});
        dim += ns[i];
    }
    p->name_ = nm.str();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        Monomial rel(ns.size(), 0);
        rel[i] = ns[i] + 1;
        p->monomial_rels_.push_back(rel);
    }
    p->dim_ = dim;
    Monomial pt(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) pt[i] = ns[i];
    p->point_ = pt;
    p->validate();
    return p;
}

std::shared_ptr<const RingPresentation> RingPresentation::user(
    std::vector<Generator> gens, std::vector<Monomial> monomial_relations,
    std::vector<std::vector<Rational>> linear_relations, unsigned dimension,
    Monomial point_class) {
    auto p = std::make_shared<RingPresentation>();
    p->name_ = "user";
    p->gens_ = std::move(gens);
    p->monomial_rels_ = std::move(monomial_relations);
    p->dim_ = dimension;
    p->point_ = std::move(point_class);
    p->build_rules(std::move(linear_relations));
    p->validate();
    return p;
}

unsigned RingPresentation::degree_of(const Monomial& m) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
}

std::string RingPresentation::monomial_name(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += gens_[i].name;
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

void RingPresentation::build_rules(std::vector<std::vector<Rational>> raw) {
    // Reduced row echelon form with pivots taken in declaration order, so
    // every pivot generator rewrites into strictly later ones.
    std::size_t ng = gens_.size();
    std::vector<std::vector<Rational>> rows;
    for (auto& r : raw) {
        if (r.size() != ng) throw error("linear relation arity mismatch");
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
            for (std::size_t c2 = 0; c2 < ng; ++c2) rows[r][c2] -= f * rows[rank][c2];
        }
        ++rank;
    }
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t pivot = 0;
        while (pivot < ng && rows[r][pivot] == 0) ++pivot;
        if (pivot == ng) continue;
        LinearRule rule;
        rule.pivot = static_cast<unsigned>(pivot);
        for (std::size_t c = pivot + 1; c < ng; ++c)
            if (rows[r][c] != 0) rule.tail.push_back({static_cast<unsigned>(c), -rows[r][c]});
        // homogeneity: every tail generator must carry the pivot's degree
        for (auto& [g, v] : rule.tail) {
            (void)v;
            if (gens_[g].degree != gens_[pivot].degree)
                throw error("inhomogeneous linear relation in presentation " + name_);
        }
        rules_.push_back(std::move(rule));
    }
    std::sort(rules_.begin(), rules_.end(),
              [](const LinearRule& a, const LinearRule& b) { return a.pivot < b.pivot; });
}

void RingPresentation::validate() const {
    for (auto& rel : monomial_rels_)
        if (rel.size() != gens_.size()) throw error("monomial relation arity mismatch");
    if (point_.size() != gens_.size()) throw error("point class arity mismatch");
    if (degree_of(point_) != dim_)
        throw error("point class must have top degree in presentation " + name_);
}

bool RingPresentation::killed_by_monomial_relation(const Monomial& m) const {
    for (auto& rel : monomial_rels_) {
        bool divides = true;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (rel[i] > m[i]) {
                divides = false;
                break;
            }
        if (divides) return true;
    }
    return false;
}

int RingPresentation::find_pivot_in(const Monomial& m, Strategy s) const {
    if (rules_.empty()) return -1;
    if (s == Strategy::low_pivot_first) {
        for (std::size_t r = 0; r < rules_.size(); ++r)
            if (m[rules_[r].pivot] > 0) return static_cast<int>(r);
    } else {
        for (std::size_t r = rules_.size(); r-- > 0;)
            if (m[rules_[r].pivot] > 0) return static_cast<int>(r);
    }
    return -1;
}

void RingPresentation::confluence_self_test(unsigned samples, unsigned seed) const {
    if (gens_.empty()) return;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> exp_dist(0, 3);
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    auto self = shared_from_this();
    for (unsigned s = 0; s < samples; ++s) {
        GradedClass<Rational> a(self), b(self);
        for (int t = 0; t < 3; ++t) {
            Monomial m(gens_.size());
            for (auto& e : m) e = exp_dist(rng);
            a.add_term(m, Rational(coeff_dist(rng)));
            for (auto& e : m) e = exp_dist(rng);
            b.add_term(m, Rational(coeff_dist(rng)));
        }
        // product expanded monomial-by-monomial under both strategies
        std::map<Monomial, Rational> low, high;
        for (auto& [m1, c1] : a.terms())
            for (auto& [m2, c2] : b.terms()) {
                Monomial m(m1.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
                reduce_into(low, m, Rational(c1 * c2), Strategy::low_pivot_first);
                reduce_into(high, m, Rational(c1 * c2), Strategy::high_pivot_first);
            }
        if (low != high)
            throw error("confluence self-test failed for presentation " + name_);
        if ((a * b).terms() != low)
            throw error("confluence self-test failed for presentation " + name_);
    }
}

}  // namespace mhcy
