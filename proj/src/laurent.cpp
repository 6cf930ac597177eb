#include "mhcy/laurent.hpp"

#include <sstream>

#include "mhcy/errors.hpp"

namespace mhcy {

LaurentPoly::LaurentPoly(const Rational& constant) {
    set(0, constant);
}

LaurentPoly LaurentPoly::y(int exp) {
    return term(Rational(1), exp);
}

LaurentPoly LaurentPoly::term(const Rational& coeff, int exp) {
    LaurentPoly p;
    p.set(exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::one_plus_y() {
    LaurentPoly p;
    p.set(0, Rational(1));
    p.set(1, Rational(1));
    return p;
}

void LaurentPoly::set(int exp, const Rational& v) {
    if (v == 0)
        c_.erase(exp);
    else
        c_[exp] = v;
}

bool LaurentPoly::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, v1] : c_)
        for (auto& [e2, v2] : o.c_) {
            Rational p = v1 * v2;
            auto it = r.c_.find(e1 + e2);
            if (it == r.c_.end()) {
                if (p != 0) r.c_[e1 + e2] = p;
            } else {
                it->second += p;
                if (it->second == 0) r.c_.erase(it);
            }
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc = one();
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

bool LaurentPoly::divisible_by_one_plus_y() const {
    return eval_at(Rational(-1)) == 0;
}

LaurentPoly LaurentPoly::divide_by_one_plus_y() const {
    if (is_zero()) return zero();
    int lo = min_exp(), hi = max_exp();
    if (lo == hi) throw divisibility_error("(1+y) does not divide " + to_string());
    // (1+y) * sum(q_k y^k) has coefficient q_k + q_{k-1} at y^k.
    LaurentPoly q;
    Rational prev(0);
    for (int k = lo; k < hi; ++k) {
        Rational qk = coeff(k) - prev;
        q.set(k, qk);
        prev = qk;
    }
    if (prev != coeff(hi))
        throw divisibility_error("(1+y) does not divide " + to_string());
    return q;
}

Rational LaurentPoly::eval_at(const Rational& y0) const {
    Rational acc(0);
    for (auto& [e, v] : c_) {
        if (e < 0 && y0 == 0) throw pole_error("evaluation at y = 0 with negative exponent");
        acc += v * rational_pow(y0, e);
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, v] : c_) {
        Rational a = v;
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
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) out << mhcy::to_string(a);
        if (e != 0) {
            if (!unit_coeff) out << "*";
            out << "y";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// One term of a Laurent literal: [coeff][*][y[^exp]]
LaurentPoly parse_term(const std::string& t) {
    std::size_t ypos = t.find('y');
    if (ypos == std::string::npos) return LaurentPoly(parse_rational(t));
    std::string coeff_part = t.substr(0, ypos);
    if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.pop_back();
    Rational c = coeff_part.empty() ? Rational(1) : parse_rational(coeff_part);
    std::string exp_part = t.substr(ypos + 1);
    int e = 1;
    if (!exp_part.empty()) {
        if (exp_part[0] != '^') throw error("malformed term '" + t + "'");
        e = std::stoi(exp_part.substr(1));
    }
    return LaurentPoly::term(c, e);
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
    LaurentPoly acc;
    std::string term;
    int sign = 1;
    bool any = false;
    auto flush = [&]() {
        if (term.empty()) {
            if (any) throw error("malformed laurent literal '" + text + "'");
            return;
        }
        LaurentPoly t = parse_term(term);
        acc += sign > 0 ? t : -t;
        term.clear();
        any = true;
    };
    std::size_t i = 0;
    // leading sign
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '+' || (ch == '-' && !term.empty() && term.back() != '^')) {
            flush();
            sign = ch == '-' ? -1 : 1;
        } else {
            term.push_back(ch);
        }
    }
    flush();
    if (!any) throw error("empty laurent literal");
    return acc;
}

LocalizedPoly::LocalizedPoly(LaurentPoly num, unsigned denom_exp)
    : num_(std::move(num)), denom_(denom_exp) {
    canonicalize();
}

LocalizedPoly LocalizedPoly::one_plus_y_power(int k) {
    if (k >= 0) return LocalizedPoly(LaurentPoly::one_plus_y().pow(static_cast<unsigned>(k)));
    return LocalizedPoly(LaurentPoly::one(), static_cast<unsigned>(-k));
}

void LocalizedPoly::canonicalize() {
    if (num_.is_zero()) {
        denom_ = 0;
        return;
    }
    while (denom_ > 0 && num_.divisible_by_one_plus_y()) {
        num_ = num_.divide_by_one_plus_y();
        --denom_;
    }
}

LocalizedPoly LocalizedPoly::operator-() const {
    LocalizedPoly r;
    r.num_ = -num_;
    r.denom_ = denom_;
    return r;
}

LocalizedPoly LocalizedPoly::operator+(const LocalizedPoly& o) const {
    unsigned d = std::max(denom_, o.denom_);
    LaurentPoly a = num_ * LaurentPoly::one_plus_y().pow(d - denom_);
    LaurentPoly b = o.num_ * LaurentPoly::one_plus_y().pow(d - o.denom_);
    return LocalizedPoly(a + b, d);
}

LocalizedPoly LocalizedPoly::operator-(const LocalizedPoly& o) const {
    return *this + (-o);
}

LocalizedPoly LocalizedPoly::operator*(const LocalizedPoly& o) const {
    return LocalizedPoly(num_ * o.num_, denom_ + o.denom_);
}

LocalizedPoly& LocalizedPoly::operator+=(const LocalizedPoly& o) {
    *this = *this + o;
    return *this;
}

LocalizedPoly& LocalizedPoly::operator-=(const LocalizedPoly& o) {
    *this = *this - o;
    return *this;
}

LocalizedPoly& LocalizedPoly::operator*=(const LocalizedPoly& o) {
    *this = *this * o;
    return *this;
}

LocalizedPoly LocalizedPoly::operator*(const Rational& s) const {
    return LocalizedPoly(num_ * s, denom_);
}

bool LocalizedPoly::operator==(const LocalizedPoly& o) const {
    return denom_ == o.denom_ && num_ == o.num_;
}

LocalizedPoly LocalizedPoly::unit_inverse() const {
    if (num_.is_zero()) throw error("inverse of zero");
    // Strip (1+y) factors, then the remaining part must be a monomial.
    LaurentPoly n = num_;
    unsigned stripped = 0;
    while (n.terms().size() > 1 && n.divisible_by_one_plus_y()) {
        n = n.divide_by_one_plus_y();
        ++stripped;
    }
    if (n.terms().size() != 1)
        throw error("not a unit of Q[y,y^-1,(1+y)^-1]: " + to_string());
    int e = n.min_exp();
    Rational c = n.coeff(e);
    LaurentPoly inv_mono = LaurentPoly::term(Rational(1) / c, -e);
    // (c y^e (1+y)^s / (1+y)^d)^-1 = c^-1 y^-e (1+y)^(d-s)
    int net = static_cast<int>(denom_) - static_cast<int>(stripped);
    if (net >= 0) return LocalizedPoly(inv_mono * LaurentPoly::one_plus_y().pow(net));
    return LocalizedPoly(inv_mono, static_cast<unsigned>(-net));
}

LocalizedPoly LocalizedPoly::pow(int e) const {
    if (e < 0) return unit_inverse().pow(-e);
    LocalizedPoly acc = one();
    for (int i = 0; i < e; ++i) acc *= *this;
    return acc;
}

const LaurentPoly& LocalizedPoly::as_laurent() const {
    if (denom_ != 0)
        throw error("nonzero (1+y)-denominator: " + to_string());
    return num_;
}

Rational LocalizedPoly::eval_at(const Rational& y0) const {
    if (denom_ > 0 && y0 == -1)
        throw pole_error("evaluation at y = -1 with (1+y)-denominator");
    return num_.eval_at(y0) / rational_pow(y0 + 1, denom_);
}

std::string LocalizedPoly::to_string() const {
    if (denom_ == 0) return num_.to_string();
    std::ostringstream out;
    out << "(" << num_.to_string() << ")/(1+y)";
    if (denom_ != 1) out << "^" << denom_;
    return out.str();
}

}  // namespace mhcy
