#pragma once

#include <map>
#include <string>

#include "mhcy/rational.hpp"

namespace mhcy {

// Exact element of Q[y, y^-1]. No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    static LaurentPoly y(int exp = 1);
    static LaurentPoly term(const Rational& coeff, int exp);
    static LaurentPoly one_plus_y();

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    Rational coeff(int exp) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;
    const std::map<int, Rational>& terms() const { return c_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator*(const Rational& s) const;
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned e) const;

    // Quotient q with (1+y)*q == *this; throws divisibility_error when the
    // value at y = -1 is nonzero.
    LaurentPoly divide_by_one_plus_y() const;
    bool divisible_by_one_plus_y() const;

    // Exact evaluation; y0 = 0 is a pole when negative exponents occur.
    Rational eval_at(const Rational& y0) const;

    // "a_-1*y^-1 + a_0 + a_1*y" with exact rational coefficients.
    std::string to_string() const;

private:
    std::map<int, Rational> c_;
    void set(int exp, const Rational& v);
};

LaurentPoly parse_laurent(const std::string& text);

// Q[y, y^-1, (1+y)^-1] in the canonical form num/(1+y)^k with (1+y) not
// dividing num while k > 0.
class LocalizedPoly {
public:
    LocalizedPoly() = default;
    LocalizedPoly(LaurentPoly num, unsigned denom_exp = 0);
    explicit LocalizedPoly(const Rational& constant) : LocalizedPoly(LaurentPoly(constant)) {}

    static LocalizedPoly one() { return LocalizedPoly(LaurentPoly::one()); }
    static LocalizedPoly one_plus_y_power(int k);

    const LaurentPoly& numerator() const { return num_; }
    unsigned denom_exponent() const { return denom_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalizedPoly operator-() const;
    LocalizedPoly operator+(const LocalizedPoly& o) const;
    LocalizedPoly operator-(const LocalizedPoly& o) const;
    LocalizedPoly operator*(const LocalizedPoly& o) const;
    LocalizedPoly& operator+=(const LocalizedPoly& o);
    LocalizedPoly& operator-=(const LocalizedPoly& o);
    LocalizedPoly& operator*=(const LocalizedPoly& o);
    LocalizedPoly operator*(const Rational& s) const;
    bool operator==(const LocalizedPoly& o) const;
    bool operator!=(const LocalizedPoly& o) const { return !(*this == o); }

    // Inverse when the value is a unit of the localized ring, i.e. of the
    // form c * y^a * (1+y)^b. Throws mhcy::error otherwise.
    LocalizedPoly unit_inverse() const;
    LocalizedPoly pow(int e) const;

    // Requires denom_exponent() == 0.
    const LaurentPoly& as_laurent() const;

    Rational eval_at(const Rational& y0) const;

    std::string to_string() const;

private:
    LaurentPoly num_;
    unsigned denom_ = 0;
    void canonicalize();
};

}  // namespace mhcy
