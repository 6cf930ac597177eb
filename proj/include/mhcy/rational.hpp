#pragma once

#include <gmpxx.h>

#include <string>

namespace mhcy {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; canonicalizes. Throws mhcy::error on malformed
// input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

Rational rational_pow(const Rational& base, long exp);

long binomial(unsigned n, unsigned k);

}  // namespace mhcy
