#include "mhcy/rational.hpp"

#include "mhcy/errors.hpp"

namespace mhcy {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw error("empty rational literal");
    std::size_t i = 0;
    auto scan_int = [&](const char* what) {
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++digits;
        }
        if (digits == 0) throw error(std::string("malformed rational literal '") + text + "': missing " + what);
    };
    scan_int("numerator");
    if (i < text.size()) {
        if (text[i] != '/') throw error("malformed rational literal '" + text + "'");
        ++i;
        scan_int("denominator");
        if (i != text.size()) throw error("malformed rational literal '" + text + "'");
    }
    Rational r(text);
    if (r.get_den() == 0) throw error("zero denominator in rational literal '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw pole_error("0 raised to a negative power");
        return Rational(1) / rational_pow(base, -exp);
    }
    Rational acc(1);
    for (long i = 0; i < exp; ++i) acc *= base;
    return acc;
}

long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    long acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc = acc * static_cast<long>(n - k + i) / static_cast<long>(i);
    }
    return acc;
}

}  // namespace mhcy
