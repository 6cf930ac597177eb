#pragma once

#include <stdexcept>
#include <string>

namespace mhcy {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by (1+y) requested on a class with a nonzero value at y = -1.
struct divisibility_error : error {
    using error::error;
};

// Evaluation at an excluded point (y = 0 with negative exponents, y = -1
// with a localized denominator).
struct pole_error : error {
    using error::error;
};

struct presentation_mismatch : error {
    using error::error;
};

struct missing_table_entry : error {
    using error::error;
};

enum class scenario_errc { io, schema, crossref, invariant };

inline const char* to_label(scenario_errc c) {
    switch (c) {
        case scenario_errc::io: return "io";
        case scenario_errc::schema: return "schema";
        case scenario_errc::crossref: return "crossref";
        case scenario_errc::invariant: return "invariant";
    }
    return "?";
}

struct scenario_error : error {
    scenario_errc kind;
    scenario_error(scenario_errc k, const std::string& msg)
        : error(std::string(to_label(k)) + ": " + msg), kind(k) {}
};

}  // namespace mhcy
