#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qaomoto {

// Exact carriers used throughout: arbitrary-precision integers and
// normalized rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Bad user input (files, flags, malformed values). CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal mathematical inconsistency detected at runtime (failed chain
// condition, count mismatch, ...). CLI exit code 3.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw input_error("division by zero");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// Accepts "123", "-4/7", "3/6" (normalized on the way in).
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw input_error("invalid rational: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int sign_of(const Rat& r) { return sgn(r); }

}  // namespace qaomoto
