#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ech {

// All geometry in this library is exact. Int is an arbitrary-precision
// integer and Rat a rational kept in lowest terms with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n > 0 && n % d != 0) ++t;
    return t;
}

// Canonical string form: "n" when integral, otherwise "n/d" with d > 0.
inline std::string rat_to_string(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

// Parses "n" or "n/d". Throws std::invalid_argument on malformed input or d <= 0.
inline Rat rat_from_string(const std::string& s) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("malformed rational: \"" + s + "\"");
    };
    auto parse_int = [&](const std::string& t) -> Int {
        if (t.empty()) throw bad();
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw bad();
        return Int(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d <= 0) throw bad();
    return Rat(n, d);
}

}  // namespace ech
