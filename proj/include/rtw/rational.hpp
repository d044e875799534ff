#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace rtw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Renders "p/q" with q > 0 in lowest terms, or "p" when q == 1.
inline std::string to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// cpp_int's string constructor honors 0x and leading-zero octal prefixes;
// literals here are always decimal, so digits are validated and leading
// zeros stripped before construction.
inline Int parse_decimal_int(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty integer literal");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::runtime_error("sign without digits");
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::runtime_error("non-digit");
    size_t nz = s.find_first_not_of('0', start);
    Int v(nz == std::string::npos ? std::string("0") : s.substr(nz));
    return s[0] == '-' ? Int(-v) : v;
}

// Accepts "p/q", an integer "k", or a finite decimal like "0.25" (parsed exactly).
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int num = parse_decimal_int(s.substr(0, slash));
            Int den = parse_decimal_int(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return Rat(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            size_t frac_len = s.size() - dot - 1;
            if (frac_len == 0) throw std::invalid_argument("trailing dot");
            Int num = parse_decimal_int(s.substr(0, dot) + s.substr(dot + 1));
            Int den = 1;
            for (size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rat(num, den);
        }
        return Rat(parse_decimal_int(s));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

}  // namespace rtw
