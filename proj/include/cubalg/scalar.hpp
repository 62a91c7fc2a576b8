#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubalg {

// Exact scalar: arbitrary-precision rational, kept in lowest terms with
// positive denominator (cpp_rational canonicalizes on every operation).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(double x) { return x; }

// Scalar concept glue. Everything in the library is generic over S being
// either Rational (exact mode) or double (float mode).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational from_int(long v) { return Rational(v); }
    static double to_double(const Rational& r) { return cubalg::to_double(r); }
    static Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& r) { return cubalg::to_double(r); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double to_double(double x) { return x; }
    static double abs(double x) { return std::fabs(x); }
    static bool is_zero(double x) { return x == 0.0; }
};

inline std::string format_rational(const Rational& r) {
    const BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Shortest round-trip decimal form.
inline std::string format_double(double x) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

template <class S>
std::string format_scalar(const S& s) {
    if constexpr (ScalarTraits<S>::is_exact)
        return format_rational(s);
    else
        return format_double(s);
}

// Parses "p", "p/q", or a decimal literal like "1.25e-3", exactly.
// Returns false on malformed input; `pos` is advanced past the literal.
bool parse_rational_literal(std::string_view text, std::size_t& pos, Rational& out);

// Strict full-string variant, for CLI arguments.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    Rational r;
    std::size_t start = text.find_first_not_of(" \t");
    if (start == std::string_view::npos) throw std::invalid_argument("empty rational literal");
    bool neg = false;
    if (text[start] == '-' || text[start] == '+') {
        neg = text[start] == '-';
        ++start;
    }
    pos = start;
    if (!parse_rational_literal(text, pos, r))
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    if (text.find_first_not_of(" \t", pos) != std::string_view::npos)
        throw std::invalid_argument("trailing characters in rational literal: '" + std::string(text) + "'");
    return neg ? Rational(-r) : r;
}

inline bool parse_rational_literal(std::string_view text, std::size_t& pos, Rational& out) {
    std::size_t i = pos;
    auto digits = [&](std::string& dst) {
        std::size_t n = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            dst.push_back(text[i]);
            ++i;
            ++n;
        }
        return n;
    };
    std::string intpart;
    if (digits(intpart) == 0) return false;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den;
        if (digits(den) == 0) return false;
        BigInt d(den);
        if (d == 0) return false;
        out = Rational(BigInt(intpart), d);
        pos = i;
        return true;
    }
    std::string frac, exp;
    bool expneg = false;
    if (i < text.size() && text[i] == '.') {
        ++i;
        if (digits(frac) == 0) return false;
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            expneg = text[i] == '-';
            ++i;
        }
        if (digits(exp) == 0) return false;
    }
    BigInt num(intpart + frac);
    BigInt den(1);
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    out = Rational(num, den);
    if (!exp.empty()) {
        long e = std::stol(exp);
        BigInt tens(1);
        for (long k = 0; k < e; ++k) tens *= 10;
        if (expneg)
            out /= Rational(tens);
        else
            out *= Rational(tens);
    }
    pos = i;
    return true;
}

// Continued-fraction rationalization: best rational approximation of x with
// denominator at most max_den. Used to snap numerically found idempotents
// before attempting exact verification.
inline Rational snap_to_rational(double x, std::uint64_t max_den = 1000000) {
    if (std::fabs(x) < 1e-12) return Rational(0);
    bool neg = x < 0;
    double v = std::fabs(x);
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        BigInt a(static_cast<std::uint64_t>(fl));
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rational r(p1, q1);
    return neg ? Rational(-r) : r;
}

}  // namespace cubalg
