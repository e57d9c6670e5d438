#include "ergm/rational.hpp"

#include "ergm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>

namespace ergm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Int pow10(std::size_t n) {
    Int r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= 10;
    return r;
}

}  // namespace

Rat make_rational(Int num, Int den) {
    if (den == 0) throw InvalidInput("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rat(num, den);
}

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw InvalidInput("rational: empty string");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.remove_prefix(1);
    }
    if (s.empty()) throw InvalidInput("rational: missing digits in '" + std::string(text) + "'");

    auto bad = [&]() -> InvalidInput {
        return InvalidInput("rational: malformed value '" + std::string(text) + "'");
    };

    Int num, den;
    std::size_t slash = s.find('/');
    std::size_t point = s.find('.');
    if (slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw bad();
        num = Int(std::string(p));
        den = Int(std::string(q));
        if (den == 0) throw InvalidInput("rational: zero denominator in '" + std::string(text) + "'");
    } else if (point != std::string_view::npos) {
        std::string_view ip = s.substr(0, point);
        std::string_view fp = s.substr(point + 1);
        if (ip.empty() && fp.empty()) throw bad();
        if (!ip.empty() && !all_digits(ip)) throw bad();
        if (!fp.empty() && !all_digits(fp)) throw bad();
        Int whole = ip.empty() ? Int(0) : Int(std::string(ip));
        Int frac = fp.empty() ? Int(0) : Int(std::string(fp));
        den = pow10(fp.size());
        num = whole * den + frac;
    } else {
        if (!all_digits(s)) throw bad();
        num = Int(std::string(s));
        den = 1;
    }
    if (negative) num = -num;
    return make_rational(std::move(num), std::move(den));
}

std::string to_fraction_string(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

Rat rational_from_double(double value) {
    if (!std::isfinite(value)) throw InvalidInput("rational: non-finite double");
    return Rat(value);
}

std::vector<double> to_doubles(const RatVec& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

RatVec ratvec_from_doubles(const std::vector<double>& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = rational_from_double(v[i]);
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec subtract(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InvalidInput("subtract: length mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVec integer_primitive(const RatVec& v) {
    if (is_zero(v)) return v;
    Int den_lcm = 1;
    for (const Rat& x : v) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x));
    Int num_gcd = 0;
    std::vector<Int> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = numerator(v[i]) * (den_lcm / denominator(v[i]));
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(scaled[i]));
    }
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(scaled[i] / num_gcd);
    return out;
}

RatVec integer_canonical(const RatVec& v) {
    RatVec out = integer_primitive(v);
    for (const Rat& x : out) {
        if (x == 0) continue;
        if (x < 0) {
            for (Rat& y : out) y = -y;
        }
        break;
    }
    return out;
}

}  // namespace ergm
