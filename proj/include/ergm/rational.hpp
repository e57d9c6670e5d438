#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ergm {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Builds a rational in canonical reduced form (gcd(|p|,q) = 1, q > 0).
/// GMP does not canonicalize values assembled from raw parts, so every
/// construction that does not go through arithmetic must pass through here.
Rat make_rational(Int num, Int den = 1);

/// Parses "p", "p/q", or a plain decimal like "-1.5" into a canonical
/// rational. Throws InvalidInput on anything else (including q = 0).
Rat parse_rational(std::string_view text);

/// Serializes as "p/q" with q >= 1 and gcd(|p|,q) = 1, e.g. "-3/2", "4/1".
std::string to_fraction_string(const Rat& value);

double to_double(const Rat& value);

/// Exact conversion; every finite double is a rational.
Rat rational_from_double(double value);

std::vector<double> to_doubles(const RatVec& v);
RatVec ratvec_from_doubles(const std::vector<double>& v);

Rat dot(const RatVec& a, const RatVec& b);
RatVec subtract(const RatVec& a, const RatVec& b);
bool lex_less(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

/// Scales a nonzero rational vector to integer entries with gcd 1, keeping
/// its direction. Zero vectors pass through unchanged.
RatVec integer_primitive(const RatVec& v);

/// integer_primitive plus a canonical sign: first nonzero entry positive.
RatVec integer_canonical(const RatVec& v);

}  // namespace ergm
