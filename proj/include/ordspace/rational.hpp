#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace ordspace {

/// Exact rational scalar. Expression templates are disabled so the type
/// composes with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Parses `p/q`, a plain integer, or a finite decimal such as `-2.000011`
/// into an exact rational. Throws ValidationError on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical `p/q` rendering (`p` alone when the denominator is 1).
std::string to_string(const Rational& value);

/// Fixed-point decimal rendering for human-readable reports.
std::string to_decimal(const Rational& value, int digits = 6);

double to_double(const Rational& value);

/// Largest r with r*r <= value, for value >= 0.
Integer isqrt(const Integer& value);

/// Smallest r with r*r >= value, for value >= 0.
Integer ceil_sqrt(const Integer& value);

/// Dyadic lower approximation of sqrt(value) with absolute error < 2^-bits.
Rational sqrt_lower(const Rational& value, unsigned bits);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace ordspace
