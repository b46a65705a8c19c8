#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace conformal {

// Signed so that the Toeplitz instantiation (negative U) shares the type.
using BigInt = boost::multiprecision::cpp_int;
using BigCount = BigInt;
using Rational = boost::multiprecision::cpp_rational;

// Coefficients of a polynomial in t, index = degree.
using CoeffSeq = std::vector<BigInt>;

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);

// Exact product of two truncated series; result keeps degrees 0..limit.
CoeffSeq series_mul(const CoeffSeq& a, const CoeffSeq& b, std::size_t limit);
CoeffSeq poly_mul(const CoeffSeq& a, const CoeffSeq& b);

}  // namespace conformal
