#pragma once

#include "conformal/invariant_algebra.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace conformal {

struct Point {
    std::vector<double> x;  // all > 0
};

// I_{n,0..n} by the one-pass product recurrence. RangeError on overflow
// or non-positive entries.
std::vector<double> elementary_symmetric(const Point& x);

// C_{s,l} for the skew polynomial; missing entries are 0, C_{0,1} is 1.
using CoeffMap = std::map<CoeffSymbol, double>;

CoeffMap constant_coefficients(unsigned n, unsigned m, double value);
CoeffMap random_coefficients(unsigned n, unsigned m, std::uint64_t seed, double hi = 1.0);

// a_p with S(lambda) = sum_p a_p lambda^p at the point x.
std::vector<double> lambda_coefficients(unsigned n, unsigned m, const CoeffMap& C, const Point& x);

struct RootResult {
    double lambda = 0;
    double residual = 0;  // |S(lambda)| over the sum of |term| magnitudes
    double lo = 0, hi = 0;
    unsigned iterations = 0;
    unsigned sign_changes = 0;  // more than one would contradict uniqueness
};

// Bisection inside [m_h/2, 2 m_a], widened up to 60 times. tol is relative
// bracket width; 0 runs to the last representable midpoint.
// Needs nonnegative coefficients; BracketError if no sign change shows up.
RootResult positive_root(unsigned n, unsigned m, const CoeffMap& C, const Point& x,
                         double tol = 0.0);

// (harmonic mean, arithmetic mean)
std::pair<double, double> bounds_basic(const Point& x);

// m_a >= ... >= m_g >= ... >= m_h, 2n-1 entries.
std::vector<double> mean_chain(const Point& x);

// (omega, Omega) for n = 3 or 4.
std::pair<double, double> bounds_enhanced(const Point& x);

// I_n^{1/n} == (I_{n-r}/I_r)^{1/(n-2r)} for every 2r < n.
bool pairing_condition_check(const Point& x, double tol = 1e-9);

struct DualityReport {
    bool ok = false;
    double root = 0;
    double root_inverse = 0;  // root at 1/x
    double product = 0;
};

DualityReport root_duality_check(unsigned n, unsigned m, const CoeffMap& C, const Point& x,
                                 double tol = 1e-9);

}  // namespace conformal
