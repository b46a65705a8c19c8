#pragma once

#include "conformal/big.hpp"

#include <vector>

namespace conformal {

// P(g) = T(g) + sum_{s<g} P(s) U(g-s). U[0] is never read.
struct ConvolutionProblem {
    std::vector<BigInt> T;
    std::vector<BigInt> U;
};

std::vector<BigInt> solve_forward(const ConvolutionProblem& problem, unsigned gmax);

// Phi_r(U) via Phi_r = sum_{j=1..r} U(j) Phi_{r-j}, Phi_0 = 1.
BigInt phi_eval(unsigned r, const std::vector<BigInt>& U);
std::vector<BigInt> phi_table(unsigned rmax, const std::vector<BigInt>& U);

// One monomial of Phi_r: q[l-1] copies of U(l), sum l*q_l = r,
// weight q!/(q_1!...q_r!) with q = sum q_l.
struct PhiTerm {
    std::vector<unsigned> q;
    BigInt coeff;
};

// All monomials of Phi_r, one per partition of r.
std::vector<PhiTerm> phi_terms(unsigned r);

// Closed form: P(g) = sum_{r<g} [T(g-r) + T(0) U(g-r)] Phi_r for g >= 1.
// With T(0) = 1 this is the textbook form.
BigInt solve_closed(const ConvolutionProblem& problem, unsigned g);

// T(g) = sum W_n(j) W_m(g-j), U(j) = -W_{n+m}(j), up to gmax.
ConvolutionProblem conformal_problem(unsigned n, unsigned m, unsigned gmax);

BigCount conformal_via_toeplitz(unsigned n, unsigned m, unsigned s);
std::vector<BigCount> conformal_row_toeplitz(unsigned n, unsigned m);

}  // namespace conformal
