#include "conformal/toeplitz.hpp"

#include "conformal/errors.hpp"
#include "conformal/partition.hpp"

#include <functional>

namespace conformal {

namespace {

void need(const ConvolutionProblem& p, unsigned g) {
    if (p.T.size() <= g || (g > 0 && p.U.size() <= g))
        throw RangeError("convolution problem not defined up to index " + std::to_string(g));
}

}  // namespace

std::vector<BigInt> solve_forward(const ConvolutionProblem& problem, unsigned gmax) {
    need(problem, gmax);
    std::vector<BigInt> P(gmax + 1);
    for (unsigned g = 0; g <= gmax; ++g) {
        BigInt acc = problem.T[g];
        for (unsigned s = 0; s < g; ++s) acc += P[s] * problem.U[g - s];
        P[g] = acc;
    }
    return P;
}

std::vector<BigInt> phi_table(unsigned rmax, const std::vector<BigInt>& U) {
    if (rmax > 0 && U.size() <= rmax) throw RangeError("phi_table: U too short");
    std::vector<BigInt> phi(rmax + 1);
    phi[0] = 1;
    for (unsigned r = 1; r <= rmax; ++r) {
        BigInt acc = 0;
        for (unsigned j = 1; j <= r; ++j) acc += U[j] * phi[r - j];
        phi[r] = acc;
    }
    return phi;
}

BigInt phi_eval(unsigned r, const std::vector<BigInt>& U) { return phi_table(r, U)[r]; }

std::vector<PhiTerm> phi_terms(unsigned r) {
    std::vector<PhiTerm> out;
    std::vector<unsigned> q(r, 0);
    // Largest part first; emits each partition of r once.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned part, unsigned rem) {
        if (rem == 0) {
            unsigned total = 0;
            BigInt denom = 1;
            for (unsigned v : q) {
                total += v;
                denom *= factorial(v);
            }
            out.push_back({q, factorial(total) / denom});
            return;
        }
        if (part == 0) return;
        for (unsigned k = rem / part;; --k) {
            q[part - 1] = k;
            rec(part - 1, rem - k * part);
            if (k == 0) break;
        }
        q[part - 1] = 0;
    };
    if (r == 0) {
        out.push_back({{}, 1});
        return out;
    }
    rec(r, r);
    return out;
}

BigInt solve_closed(const ConvolutionProblem& problem, unsigned g) {
    need(problem, g);
    if (g == 0) return problem.T[0];
    auto phi = phi_table(g - 1, problem.U);
    BigInt acc = 0;
    for (unsigned r = 0; r < g; ++r)
        acc += (problem.T[g - r] + problem.T[0] * problem.U[g - r]) * phi[r];
    return acc;
}

ConvolutionProblem conformal_problem(unsigned n, unsigned m, unsigned gmax) {
    auto wn = restricted_row(n, gmax);
    auto wm = restricted_row(m, gmax);
    auto wnm = restricted_row(n + m, gmax);
    ConvolutionProblem p;
    p.T.assign(gmax + 1, 0);
    p.U.assign(gmax + 1, 0);
    for (unsigned g = 0; g <= gmax; ++g) {
        for (unsigned j = 0; j <= g; ++j) p.T[g] += wn[j] * wm[g - j];
        p.U[g] = -wnm[g];
    }
    return p;
}

BigCount conformal_via_toeplitz(unsigned n, unsigned m, unsigned s) {
    if (n == 0 || m == 0) throw RangeError("conformal_via_toeplitz needs n, m >= 1");
    return solve_closed(conformal_problem(n, m, s), s);
}

std::vector<BigCount> conformal_row_toeplitz(unsigned n, unsigned m) {
    if (n == 0 || m == 0) throw RangeError("conformal_row_toeplitz needs n, m >= 1");
    const unsigned top = n * m;
    auto p = conformal_problem(n, m, top);
    std::vector<BigCount> row;
    row.reserve(top + 1);
    for (unsigned g = 0; g <= top; ++g) row.push_back(solve_closed(p, g));
    return row;
}

}  // namespace conformal
