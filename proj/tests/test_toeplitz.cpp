#include "conformal/genfunc.hpp"
#include "conformal/partition.hpp"
#include "conformal/toeplitz.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace conformal;

namespace {

ConvolutionProblem random_problem(std::mt19937_64& rng, unsigned gmax) {
    std::uniform_int_distribution<int> d(-100, 100);
    ConvolutionProblem p;
    for (unsigned g = 0; g <= gmax; ++g) {
        p.T.push_back(d(rng));
        p.U.push_back(d(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("forward recursion basics") {
    ConvolutionProblem p{{3, 1, 4, 1, 5}, {0, 0, 0, 0, 0}};
    CHECK(solve_forward(p, 4) == p.T);
    CHECK(solve_forward(p, 0)[0] == 3);
}

TEST_CASE("phi values") {
    std::vector<BigInt> U{0, 5, 7, 0, 0, 0, 0};
    CHECK(phi_eval(0, U) == 1);
    CHECK(phi_eval(2, U) == 7 + 25);
    std::vector<BigInt> ones(11, 1);
    CHECK(phi_eval(6, ones) == 32);
}

TEST_CASE("phi terms") {
    for (unsigned r = 1; r <= 10; ++r) {
        auto terms = phi_terms(r);
        CHECK(terms.size() == oracle::unrestricted(r));
        BigInt sum = 0;
        for (const auto& t : terms) {
            CHECK(t.coeff > 0);
            sum += t.coeff;
        }
        CHECK(sum == BigInt(1) << (r - 1));
    }
}

TEST_CASE("phi recurrence equals multinomial sum") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BigInt> U(11);
        for (auto& u : U) u = d(rng);
        for (unsigned r = 0; r <= 10; ++r) CHECK(phi_eval(r, U) == oracle::phi_multinomial(r, U));
    }
}

TEST_CASE("closed form equals forward recursion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_problem(rng, 20);
        auto fwd = solve_forward(p, 20);
        for (unsigned g = 0; g <= 20; ++g) CHECK(solve_closed(p, g) == fwd[g]);
    }
    ConvolutionProblem p{{1, 6, 2}, {0, -3, 4}};
    CHECK(solve_closed(p, 1) == 6 + (-3) * 1);
    ConvolutionProblem z{{2, 6, 2, 9}, {0, 0, 0, 0}};
    CHECK(solve_closed(z, 3) == 9);
}

TEST_CASE("conformal instantiation") {
    CHECK(conformal_via_toeplitz(3, 3, 0) == 1);
    CHECK(conformal_via_toeplitz(2, 2, 2) == 2);
    CHECK(conformal_via_toeplitz(3, 4, 6) == 5);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 1; m <= 6; ++m) CHECK(conformal_row_toeplitz(n, m) == gaussian_poly(n, m));
}
