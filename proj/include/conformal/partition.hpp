#pragma once

#include "conformal/big.hpp"

#include <cstdint>
#include <vector>

namespace conformal {

// W_n(s): partitions of s into parts <= n. Backed by a shared table that
// grows on demand; safe to call from several threads.
BigCount restricted_count(unsigned n, unsigned s);

// P(s) = W_s(s).
BigCount unrestricted_count(unsigned s);

// W_n(0..smax) as one row.
std::vector<BigCount> restricted_row(unsigned n, unsigned smax);

// Budget for conformal_count_oracle. CONFORMAL_ORACLE_CEILING overrides 1e8.
std::uint64_t default_oracle_ceiling();

// Brute force over (x_1..x_n) with sum r*x_r = s and sum x_r <= m.
// Throws ResourceCeilingError once more than `ceiling` nodes were visited.
BigCount conformal_count_oracle(unsigned n, unsigned m, unsigned s,
                                std::uint64_t ceiling = default_oracle_ceiling());

// P_n^m(0..nm) by a DP over (parts used, largest allowed part).
std::vector<BigCount> conformal_row_dp(unsigned n, unsigned m);
BigCount conformal_count_dp(unsigned n, unsigned m, unsigned s);

// Coefficients of prod 1/(1 - t^d) up to t^N.
CoeffSeq molien_series(const std::vector<unsigned>& degrees, unsigned N);

}  // namespace conformal
