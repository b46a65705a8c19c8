#pragma once

#include "conformal/big.hpp"

#include <utility>
#include <vector>

namespace conformal {

// G(n,m;t) of order nm by exact division of
// prod_{i<=n+m}(1-t^i) by prod_{j<=n}(1-t^j) * prod_{k<=m}(1-t^k).
// Throws InconsistencyError if the division is not exact.
CoeffSeq gaussian_poly(unsigned n, unsigned m);

// Checks G(n,m;t) * M(n+m;t) == M(n;t) * M(m;t) through degree N.
bool gaussian_ratio_check(unsigned n, unsigned m, unsigned N);

// Two-group count: sum_{s1} P_{n1}^{m1}(s1) P_{n2}^{m2}(s - s1).
BigCount convolve_conformal(unsigned n1, unsigned m1, unsigned n2, unsigned m2, unsigned s);

// prod_j G(n_j, m_j; t), order sum n_j m_j.
CoeffSeq product_gaussian(const std::vector<std::pair<unsigned, unsigned>>& pairs);

// prod_{i=1..k} (1 - t^i) written out.
CoeffSeq falling_product(unsigned k);

}  // namespace conformal
