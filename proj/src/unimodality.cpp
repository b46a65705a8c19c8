#include "conformal/errors.hpp"
#include "conformal/invariant_algebra.hpp"
#include "conformal/partition.hpp"

namespace conformal {

BigCount q_closed(unsigned n, unsigned m) {
    if (n == 0 || m == 0) return 1;
    if ((n * m) % 2) return 0;
    unsigned u, v;
    if (n % 2) {  // n = 2u+1, m = 2v
        u = (n - 1) / 2;
        v = m / 2;
    } else {  // n = 2u, m = 2v or 2v+1
        u = n / 2;
        v = m / 2;
    }
    return binomial(u + v, v);
}

BigCount mu_closed(unsigned n, unsigned m, Kind kind) {
    if (n == 0 || m == 0) throw RangeError("mu_closed needs n, m >= 1");
    BigCount b = binomial(m + n, n);
    BigCount q = q_closed(n, m);
    BigCount twice = kind == Kind::Reciprocal ? BigCount(b + q) : BigCount(b - q);
    if (twice % 2 != 0) throw InconsistencyError("mu_closed: odd numerator");
    return twice / 2;
}

BigCount mu_product_closed(const std::vector<Factor>& factors, Kind kind) {
    if (factors.empty()) throw RangeError("mu_product_closed needs at least one pair");
    BigCount b = 1, q = 1;
    for (const auto& f : factors) {
        if (f.n == 0 || f.m == 0) throw RangeError("mu_product_closed: sizes must be >= 1");
        b *= binomial(f.m + f.n, f.n);
        q *= q_closed(f.n, f.m);  // zero as soon as one n_j m_j is odd
    }
    BigCount twice = kind == Kind::Reciprocal ? BigCount(b + q) : BigCount(b - q);
    if (twice % 2 != 0) throw InconsistencyError("mu_product_closed: odd numerator");
    return twice / 2;
}

TupleSplit tuple_split(unsigned n, unsigned m) {
    if (n == 0 || m == 0) throw RangeError("tuple_split needs n, m >= 1");
    auto row = conformal_row_dp(n, m);
    const unsigned N = n * m;
    TupleSplit t{0, 0, 0};
    for (unsigned s = 0; 2 * s < N; ++s) t.lower += row[s];
    if (N % 2 == 0) t.middle = row[N / 2];
    for (unsigned s = 0; s <= N; ++s)
        if (2 * s > N) t.upper += row[s];
    return t;
}

std::size_t middle_fixed_points(unsigned n, unsigned m) {
    if ((n * m) % 2) return 0;
    std::size_t count = 0;
    for (const auto& a : enumerate_alpha(n, m, n * m / 2))
        if (term_plus(a, n, m) == term_minus(a, n, m)) ++count;
    return count;
}

}  // namespace conformal
