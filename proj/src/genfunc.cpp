#include "conformal/genfunc.hpp"

#include "conformal/errors.hpp"
#include "conformal/partition.hpp"

namespace conformal {

CoeffSeq falling_product(unsigned k) {
    CoeffSeq p{1};
    for (unsigned i = 1; i <= k; ++i) {
        CoeffSeq f(i + 1, 0);
        f[0] = 1;
        f[i] = -1;
        p = poly_mul(p, f);
    }
    return p;
}

namespace {

void trim(CoeffSeq& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

CoeffSeq gaussian_poly(unsigned n, unsigned m) {
    if (n == 0 || m == 0) throw RangeError("gaussian_poly needs n, m >= 1");
    CoeffSeq num = falling_product(n + m);
    CoeffSeq den = poly_mul(falling_product(n), falling_product(m));
    trim(num);
    trim(den);
    const std::size_t qdeg = num.size() - den.size();
    if (qdeg != static_cast<std::size_t>(n) * m)
        throw InconsistencyError("gaussian_poly: unexpected quotient degree");

    // den[0] == 1, so low-order series division is exact term by term.
    CoeffSeq q(qdeg + 1, 0);
    for (std::size_t s = 0; s <= qdeg; ++s) {
        BigInt acc = num[s];
        for (std::size_t j = 1; j < den.size() && j <= s; ++j) acc -= den[j] * q[s - j];
        q[s] = acc;
    }
    CoeffSeq back = poly_mul(q, den);
    trim(back);
    if (back != num)
        throw InconsistencyError("gaussian_poly: division by Molien denominators left a remainder");
    return q;
}

bool gaussian_ratio_check(unsigned n, unsigned m, unsigned N) {
    std::vector<unsigned> dn, dm, dnm;
    for (unsigned i = 1; i <= n; ++i) dn.push_back(i);
    for (unsigned i = 1; i <= m; ++i) dm.push_back(i);
    for (unsigned i = 1; i <= n + m; ++i) dnm.push_back(i);
    CoeffSeq lhs = series_mul(gaussian_poly(n, m), molien_series(dnm, N), N);
    CoeffSeq rhs = series_mul(molien_series(dn, N), molien_series(dm, N), N);
    lhs.resize(N + 1, 0);
    rhs.resize(N + 1, 0);
    return lhs == rhs;
}

BigCount convolve_conformal(unsigned n1, unsigned m1, unsigned n2, unsigned m2, unsigned s) {
    if (!n1 || !m1 || !n2 || !m2) throw RangeError("convolve_conformal needs all parameters >= 1");
    auto a = conformal_row_dp(n1, m1);
    auto b = conformal_row_dp(n2, m2);
    BigCount out = 0;
    for (std::size_t s1 = 0; s1 < a.size() && s1 <= s; ++s1)
        if (s - s1 < b.size()) out += a[s1] * b[s - s1];
    return out;
}

CoeffSeq product_gaussian(const std::vector<std::pair<unsigned, unsigned>>& pairs) {
    if (pairs.empty()) throw RangeError("product_gaussian needs at least one pair");
    CoeffSeq out{1};
    for (auto [n, m] : pairs) out = poly_mul(out, gaussian_poly(n, m));
    return out;
}

}  // namespace conformal
