#include "conformal/big.hpp"

#include <algorithm>

namespace conformal {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string to_string(const Rational& v) {
    auto num = boost::multiprecision::numerator(v);
    auto den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

CoeffSeq series_mul(const CoeffSeq& a, const CoeffSeq& b, std::size_t limit) {
    if (a.empty() || b.empty()) return {};
    std::size_t len = std::min(limit + 1, a.size() + b.size() - 1);
    CoeffSeq out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

CoeffSeq poly_mul(const CoeffSeq& a, const CoeffSeq& b) {
    if (a.empty() || b.empty()) return {};
    return series_mul(a, b, a.size() + b.size() - 2);
}

}  // namespace conformal
