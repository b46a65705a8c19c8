#include "conformal/closed_forms.hpp"

#include "conformal/errors.hpp"
#include "conformal/partition.hpp"

#include <algorithm>
#include <mutex>
#include <utility>
#include <vector>

namespace conformal {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::SmallS: return "small_s";
        case Regime::Universal: return "universal";
        case Regime::Wide: return "wide";
        case Regime::Narrow: return "narrow";
        case Regime::FallbackDp: return "fallback_dp";
        case Regime::OutsideSupport: return "outside_support";
    }
    return "unknown";
}

namespace {

BigInt P(long q) { return q < 0 ? BigInt(0) : unrestricted_count(static_cast<unsigned>(q)); }
BigInt W(long n, long q) {
    return q < 0 ? BigInt(0) : restricted_count(static_cast<unsigned>(n), static_cast<unsigned>(q));
}

// S(j) = sum_{q<j} P(q)
BigInt partial_p(unsigned j) {
    BigInt acc = 0;
    for (unsigned q = 0; q < j; ++q) acc += P(q);
    return acc;
}

std::mutex d_mu;
std::vector<BigInt> d_cache{0};

}  // namespace

BigInt v_func(unsigned n, unsigned m, unsigned s) {
    return W(n, s) + W(m, s) - W(n + m, s);
}

BigInt universal_d(unsigned k) {
    std::lock_guard lock(d_mu);
    while (d_cache.size() <= k) {
        unsigned j = static_cast<unsigned>(d_cache.size());
        std::vector<BigInt> S(j + 1);
        for (unsigned i = 0; i <= j; ++i) S[i] = partial_p(i);
        BigInt A = 0;
        for (unsigned k1 = 0; k1 <= j; ++k1) A += S[k1] * S[j - k1];
        BigInt B = 0;
        for (unsigned r = 0; r < j; ++r) B += P(j - r) * d_cache[r];
        d_cache.push_back(A - B);
    }
    return d_cache[k];
}

BigInt correction_universal(unsigned n, unsigned m, unsigned k) {
    if (n > m) std::swap(n, m);
    if (k > m - n || k > n + 1)
        throw RangeError("correction_universal: need k <= m-n and k <= n+1");
    return universal_d(k);
}

BigInt correction_wide(unsigned n, unsigned m, unsigned k) {
    if (n > m) std::swap(n, m);
    if (k < n + 1 || k > 2 * n + 1 || k > m - n)
        throw RangeError("correction_wide: need n+1 <= k <= min(2n+1, m-n)");
    const long N = n, M = m;
    // L(j) for j = n+1..k; L(j) recurses only into L(j') with j' >= n+2.
    std::vector<BigInt> L(k + 1, 0);
    for (long j = N + 1; j <= static_cast<long>(k); ++j) {
        BigInt C = 0;
        for (long r = N; r <= j - 1; ++r)
            C += (W(M + N, M + r) - W(M, M + r)) * (P(j + N - r) - W(N, j + N - r));
        // second sum: n1 + n2 = n with both parts >= 1
        for (long n1 = 1; n1 <= N - 1; ++n1)
            C += (P(M + n1) - W(M, M + n1)) * (P(j + N - n1) - W(N, j + N - n1));
        BigInt E = 0;
        for (long r = std::max(1L, j - N - 1); r <= j; ++r) E += P(r) * universal_d(j - r);
        for (long r = 1; r <= j - N - 2; ++r) E += P(r) * L[j - r];
        L[j] = C - E;
    }
    return L[k];
}

BigInt correction_narrow(unsigned n, unsigned m, unsigned k) {
    if (n > m) std::swap(n, m);
    if (k < m - n || k > n + 1) throw RangeError("correction_narrow: need m-n <= k <= n+1");
    const long N = n, M = m;
    std::vector<BigInt> Mv(k + 1, 0);
    for (long j = M - N; j <= static_cast<long>(k); ++j) {
        BigInt K = 0;
        for (long q = 1; q <= M - N; ++q)
            K += (P(M + j - q) - W(M, M + j - q)) * (P(N + q) - W(N, N + q));
        for (long q = 1; 2 * q <= N + j - M; ++q) {
            BigInt t = W(N, M + q) * W(M, N + j - q) - v_func(n, m, M + q) * P(N + j - q) +
                       W(N, N + j - q) * W(M, M + q) - v_func(n, m, N + j - q) * P(M + q);
            // self-paired midpoint m+q == n+j-q is counted once
            if (M + q == N + j - q) t /= 2;
            K += t;
        }
        BigInt Nn = 0;
        for (long r = std::max(1L, j - M + N); r <= j - 2; ++r) Nn += P(r) * universal_d(j - r);
        for (long r = 1; r <= j + N - M - 1; ++r) Nn += P(r) * Mv[j - r];
        Mv[j] = K - Nn;
    }
    return Mv[k];
}

RegimeResult eval_piecewise(unsigned n, unsigned m, unsigned s) {
    if (n == 0 || m == 0) throw RangeError("eval_piecewise needs n, m >= 1");
    if (n > m) std::swap(n, m);
    RegimeResult res;
    res.n = n;
    res.m = m;
    if (s > n * m) {
        res.value = 0;
        res.regime = Regime::OutsideSupport;
        res.s = s;
        return res;
    }
    if (n * m - s < s) {
        s = n * m - s;
        res.reflected = true;
    }
    res.s = s;
    if (s <= n) {
        res.value = P(s);
        res.regime = Regime::SmallS;
        return res;
    }
    if (s <= m) {
        res.value = W(n, s);
        res.regime = Regime::SmallS;
        return res;
    }
    const BigInt V = v_func(n, m, s);
    if (s <= m + n) {
        res.value = V;
        res.regime = Regime::SmallS;
        return res;
    }
    const unsigned k = s - m - n;
    const bool in11 = k <= m - n && k <= n + 1;
    const bool in12 = k >= n + 1 && k <= 2 * n + 1 && k <= m - n;
    const bool in13 = k >= m - n && k <= n + 1;

    auto agree = [&](const BigInt& a, const BigInt& b, const char* what) {
        if (a != b)
            throw InconsistencyError(std::string("eval_piecewise boundary mismatch (") + what +
                                     ") at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                     " k=" + std::to_string(k));
    };

    if (in11) {
        BigInt d = correction_universal(n, m, k);
        if (in12) agree(d, correction_wide(n, m, k), "universal/wide");
        if (in13) agree(d, correction_narrow(n, m, k), "universal/narrow");
        res.value = V + d;
        res.regime = Regime::Universal;
    } else if (in12) {
        BigInt l = correction_wide(n, m, k);
        if (in13) agree(l, correction_narrow(n, m, k), "wide/narrow");
        res.value = V + l;
        res.regime = Regime::Wide;
    } else if (in13) {
        res.value = V + correction_narrow(n, m, k);
        res.regime = Regime::Narrow;
    } else {
        res.value = conformal_count_dp(n, m, s);
        res.regime = Regime::FallbackDp;
    }
    return res;
}

}  // namespace conformal
