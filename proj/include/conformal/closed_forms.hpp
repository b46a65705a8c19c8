#pragma once

#include "conformal/big.hpp"

#include <string>

namespace conformal {

enum class Regime { SmallS, Universal, Wide, Narrow, FallbackDp, OutsideSupport };

std::string regime_name(Regime r);

struct RegimeResult {
    BigCount value;
    Regime regime;
    bool reflected = false;     // s was replaced by nm - s
    unsigned n = 0, m = 0, s = 0;  // normalized inputs actually evaluated (n <= m)
};

// V_n^m(s) = W_n(s) + W_m(s) - W_{m+n}(s); any argument order.
BigInt v_func(unsigned n, unsigned m, unsigned s);

// D(k) = A(k) - B(k), D(0) = 0. Independent of n, m.
BigInt universal_d(unsigned k);

// Correction terms for s = m+n+k, n <= m. Throw RangeError outside
//   universal: 0 <= k <= m-n, k <= n+1
//   wide:      n+1 <= k <= min(2n+1, m-n)
//   narrow:    max(0, m-n) <= k <= n+1
BigInt correction_universal(unsigned n, unsigned m, unsigned k);
BigInt correction_wide(unsigned n, unsigned m, unsigned k);
BigInt correction_narrow(unsigned n, unsigned m, unsigned k);

// Closed-form dispatcher with DP fallback. Shared boundaries are evaluated
// by both formulas; disagreement throws InconsistencyError.
RegimeResult eval_piecewise(unsigned n, unsigned m, unsigned s);

}  // namespace conformal
