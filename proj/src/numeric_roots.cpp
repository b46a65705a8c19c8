#include "conformal/numeric_roots.hpp"

#include "conformal/errors.hpp"
#include "conformal/group_gate.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace conformal {

std::vector<double> elementary_symmetric(const Point& x) {
    const std::size_t n = x.x.size();
    if (n == 0) throw RangeError("point needs at least one coordinate");
    std::vector<double> I(n + 1, 0.0);
    I[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double xi = x.x[i];
        if (!(xi > 0) || !std::isfinite(xi)) throw RangeError("point coordinates must be finite and > 0");
        for (std::size_t r = i + 1; r >= 1; --r) I[r] += I[r - 1] * xi;
    }
    for (double v : I)
        if (!std::isfinite(v)) throw RangeError("elementary symmetric invariant overflowed");
    return I;
}

CoeffMap constant_coefficients(unsigned n, unsigned m, double value) {
    CoeffMap C;
    for (unsigned s = 0; 2 * s <= n * m; ++s) {
        auto tuples = enumerate_alpha(n, m, s);
        for (unsigned l = 1; l <= tuples.size(); ++l) C[{s, l}] = value;
    }
    C[{0, 1}] = 1.0;
    return C;
}

CoeffMap random_coefficients(unsigned n, unsigned m, std::uint64_t seed, double hi) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, hi);
    CoeffMap C;
    for (unsigned s = 0; 2 * s <= n * m; ++s) {
        auto tuples = enumerate_alpha(n, m, s);
        for (unsigned l = 1; l <= tuples.size(); ++l) C[{s, l}] = dist(rng);
    }
    C[{0, 1}] = 1.0;
    return C;
}

namespace {

double power_product(const std::vector<double>& I, const std::vector<unsigned>& e) {
    double v = 1.0;
    for (std::size_t r = 0; r < e.size(); ++r)
        if (e[r]) v *= std::pow(I[r + 1], static_cast<double>(e[r]));
    return v;
}

double coeff_at(const CoeffMap& C, unsigned s, unsigned l) {
    if (s == 0 && l == 1) {
        auto it = C.find({0, 1});
        if (it != C.end() && it->second != 1.0) throw RangeError("C_{0,1} must be 1 (monic)");
        return 1.0;
    }
    auto it = C.find({s, l});
    double v = it == C.end() ? 0.0 : it->second;
    if (v < 0) throw RangeError("positive_root needs nonnegative coefficients");
    return v;
}

struct Poly {
    std::vector<double> a;
    double operator()(double lam) const {
        double v = 0;
        for (std::size_t p = a.size(); p-- > 0;) v = v * lam + a[p];
        return v;
    }
    double magnitude(double lam) const {
        double v = 0;
        for (std::size_t p = a.size(); p-- > 0;) v = v * lam + std::abs(a[p]);
        return v;
    }
};

}  // namespace

std::vector<double> lambda_coefficients(unsigned n, unsigned m, const CoeffMap& C, const Point& x) {
    if (x.x.size() != n) throw RangeError("point dimension differs from n");
    auto I = elementary_symmetric(x);
    const unsigned N = n * m;
    std::vector<double> a(N + 1, 0.0);
    for (unsigned s = 0; 2 * s <= N; ++s) {
        auto tuples = enumerate_alpha(n, m, s);
        for (unsigned l = 1; l <= tuples.size(); ++l) {
            double c = coeff_at(C, s, l);
            if (c == 0) continue;
            const auto& alpha = tuples[l - 1];
            InvMonomial plus = term_plus(alpha, n, m);
            InvMonomial minus = term_minus(alpha, n, m);
            a[plus.lambda] += c * power_product(I, plus.exps);
            a[minus.lambda] -= c * power_product(I, minus.exps);
        }
    }
    return a;
}

std::pair<double, double> bounds_basic(const Point& x) {
    auto I = elementary_symmetric(x);
    const double n = static_cast<double>(x.x.size());
    // n / sum(1/x_i) = n I_n / I_{n-1}
    return {n * I.back() / I[I.size() - 2], I[1] / n};
}

RootResult positive_root(unsigned n, unsigned m, const CoeffMap& C, const Point& x, double tol) {
    if (n == 0 || m == 0) throw RangeError("positive_root needs n, m >= 1");
    if (x.x.size() != n) throw RangeError("point dimension differs from n");
    RootResult res;
    if (n == 1) {
        // monic skew in one variable: lambda = x_1
        elementary_symmetric(x);
        res.lambda = res.lo = res.hi = x.x[0];
        res.sign_changes = 1;
        return res;
    }
    Poly f{lambda_coefficients(n, m, C, x)};
    res.sign_changes = static_cast<unsigned>(descartes_sign_changes(f.a));
    auto [mh, ma] = bounds_basic(x);
    double lo = mh / 2, hi = 2 * ma;
    unsigned widen = 0;
    while (!(f(lo) <= 0 && f(hi) >= 0)) {
        if (++widen > 60) {
            std::ostringstream os;
            os << "no sign change in [" << lo << ", " << hi << "] after 60 widenings";
            throw BracketError(os.str());
        }
        if (f(lo) > 0) lo /= 2;
        if (f(hi) < 0) hi *= 2;
    }
    res.lo = lo;
    res.hi = hi;
    unsigned it = 0;
    while (hi - lo > tol * hi && it < 4000) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // no representable midpoint left
        double v = f(mid);
        if (v == 0) {
            lo = hi = mid;
            break;
        }
        (v < 0 ? lo : hi) = mid;
        ++it;
    }
    res.iterations = it;
    res.lambda = 0.5 * (lo + hi);
    double mag = f.magnitude(res.lambda);
    res.residual = mag > 0 ? std::abs(f(res.lambda)) / mag : 0.0;
    const double slack = 1e-9;
    if (res.lambda < mh * (1 - slack) || res.lambda > ma * (1 + slack)) {
        std::ostringstream os;
        os << "root " << res.lambda << " outside [" << mh << ", " << ma << "]";
        throw InconsistencyError(os.str());
    }
    return res;
}

std::vector<double> mean_chain(const Point& x) {
    auto I = elementary_symmetric(x);
    const unsigned n = static_cast<unsigned>(x.x.size());
    std::vector<double> chain;
    for (unsigned r = 1; r <= n; ++r)
        chain.push_back(std::pow(I[r] / binomial(n, r).convert_to<double>(), 1.0 / r));
    for (unsigned j = n - 1; j >= 1; --j)
        chain.push_back(std::pow(binomial(n, j).convert_to<double>() * I[n] / I[n - j], 1.0 / j));
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (chain[i] > chain[i - 1] * (1 + 1e-12))
            throw InconsistencyError("mean chain not monotone at position " + std::to_string(i));
    return chain;
}

std::pair<double, double> bounds_enhanced(const Point& x) {
    auto I = elementary_symmetric(x);
    const std::size_t n = x.x.size();
    double a, b;
    if (n == 3) {
        a = I[2] / I[1];
        b = std::sqrt(I[3] * I[1] / I[2]);
    } else if (n == 4) {
        a = std::sqrt(I[3] / I[1]);
        b = std::sqrt(I[4] * I[1] / I[3]);
    } else {
        throw RangeError("bounds_enhanced supports n = 3 and n = 4 only");
    }
    double lo = std::min(a, b), hi = std::max(a, b);
    auto [mh, ma] = bounds_basic(x);
    if (lo < mh * (1 - 1e-12) || hi > ma * (1 + 1e-12))
        throw InconsistencyError("enhanced bracket escapes the mean bracket");
    return {lo, hi};
}

bool pairing_condition_check(const Point& x, double tol) {
    auto I = elementary_symmetric(x);
    const unsigned n = static_cast<unsigned>(x.x.size());
    const double g = std::pow(I[n], 1.0 / n);
    for (unsigned r = 1; 2 * r < n; ++r) {
        double v = std::pow(I[n - r] / I[r], 1.0 / (n - 2 * r));
        if (std::abs(v - g) > tol * g) return false;
    }
    return true;
}

DualityReport root_duality_check(unsigned n, unsigned m, const CoeffMap& C, const Point& x,
                                 double tol) {
    Point inv;
    for (double v : x.x) inv.x.push_back(1.0 / v);
    DualityReport rep;
    rep.root = positive_root(n, m, C, x).lambda;
    rep.root_inverse = positive_root(n, m, C, inv).lambda;
    rep.product = rep.root * rep.root_inverse;
    rep.ok = std::abs(rep.product - 1.0) <= tol;
    return rep;
}

}  // namespace conformal
