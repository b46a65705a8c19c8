#include "conformal/invariant_algebra.hpp"

#include "conformal/errors.hpp"

#include <functional>
#include <numeric>

namespace conformal {

std::string kind_name(Kind k) { return k == Kind::Reciprocal ? "reciprocal" : "skew"; }

Kind parse_kind(const std::string& s) {
    if (s == "reciprocal" || s == "R" || s == "r") return Kind::Reciprocal;
    if (s == "skew" || s == "S" || s == "s") return Kind::Skew;
    throw RangeError("unknown polynomial kind '" + s + "'");
}

Kind kind_product(Kind a, Kind b) { return a == b ? Kind::Reciprocal : Kind::Skew; }

unsigned alpha_degree(const AlphaTuple& a) {
    unsigned s = 0;
    for (std::size_t r = 0; r < a.size(); ++r) s += static_cast<unsigned>(r + 1) * a[r];
    return s;
}

unsigned alpha_weight(const AlphaTuple& a) { return std::accumulate(a.begin(), a.end(), 0u); }

std::vector<AlphaTuple> enumerate_alpha(unsigned n, unsigned m, unsigned s) {
    if (n == 0) throw RangeError("enumerate_alpha needs n >= 1");
    std::vector<AlphaTuple> out;
    AlphaTuple cur(n, 0);
    // alpha_1 outermost and ascending gives lexicographic order directly
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned r, unsigned rem, unsigned left) {
        if (r > n) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        unsigned top = std::min(rem / r, left);
        for (unsigned a = 0; a <= top; ++a) {
            cur[r - 1] = a;
            rec(r + 1, rem - a * r, left - a);
        }
        cur[r - 1] = 0;
    };
    rec(1, s, m);
    return out;
}

unsigned monomial_degree(const InvMonomial& mono, const std::vector<unsigned>& block_sizes) {
    unsigned deg = mono.lambda;
    std::size_t off = 0;
    for (unsigned n : block_sizes) {
        for (unsigned r = 1; r <= n; ++r) deg += r * mono.exps.at(off + r - 1);
        off += n;
    }
    return deg;
}

namespace {

void need_valid(const AlphaTuple& a, unsigned n, unsigned m) {
    if (a.size() != n) throw RangeError("alpha tuple has wrong length");
    if (alpha_weight(a) > m) throw RangeError("alpha tuple weight exceeds m");
}

}  // namespace

InvMonomial term_plus(const AlphaTuple& alpha, unsigned n, unsigned m) {
    need_valid(alpha, n, m);
    return InvMonomial{alpha, m * n - alpha_degree(alpha)};
}

InvMonomial term_minus(const AlphaTuple& alpha, unsigned n, unsigned m) {
    need_valid(alpha, n, m);
    InvMonomial t;
    t.exps.assign(n, 0);
    t.exps[n - 1] = m - alpha_weight(alpha);
    // alpha_n lands on I_{n,0} = 1
    for (unsigned r = 1; r < n; ++r) t.exps[n - r - 1] += alpha[r - 1];
    t.lambda = alpha_degree(alpha);
    return t;
}

bool constitutive_check(const AlphaTuple& alpha, unsigned n, unsigned m) {
    InvMonomial p = term_plus(alpha, n, m);
    InvMonomial q = term_minus(alpha, n, m);
    InvMonomial prod{std::vector<unsigned>(n, 0), p.lambda + q.lambda};
    for (unsigned i = 0; i < n; ++i) prod.exps[i] = p.exps[i] + q.exps[i];

    InvMonomial want{std::vector<unsigned>(n, 0), m * n};
    want.exps[n - 1] = m - alpha_weight(alpha);
    for (unsigned r = 1; r <= n; ++r) {
        want.exps[r - 1] += alpha[r - 1];
        if (r < n) want.exps[n - r - 1] += alpha[r - 1];
    }
    return prod == want;
}

bool Coefficient::is_zero() const { return constant == 0 && linear.empty(); }

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    constant += o.constant;
    for (const auto& [sym, w] : o.linear) {
        auto& slot = linear[sym];
        slot += w;
        if (slot == 0) linear.erase(sym);
    }
    return *this;
}

Coefficient Coefficient::operator-() const { return scaled(-1); }

Coefficient Coefficient::scaled(const Rational& k) const {
    Coefficient c;
    if (k == 0) return c;
    c.constant = constant * k;
    for (const auto& [sym, w] : linear) c.linear[sym] = w * k;
    return c;
}

Coefficient Coefficient::symbol(CoeffSymbol sym, Rational w) {
    Coefficient c;
    if (w != 0) c.linear[sym] = w;
    return c;
}

Coefficient Coefficient::value(Rational v) {
    Coefficient c;
    c.constant = v;
    return c;
}

}  // namespace conformal
