#include "verify.hpp"

#include "conformal/closed_forms.hpp"
#include "conformal/errors.hpp"
#include "conformal/genfunc.hpp"
#include "conformal/group_gate.hpp"
#include "conformal/invariant_algebra.hpp"
#include "conformal/numeric_roots.hpp"
#include "conformal/partition.hpp"
#include "conformal/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace conformal::cli {

namespace {

struct Cell {
    unsigned n, m;
};

struct CellResult {
    std::size_t checks = 0;
    std::vector<CheckFailure> failures;
    std::exception_ptr error;
};

std::string where(unsigned n, unsigned m) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

std::string where(unsigned n, unsigned m, unsigned s) {
    return where(n, m) + " s=" + std::to_string(s);
}

// Cells run in any order; results are merged in grid order so the report
// does not depend on the thread count.
SuiteReport run_grid(const std::string& name, const std::vector<Cell>& cells, unsigned threads,
                     const std::function<void(const Cell&, CellResult&)>& body) {
    std::vector<CellResult> results(cells.size());
    auto work = [&](std::size_t i) {
        try {
            body(cells[i], results[i]);
        } catch (...) {
            results[i].error = std::current_exception();
        }
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    } else {
        std::vector<std::future<void>> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < threads; ++t)
            pool.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i; (i = next++) < cells.size();) work(i);
            }));
        for (auto& f : pool) f.get();
    }
    SuiteReport rep;
    rep.suite = name;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto& r = results[i];
        if (r.error) {
            try {
                std::rethrow_exception(r.error);
            } catch (const ResourceCeilingError&) {
                throw;
            } catch (const std::exception& e) {
                r.failures.push_back({where(cells[i].n, cells[i].m), e.what()});
            }
        }
        rep.checks += r.checks;
        for (auto& f : r.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

std::vector<Cell> grid(unsigned max_n, unsigned max_m, bool ordered) {
    std::vector<Cell> cells;
    for (unsigned n = 1; n <= max_n; ++n)
        for (unsigned m = ordered ? n : 1; m <= max_m; ++m) cells.push_back({n, m});
    return cells;
}

void expect(CellResult& r, bool ok, std::string at, std::string what) {
    ++r.checks;
    if (!ok) r.failures.push_back({std::move(at), std::move(what)});
}

void partitions_cell(const Cell& c, CellResult& r) {
    const unsigned n = c.n, m = c.m, N = n * m;
    auto dp = conformal_row_dp(n, m);
    auto gauss = gaussian_poly(n, m);
    auto toep = conformal_row_toeplitz(n, m);
    expect(r, gauss.size() == N + 1 && toep.size() == N + 1, where(n, m), "row length");
    if (r.failures.size()) return;
    BigCount total = 0;
    for (unsigned s = 0; s <= N; ++s) {
        auto o = conformal_count_oracle(n, m, s, default_oracle_ceiling());
        expect(r, o == dp[s] && dp[s] == gauss[s] && gauss[s] == toep[s], where(n, m, s),
               "methods disagree: oracle " + o.str() + " dp " + dp[s].str() + " gauss " +
                   gauss[s].str() + " toeplitz " + toep[s].str());
        expect(r, dp[s] == dp[N - s], where(n, m, s), "not palindromic");
        if (2 * s < N) expect(r, dp[s] <= dp[s + 1], where(n, m, s), "not unimodal");
        total += dp[s];
    }
    expect(r, dp == conformal_row_dp(m, n), where(n, m), "index swap");
    expect(r, total == binomial(n + m, n), where(n, m), "row sum " + total.str());
}

void closedforms_cell(const Cell& c, CellResult& r) {
    auto dp = conformal_row_dp(c.n, c.m);
    for (unsigned s = 0; s <= c.n * c.m; ++s) {
        auto res = eval_piecewise(c.n, c.m, s);
        expect(r, res.value == dp[s], where(c.n, c.m, s),
               "piecewise " + res.value.str() + " (" + regime_name(res.regime) + ") vs dp " + dp[s].str());
    }
}

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
}

SelfDualPoly random_numeric(unsigned n, unsigned m, Kind k, std::mt19937_64& rng) {
    auto p = assemble(n, m, k);
    Bindings b;
    for (const auto& s : p.symbols()) b[s] = small_rational(rng);
    return bind_symbols(p, b);
}

std::vector<double> random_positive(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    std::vector<double> x(n);
    for (auto& v : x) v = std::exp(d(rng));
    return x;
}

void algebra_cell(const Cell& c, CellResult& r) {
    const unsigned n = c.n, m = c.m;
    std::mt19937_64 rng(1000 * n + m);
    for (Kind k : {Kind::Reciprocal, Kind::Skew}) {
        const std::string at = where(n, m) + " kind=" + kind_name(k);
        auto by_count = BigCount(mu_by_count(n, m, k));
        auto closed = mu_closed(n, m, k);
        expect(r, by_count == closed, at, "mu by count " + by_count.str() + " vs closed " + closed.str());
        auto p = random_numeric(n, m, k, rng);
        auto st = check_structure(p);
        expect(r, st.ok, at, st.ok ? "" : st.problems.front());
        for (int t = 0; t < 5; ++t) {
            auto x = random_positive(n, rng);
            double lam = random_positive(1, rng)[0];
            auto tr = conformal_transform_check(p, x, lam, 1e-10);
            std::ostringstream os;
            os << "transform rel error " << tr.rel_error;
            expect(r, tr.ok, at, os.str());
        }
        if (m <= 2 && n <= 3)
            for (Kind k2 : {Kind::Reciprocal, Kind::Skew}) {
                auto q = random_numeric(n, 1, k2, rng);
                auto pq = multiply(p, q);
                expect(r, pq.kind == kind_product(k, k2), at, "product kind");
                auto x = random_positive(n, rng);
                double lam = random_positive(1, rng)[0];
                double lhs = evaluate(pq, lam, x), rhs = evaluate(p, lam, x) * evaluate(q, lam, x);
                expect(r, std::abs(lhs - rhs) <= 1e-10 * std::max({1.0, std::abs(lhs), std::abs(rhs)}), at,
                       "product evaluation");
            }
    }
    expect(r, BigCount(middle_fixed_points(n, m)) == q_closed(n, m), where(n, m), "Q count");
}

void roots_cell(const Cell& c, CellResult& r) {
    const unsigned n = c.n, m = c.m;
    std::mt19937_64 rng(7000 * n + m);
    for (int t = 0; t < 10; ++t) {
        Point x{random_positive(n, rng)};
        auto C = random_coefficients(n, m, rng());
        const std::string at = where(n, m) + " trial=" + std::to_string(t);
        auto res = positive_root(n, m, C, x);
        auto [mh, ma] = bounds_basic(x);
        expect(r, res.lambda >= mh * (1 - 1e-9) && res.lambda <= ma * (1 + 1e-9), at, "root outside mean bracket");
        if (n == 3 || n == 4) {
            auto [lo, hi] = bounds_enhanced(x);
            expect(r, res.lambda >= lo * (1 - 1e-9) && res.lambda <= hi * (1 + 1e-9), at,
                   "root outside enhanced bracket");
        }
        auto d = root_duality_check(n, m, C, x);
        expect(r, d.ok, at, "root duality product " + std::to_string(d.product));
    }
}

SuiteReport groups_suite() {
    SuiteReport rep;
    rep.suite = "groups";
    rep.table.push_back({"group", "degrees", "raw_duality", "dual_duality", "two_root", "computed", "expected"});
    for (const auto& e : builtin_catalog()) {
        auto c = classify(e);
        std::string deg;
        for (unsigned d : c.degrees) deg += (deg.empty() ? "" : " ") + std::to_string(d);
        rep.table.push_back({c.name, deg, c.raw_duality ? "yes" : "no", c.dual_duality ? "yes" : "no",
                             c.two_root ? (*c.two_root ? "yes" : "no") : "-", verdict_name(c.computed),
                             verdict_name(c.expected)});
        ++rep.checks;
        if (!c.agrees()) rep.failures.push_back({c.name, "computed " + verdict_name(c.computed)});
    }
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"partitions", "closedforms", "algebra", "roots", "groups"};
    return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyCaps& caps) {
    if (suite == "partitions") return run_grid(suite, grid(caps.max_n, caps.max_m, true), caps.threads, partitions_cell);
    if (suite == "closedforms")
        return run_grid(suite, grid(caps.max_n, caps.max_m, true), caps.threads, closedforms_cell);
    // symbolic and numeric suites stay small whatever the caps say
    if (suite == "algebra")
        return run_grid(suite, grid(std::min(caps.max_n, 5u), std::min(caps.max_m, 4u), false), caps.threads,
                        algebra_cell);
    if (suite == "roots")
        return run_grid(suite, grid(std::min(caps.max_n, 6u), std::min(caps.max_m, 3u), false), caps.threads,
                        roots_cell);
    if (suite == "groups") return groups_suite();
    throw RangeError("unknown suite '" + suite + "'");
}

}  // namespace conformal::cli
