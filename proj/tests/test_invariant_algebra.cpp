#include "conformal/errors.hpp"
#include "conformal/invariant_algebra.hpp"
#include "conformal/serialize.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace conformal;

namespace {

Bindings random_bindings(const SelfDualPoly& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    Bindings b;
    for (const auto& s : p.symbols()) b[s] = Rational(num(rng), den(rng));
    return b;
}

std::vector<double> random_point(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    std::vector<double> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(std::exp(d(rng)));
    return x;
}

}  // namespace

TEST_CASE("alpha enumeration") {
    CHECK(enumerate_alpha(2, 1, 1) == std::vector<AlphaTuple>{{1, 0}});
    CHECK(enumerate_alpha(4, 2, 4).size() == 3);
    CHECK(enumerate_alpha(3, 2, 0) == std::vector<AlphaTuple>{{0, 0, 0}});
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned m = 1; m <= 4; ++m)
            for (unsigned s = 0; s <= n * m; ++s) {
                auto v = enumerate_alpha(n, m, s);
                CHECK(v.size() == oracle::conformal(n, m, s));
                CHECK(std::is_sorted(v.begin(), v.end()));
                for (const auto& a : v) {
                    CHECK(alpha_degree(a) == s);
                    CHECK(alpha_weight(a) <= m);
                }
            }
}

TEST_CASE("counter-partner terms") {
    auto p0 = term_plus({0, 0, 0}, 3, 2);
    auto m0 = term_minus({0, 0, 0}, 3, 2);
    CHECK(p0 == InvMonomial{{0, 0, 0}, 6});
    CHECK(m0 == InvMonomial{{0, 0, 2}, 0});
    auto p = term_plus({0, 0, 1, 0}, 4, 2);
    auto m = term_minus({0, 0, 1, 0}, 4, 2);
    CHECK(p == InvMonomial{{0, 0, 1, 0}, 5});
    CHECK(m == InvMonomial{{1, 0, 0, 1}, 3});
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m2 = 1; m2 <= 4; ++m2)
            for (unsigned s = 0; s <= n * m2; ++s)
                for (const auto& a : enumerate_alpha(n, m2, s)) {
                    std::vector<unsigned> sizes{n};
                    CHECK(monomial_degree(term_plus(a, n, m2), sizes) == n * m2);
                    CHECK(monomial_degree(term_minus(a, n, m2), sizes) == n * m2);
                    CHECK(constitutive_check(a, n, m2));
                }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        unsigned s = std::uniform_int_distribution<unsigned>(0, 18)(rng);
        auto v = enumerate_alpha(6, 3, s);
        CHECK(constitutive_check(v[rng() % v.size()], 6, 3));
    }
    CHECK_THROWS_AS(term_plus({3, 0}, 2, 2), RangeError);
}

TEST_CASE("assembled examples") {
    auto r42 = assemble(4, 2, Kind::Reciprocal);
    auto s42 = assemble(4, 2, Kind::Skew);
    CHECK(independent_coefficients(r42) == 9);
    CHECK(independent_coefficients(s42) == 6);
    CHECK(check_structure(r42).ok);
    CHECK(check_structure(s42).ok);

    auto s21 = assemble(2, 1, Kind::Skew, {{{0, 1}, 1}, {{1, 1}, 0}});
    REQUIRE(s21.terms.size() == 2);
    CHECK(s21.terms[0].mono == InvMonomial{{0, 0}, 2});
    CHECK(s21.terms[0].coeff == Coefficient::value(1));
    CHECK(s21.terms[1].mono == InvMonomial{{0, 1}, 0});
    CHECK(s21.terms[1].coeff == Coefficient::value(-1));
    CHECK(to_string(s21) == "1*lambda^2 + -1*I_{2,2}");
}

TEST_CASE("middle block only for even order") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 4; ++m) {
            auto p = assemble(n, m, Kind::Reciprocal);
            bool has_mid = false;
            for (const auto& t : p.terms) has_mid |= 2 * t.mono.lambda == n * m;
            CHECK(has_mid == ((n * m) % 2 == 0));
        }
}

TEST_CASE("structure check catches breakage") {
    auto p = assemble(3, 2, Kind::Skew);
    p.terms.back().coeff = p.terms.back().coeff.scaled(2);
    CHECK_FALSE(check_structure(p).ok);
    auto q = assemble(3, 2, Kind::Reciprocal);
    q.terms.front().mono.lambda += 1;
    CHECK_FALSE(check_structure(q).ok);
}

TEST_CASE("mu counts") {
    for (unsigned m = 1; m <= 7; ++m) CHECK(mu_by_count(1, m, Kind::Reciprocal) == 1 + m / 2);
    CHECK(mu_by_count(3, 1, Kind::Skew) == 2);
    CHECK(mu_by_count(4, 2, Kind::Reciprocal) == 9);
    CHECK(mu_by_count(4, 2, Kind::Skew) == 6);
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned m = 1; m <= 5; ++m) {
            CHECK(BigCount(mu_by_count(n, m, Kind::Reciprocal)) == mu_closed(n, m, Kind::Reciprocal));
            CHECK(BigCount(mu_by_count(n, m, Kind::Skew)) == mu_closed(n, m, Kind::Skew));
        }
}

TEST_CASE("q closed form") {
    CHECK(q_closed(4, 2) == 3);
    CHECK(q_closed(2, 4) == 3);
    CHECK(q_closed(3, 5) == 0);
    CHECK(q_closed(0, 4) == 1);
    CHECK(q_closed(5, 0) == 1);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 1; m <= 6; ++m) {
            CHECK(q_closed(n, m) == q_closed(m, n));
            CHECK(BigCount(middle_fixed_points(n, m)) == q_closed(n, m));
        }
    // the (3,4) middle block keeps a single skew coefficient
    auto s34 = assemble(3, 4, Kind::Skew);
    std::set<CoeffSymbol> mid;
    for (const auto& t : s34.terms)
        if (t.mono.lambda == 6)
            for (const auto& kv : t.coeff.linear) mid.insert(kv.first);
    CHECK(mid.size() == 2);  // one pair of symbols, one independent combination
}

TEST_CASE("tuple split") {
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 1; m <= 6; ++m) {
            auto t = tuple_split(n, m);
            CHECK(t.lower == t.upper);
            CHECK(t.lower + t.middle + t.upper == oracle::binom(n + m, n));
        }
}

TEST_CASE("product closed forms") {
    CHECK(mu_product_closed({{4, 2}}, Kind::Reciprocal) == mu_closed(4, 2, Kind::Reciprocal));
    CHECK(mu_product_closed({{2, 1}, {2, 1}}, Kind::Reciprocal) == 5);
    CHECK(mu_product_closed({{2, 1}, {2, 1}}, Kind::Skew) == 4);
    CHECK(mu_product_closed({{3, 1}, {2, 2}}, Kind::Skew) == mu_product_closed({{3, 1}, {2, 2}}, Kind::Reciprocal));
    CHECK(mu_product_by_count({{2, 1}, {2, 1}}, Kind::Reciprocal, false) == 5);
    CHECK(mu_product_by_count({{2, 1}, {2, 1}}, Kind::Skew, false) == 4);
    for (auto fs : std::vector<std::vector<Factor>>{{{1, 2}, {2, 1}}, {{2, 2}, {1, 3}}, {{3, 1}, {1, 1}}, {{2, 1}, {1, 2}, {1, 1}}})
        for (Kind k : {Kind::Reciprocal, Kind::Skew})
            CHECK(BigCount(mu_product_by_count(fs, k, false)) == mu_product_closed(fs, k));
}

TEST_CASE("product assembly") {
    std::vector<Factor> fs{{2, 2}, {3, 1}};
    auto p = assemble_product(fs, Kind::Skew, false);
    CHECK(check_structure(p).ok);
    for (unsigned s = 0; 2 * s <= 7; ++s) {
        std::set<unsigned> ls;
        for (const auto& t : p.terms)
            for (const auto& kv : t.coeff.linear)
                if (kv.first.s == s) ls.insert(kv.first.l);
        CHECK(ls.size() == oracle::product_system({{2, 2}, {3, 1}}, s));
    }
    // constant term of the skew product
    const auto& last = p.terms.back();
    CHECK(last.mono == InvMonomial{{0, 2, 0, 0, 1}, 0});
    CHECK(last.coeff == Coefficient::symbol({0, 1}, -1));
    auto sym = assemble_product({{2, 1}, {2, 1}}, Kind::Skew, true);
    CHECK(check_structure(sym).ok);
    CHECK(independent_coefficients(sym) <= independent_coefficients(assemble_product({{2, 1}, {2, 1}}, Kind::Skew, false)));
}

TEST_CASE("multiplication follows the kind table") {
    auto s = assemble(2, 1, Kind::Skew, {{{0, 1}, 1}, {{1, 1}, 0}});
    auto sq = multiply(s, s);
    CHECK(sq.kind == Kind::Reciprocal);
    CHECK(sq.factors == std::vector<Factor>{{2, 2}});
    CHECK(sq.terms.size() == 3);
    CHECK(check_structure(sq).ok);

    std::mt19937_64 rng(5);
    for (Kind a : {Kind::Reciprocal, Kind::Skew})
        for (Kind b : {Kind::Reciprocal, Kind::Skew}) {
            auto p = assemble(3, 1, a);
            p = bind_symbols(p, random_bindings(p, rng));
            auto q = assemble(3, 2, b);
            q = bind_symbols(q, random_bindings(q, rng));
            auto pq = multiply(p, q);
            auto qp = multiply(q, p);
            CHECK(pq.kind == kind_product(a, b));
            CHECK(check_structure(pq).ok);
            CHECK(to_json(pq) == to_json(qp));
            auto x = random_point(3, rng);
            double lam = 0.7;
            CHECK(oracle::close(evaluate(pq, lam, x), evaluate(p, lam, x) * evaluate(q, lam, x), 1e-10));
        }
    CHECK_THROWS_AS(multiply(assemble(2, 1, Kind::Skew, {{{0, 1}, 1}, {{1, 1}, 1}}),
                             assemble(3, 1, Kind::Skew, {{{0, 1}, 1}, {{1, 1}, 1}})),
                    MismatchError);
    CHECK_THROWS_AS(multiply(assemble(2, 1, Kind::Skew), assemble(2, 1, Kind::Skew)), RangeError);
}

TEST_CASE("conformal transform") {
    auto s21 = assemble(2, 1, Kind::Skew, {{{0, 1}, 1}, {{1, 1}, 0}});
    auto rep = conformal_transform_check(s21, {1, 4}, 3, 1e-12);
    CHECK(rep.ok);
    CHECK(rep.left == doctest::Approx(1.0 / 9 - 1.0 / 4));
    CHECK(rep.right == doctest::Approx(-5.0 / 36));
    std::mt19937_64 rng(9);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 2; ++m)
            for (Kind k : {Kind::Reciprocal, Kind::Skew}) {
                auto p = assemble(n, m, k);
                p = bind_symbols(p, random_bindings(p, rng));
                CHECK(conformal_transform_check(p, std::vector<double>(n, 1.0), 1.0, 1e-12).ok);
                for (int t = 0; t < 10; ++t) {
                    auto x = random_point(n, rng);
                    double lam = std::exp(std::uniform_real_distribution<double>(-1, 1)(rng));
                    CHECK(conformal_transform_check(p, x, lam, 1e-10).ok);
                }
            }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(2);
    auto p = assemble_product({{2, 1}, {1, 2}}, Kind::Skew, false);
    auto j = to_json(p);
    CHECK(j["schema"] == kSelfDualSchema);
    auto back = selfdual_from_json(j);
    CHECK(to_json(back) == j);
    auto q = bind_symbols(assemble(3, 2, Kind::Reciprocal), random_bindings(assemble(3, 2, Kind::Reciprocal), rng));
    CHECK(to_json(selfdual_from_json(to_json(q))) == to_json(q));
    CHECK_THROWS_AS(selfdual_from_json(nlohmann::json{{"schema", "nope"}}), RangeError);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
}

TEST_CASE("mu ordering for two-block products") {
    // non-strict everywhere; strict once m >= 2 and the blocks are not both trivial
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n1 = 1; n1 <= 3; ++n1)
            for (unsigned n2 = n1; n2 <= 3; ++n2) {
                std::vector<Factor> fs{{n1, m}, {n2, m}};
                auto full = mu_by_count(n1 + n2, m, Kind::Skew);
                auto sym = mu_product_by_count(fs, Kind::Skew, true);
                auto unsym = mu_product_by_count(fs, Kind::Skew, false);
                INFO("m=" << m << " n1=" << n1 << " n2=" << n2);
                CHECK(full <= sym);
                CHECK(sym <= unsym);
                if (m >= 2 && n1 + n2 >= 3) {
                    CHECK(full < sym);
                    CHECK(sym < unsym);
                }
            }
    // smallest case where the first inequality is an equality
    CHECK(mu_by_count(2, 2, Kind::Skew) == mu_product_by_count({{1, 2}, {1, 2}}, Kind::Skew, true));
}

TEST_CASE("skew cancellations in assembled middle block") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned m = 1; m <= 5; ++m) {
            if ((n * m) % 2) continue;
            auto p = assemble(n, m, Kind::Skew);
            std::set<CoeffSymbol> alive;
            for (const auto& t : p.terms)
                if (2 * t.mono.lambda == n * m)
                    for (const auto& kv : t.coeff.linear) alive.insert(kv.first);
            auto tuples = oracle::conformal(n, m, n * m / 2);
            INFO("n=" << n << " m=" << m);
            CHECK(BigCount(tuples - alive.size()) == q_closed(n, m));
        }
}
