#include "conformal/errors.hpp"
#include "conformal/partition.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace conformal;

TEST_CASE("restricted counts") {
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(restricted_count(n, 0) == 1);
        CHECK(restricted_count(n, 1) == 1);
    }
    for (unsigned s = 0; s <= 20; ++s) CHECK(restricted_count(1, s) == 1);
    CHECK(restricted_count(2, 4) == 3);
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned s = 0; s <= 25; ++s) CHECK(restricted_count(n, s) == oracle::restricted(n, s));
}

TEST_CASE("unrestricted counts") {
    CHECK(unrestricted_count(0) == 1);
    CHECK(unrestricted_count(5) == 7);
    CHECK(unrestricted_count(100) == BigInt("190569292"));
    for (unsigned s = 0; s <= 30; ++s) {
        CHECK(unrestricted_count(s) == restricted_count(s, s));
        CHECK(unrestricted_count(s) == oracle::unrestricted(s));
    }
}

TEST_CASE("table is stable under concurrent growth") {
    std::vector<std::thread> pool;
    std::vector<BigCount> got(8);
    for (unsigned t = 0; t < 8; ++t)
        pool.emplace_back([t, &got] { got[t] = restricted_count(5 + t, 150 + 20 * t); });
    for (auto& th : pool) th.join();
    for (unsigned t = 0; t < 8; ++t) CHECK(got[t] == restricted_count(5 + t, 150 + 20 * t));
}

TEST_CASE("oracle examples") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 4; ++m) {
            CHECK(conformal_count_oracle(n, m, 0) == 1);
            CHECK(conformal_count_oracle(n, m, n * m) == 1);
            CHECK(conformal_count_oracle(n, m, n * m + 1) == 0);
        }
    CHECK(conformal_count_oracle(2, 2, 2) == 2);
}

TEST_CASE("oracle ceiling") {
    CHECK_THROWS_AS(conformal_count_oracle(8, 8, 32, 1000), ResourceCeilingError);
    CHECK_NOTHROW(conformal_count_oracle(3, 3, 4, 1000));
    CHECK_THROWS_AS(conformal_count_oracle(0, 3, 1), RangeError);
}

TEST_CASE("dp examples and symmetry") {
    CHECK(conformal_count_dp(4, 2, 4) == 3);
    CHECK(conformal_count_dp(2, 3, 4) == 2);
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned m = 1; m <= 7; ++m) {
            auto row = conformal_row_dp(n, m);
            REQUIRE(row.size() == n * m + 1);
            for (unsigned s = 0; s <= n * m; ++s) {
                CHECK(row[s] == conformal_count_dp(m, n, s));
                CHECK(row[s] == row[n * m - s]);
                CHECK(row[s] == oracle::conformal(n, m, s));
                CHECK(row[s] <= restricted_count(n, s));
                if (m >= s) CHECK(row[s] == restricted_count(n, s));
                if (s > 0 && 2 * s <= n * m) CHECK(row[s] >= row[s - 1]);
            }
        }
}

TEST_CASE("dp equals oracle on the small grid") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned m = 1; m <= 5; ++m)
            for (unsigned s = 0; s <= n * m; ++s)
                CHECK(conformal_count_dp(n, m, s) == conformal_count_oracle(n, m, s));
}

TEST_CASE("molien series") {
    CHECK(molien_series({1}, 5) == CoeffSeq{1, 1, 1, 1, 1, 1});
    CHECK(molien_series({1, 2}, 4) == CoeffSeq{1, 1, 2, 2, 3});
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<unsigned> d;
        for (unsigned i = 1; i <= n; ++i) d.push_back(i);
        auto ser = molien_series(d, 20);
        for (unsigned s = 0; s <= 20; ++s) CHECK(ser[s] == restricted_count(n, s));
    }
    CHECK_THROWS_AS(molien_series({0}, 3), RangeError);
}
