#include "conformal/partition.hpp"

#include "conformal/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace conformal {

namespace {

// rows_[r][s] = W_r(s) for r <= rmax_, s <= smax_. Only ever extended.
class RestrictedTable {
public:
    BigCount get(unsigned n, unsigned s) {
        n = std::min(n, s);  // W_n(s) = W_s(s) once n >= s
        {
            std::shared_lock lock(mu_);
            if (covers(n, s)) return rows_[n][s];
        }
        std::unique_lock lock(mu_);
        grow(n, s);
        return rows_[n][s];
    }

private:
    bool covers(unsigned n, unsigned s) const {
        return !rows_.empty() && n < rows_.size() && s < rows_[0].size();
    }

    void grow(unsigned n, unsigned s) {
        if (covers(n, s)) return;
        std::size_t new_r = std::max<std::size_t>(rows_.size(), n + 1);
        std::size_t new_s = std::max<std::size_t>(rows_.empty() ? 0 : rows_[0].size(), s + 1);
        // Geometric growth keeps repeated small extensions cheap.
        if (!rows_.empty() && new_s > rows_[0].size())
            new_s = std::max(new_s, rows_[0].size() * 2);
        std::size_t old_r = rows_.size();
        std::size_t old_s = old_r ? rows_[0].size() : 0;
        rows_.resize(new_r);
        for (std::size_t r = 0; r < new_r; ++r) {
            auto& row = rows_[r];
            std::size_t from = r < old_r ? old_s : 0;
            row.resize(new_s);
            for (std::size_t j = from; j < new_s; ++j) {
                if (r == 0) {
                    row[j] = j == 0 ? 1 : 0;
                } else {
                    row[j] = rows_[r - 1][j];
                    if (j >= r) row[j] += row[j - r];
                }
            }
        }
    }

    std::shared_mutex mu_;
    std::vector<std::vector<BigCount>> rows_;
};

RestrictedTable& table() {
    static RestrictedTable t;
    return t;
}

}  // namespace

BigCount restricted_count(unsigned n, unsigned s) { return table().get(n, s); }

BigCount unrestricted_count(unsigned s) { return table().get(s, s); }

std::vector<BigCount> restricted_row(unsigned n, unsigned smax) {
    std::vector<BigCount> out;
    out.reserve(smax + 1);
    for (unsigned s = 0; s <= smax; ++s) out.push_back(restricted_count(n, s));
    return out;
}

std::uint64_t default_oracle_ceiling() {
    if (const char* env = std::getenv("CONFORMAL_ORACLE_CEILING")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            // fall through to the default on garbage
        }
    }
    return 100'000'000ULL;
}

namespace {

struct OracleWalk {
    unsigned n;
    std::uint64_t ceiling;
    std::uint64_t visited = 0;
    std::uint64_t count = 0;

    // Choose x_r for r = part..1; rem is what is left of s, slots of m.
    void walk(unsigned part, unsigned rem, unsigned slots) {
        if (++visited > ceiling)
            throw ResourceCeilingError("oracle enumeration exceeded ceiling of " +
                                       std::to_string(ceiling) + " tuples");
        if (part == 0) {
            if (rem == 0) ++count;
            return;
        }
        unsigned top = std::min(rem / part, slots);
        for (unsigned x = 0; x <= top; ++x) walk(part - 1, rem - x * part, slots - x);
    }
};

}  // namespace

BigCount conformal_count_oracle(unsigned n, unsigned m, unsigned s, std::uint64_t ceiling) {
    if (n == 0 || m == 0) throw RangeError("conformal_count_oracle needs n, m >= 1");
    OracleWalk w{n, ceiling};
    w.walk(n, s, m);
    return BigCount(w.count);
}

std::vector<BigCount> conformal_row_dp(unsigned n, unsigned m) {
    if (n == 0 || m == 0) throw RangeError("conformal_row_dp needs n, m >= 1");
    const unsigned top = n * m;
    // dp[c][s]: partitions of s into exactly c parts, all <= current cap.
    std::vector<std::vector<BigCount>> dp(m + 1, std::vector<BigCount>(top + 1, 0));
    dp[0][0] = 1;
    for (unsigned cap = 1; cap <= n; ++cap)
        for (unsigned c = 1; c <= m; ++c)
            for (unsigned s = cap; s <= top; ++s) dp[c][s] += dp[c - 1][s - cap];
    std::vector<BigCount> row(top + 1, 0);
    for (unsigned c = 0; c <= m; ++c)
        for (unsigned s = 0; s <= top; ++s) row[s] += dp[c][s];
    return row;
}

BigCount conformal_count_dp(unsigned n, unsigned m, unsigned s) {
    if (n == 0 || m == 0) throw RangeError("conformal_count_dp needs n, m >= 1");
    if (s > n * m) return 0;
    return conformal_row_dp(n, m)[s];
}

CoeffSeq molien_series(const std::vector<unsigned>& degrees, unsigned N) {
    CoeffSeq out(N + 1, 0);
    out[0] = 1;
    for (unsigned d : degrees) {
        if (d == 0) throw RangeError("molien_series degrees must be >= 1");
        // multiply by 1/(1 - t^d) in place
        for (unsigned s = d; s <= N; ++s) out[s] += out[s - d];
    }
    return out;
}

}  // namespace conformal
