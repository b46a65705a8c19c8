#include "conformal/group_gate.hpp"

#include "conformal/errors.hpp"

#include <algorithm>
#include <regex>

namespace conformal {

bool degree_duality_check(const GroupDegrees& g) {
    if (g.degrees.empty()) throw RangeError("degree list is empty");
    auto d = g.degrees;
    std::sort(d.begin(), d.end());
    const std::size_t n = d.size();
    for (std::size_t k = 1; k < n; ++k)
        if (d[k - 1] + d[n - k - 1] != d[n - 1]) return false;
    return true;
}

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly poly_rem(RPoly a, const RPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

RPoly poly_gcd(RPoly a, RPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

std::size_t distinct_root_count(const std::vector<Rational>& form) {
    RPoly f = form;
    trim(f);
    if (f.empty()) throw RangeError("distinct_root_count: zero form");
    const std::size_t d = form.size() - 1;
    std::size_t count = 0;
    if (form[d] == 0) ++count;  // x2 divides the form
    if (f.size() >= 2) {
        RPoly df;
        for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<int>(i));
        RPoly g = poly_gcd(f, df);
        count += (f.size() - 1) - (g.size() - 1);
    }
    return count;
}

std::size_t descartes_sign_changes(const std::vector<double>& coeffs) {
    std::size_t changes = 0;
    int last = 0;
    for (double c : coeffs) {
        int sg = c > 0 ? 1 : (c < 0 ? -1 : 0);
        if (!sg) continue;
        if (last && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

std::string verdict_name(Verdict v) { return v == Verdict::Admits ? "admits" : "does_not"; }

std::vector<Rational> real_power_form(unsigned m) {
    std::vector<Rational> f(m + 1, 0);
    for (unsigned j = 0; 2 * j <= m; ++j)
        f[m - 2 * j] = Rational(binomial(m, 2 * j)) * (j % 2 ? -1 : 1);
    return f;
}

std::vector<Rational> imag_power_form(unsigned m) {
    std::vector<Rational> f(m + 1, 0);
    for (unsigned j = 0; 2 * j + 1 <= m; ++j)
        f[m - 2 * j - 1] = Rational(binomial(m, 2 * j + 1)) * (j % 2 ? -1 : 1);
    return f;
}

std::vector<Rational> radial_power_form(unsigned k) {
    std::vector<Rational> f(2 * k + 1, 0);
    for (unsigned i = 0; i <= k; ++i) f[2 * i] = Rational(binomial(k, i));
    return f;
}

namespace {

std::vector<unsigned> range_degrees(unsigned n, unsigned step) {
    std::vector<unsigned> d;
    for (unsigned r = 1; r <= n; ++r) d.push_back(step * r);
    return d;
}

CatalogEntry make(std::string name, std::vector<unsigned> deg, Verdict expected) {
    std::sort(deg.begin(), deg.end());
    CatalogEntry e{{std::move(name), deg}, deg, {}, 1, false, "", expected};
    return e;
}

unsigned parse_param(const std::string& text) {
    try {
        return static_cast<unsigned>(std::stoul(text));
    } catch (const std::exception&) {
        throw UnknownGroupError("bad group parameter '" + text + "'");
    }
}

}  // namespace

CatalogEntry catalog_entry(const std::string& name) {
    static const std::regex family(R"(^([SZABDC])_?\{?(\d+)\}?$)");
    static const std::regex dihedral(R"(^I_?\{?2,(\d+)\}?$|^I2_(\d+)$)");
    std::smatch mt;
    if (name == "O_h" || name == "Oh") {
        auto e = make("O_h", {2, 4, 6}, Verdict::Admits);
        e.note = "cubic group";
        return e;
    }
    if (name == "H_3" || name == "H3") {
        auto e = make("H_3", {2, 6, 10}, Verdict::DoesNot);
        e.note = "icosahedral group";
        return e;
    }
    if (name == "G_2" || name == "G2") {
        auto e = catalog_entry("I_{2,6}");
        e.group.name = "G_2";
        return e;
    }
    if (std::regex_match(name, mt, dihedral)) {
        unsigned m = parse_param(mt[1].matched ? mt[1].str() : mt[2].str());
        if (m < 2) throw UnknownGroupError("I_{2,m} needs m >= 2");
        auto e = make("I_{2," + std::to_string(m) + "}", {2, m},
                      (m == 2 || m == 4) ? Verdict::Admits : Verdict::DoesNot);
        e.top_forms.push_back(real_power_form(m));
        if (m % 2 == 0) e.top_forms.push_back(radial_power_form(m / 2));
        if (m == 2) {
            e.dual_degrees = {2, 4};
            e.note = "I_{2,2} = D_2, built on x_i^2";
        }
        return e;
    }
    if (std::regex_match(name, mt, family)) {
        const char f = mt[1].str()[0];
        const unsigned n = parse_param(mt[2].str());
        if (n == 0) throw UnknownGroupError("rank must be >= 1");
        const std::string nm = std::string(1, f) + "_" + std::to_string(n);
        switch (f) {
            case 'S': return make(nm, range_degrees(n, 1), Verdict::Admits);
            case 'Z':
            case 'A': {
                auto e = make(nm, range_degrees(n, 1), Verdict::Admits);
                e.dependent_extra = true;
                e.note = "extra invariant of degree " + std::to_string(f == 'A' ? n * (n - 1) / 2 : n) +
                         " has its square in the S_n ring; left out";
                return e;
            }
            case 'B': return make(nm, range_degrees(n, 2), Verdict::Admits);
            case 'D': {
                if (n < 2) throw UnknownGroupError("D_n needs n >= 2");
                auto deg = range_degrees(n - 1, 2);
                deg.push_back(n);
                auto e = make(nm, deg, Verdict::Admits);
                e.dual_degrees = range_degrees(n, 2);
                e.note = "equation built on x_i^2 as for B_n";
                return e;
            }
            case 'C': {
                if (n < 2) throw UnknownGroupError("C_n needs n >= 2");
                auto e = make(nm, {2, n}, (n == 2 || n == 4) ? Verdict::Admits : Verdict::DoesNot);
                e.top_forms.push_back(real_power_form(n));
                e.top_forms.push_back(imag_power_form(n));
                e.primary_forms = 2;
                if (n % 2 == 0) e.top_forms.push_back(radial_power_form(n / 2));
                if (n == 2 || n == 4) {
                    e.dual_degrees = {2, 4};
                    e.note = n == 2 ? "C_2 sits inside D_2" : "C_4 sits inside B_2";
                }
                return e;
            }
        }
    }
    throw UnknownGroupError("unknown group '" + name + "'");
}

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<std::string> names;
    for (unsigned n = 1; n <= 6; ++n) names.push_back("S_" + std::to_string(n));
    for (unsigned n = 3; n <= 6; ++n) names.push_back("Z_" + std::to_string(n));
    for (unsigned n = 3; n <= 6; ++n) names.push_back("A_" + std::to_string(n));
    for (unsigned n = 2; n <= 5; ++n) names.push_back("B_" + std::to_string(n));
    for (unsigned n = 4; n <= 6; ++n) names.push_back("D_" + std::to_string(n));
    names.push_back("O_h");
    names.push_back("H_3");
    for (unsigned m = 2; m <= 8; ++m) names.push_back("I_{2," + std::to_string(m) + "}");
    names.push_back("G_2");
    for (unsigned n = 2; n <= 6; ++n) names.push_back("C_" + std::to_string(n));
    std::vector<CatalogEntry> out;
    for (const auto& nm : names) out.push_back(catalog_entry(nm));
    return out;
}

std::optional<std::vector<int>> two_root_search(const std::vector<std::vector<Rational>>& forms,
                                              std::size_t primary, int bound) {
    if (forms.empty()) return std::nullopt;
    const std::size_t k = forms.size();
    const std::size_t len = forms[0].size();
    std::optional<std::vector<int>> best;
    int best_norm = 0;
    std::vector<int> c(k, -bound);
    while (true) {
        int norm = 0;
        for (int v : c) norm += std::abs(v);
        bool uses_primary = std::any_of(c.begin(), c.begin() + std::min(primary, k), [](int v) { return v != 0; });
        if (uses_primary && (!best || norm < best_norm)) {
            std::vector<Rational> f(len, 0);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < len; ++i) f[i] += forms[j][i] * c[j];
            bool zero = std::all_of(f.begin(), f.end(), [](const Rational& v) { return v == 0; });
            if (!zero && distinct_root_count(f) <= 2) {
                best = c;
                best_norm = norm;
            }
        }
        std::size_t j = 0;
        while (j < k && c[j] == bound) c[j++] = -bound;
        if (j == k) break;
        ++c[j];
    }
    return best;
}

Classification classify(const CatalogEntry& e) {
    Classification c;
    c.name = e.group.name;
    c.degrees = e.group.degrees;
    c.raw_duality = degree_duality_check(e.group);
    c.dual_duality = degree_duality_check({e.group.name, e.dual_degrees});
    bool ok = c.dual_duality;
    if (!e.top_forms.empty()) {
        auto w = two_root_search(e.top_forms, e.primary_forms);
        c.two_root = w.has_value();
        if (w) c.witness = *w;
        ok = ok && *c.two_root;
    }
    c.computed = ok ? Verdict::Admits : Verdict::DoesNot;
    c.expected = e.expected;
    c.note = e.note;
    return c;
}

}  // namespace conformal
