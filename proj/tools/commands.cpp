#include "commands.hpp"

#include "verify.hpp"

#include "conformal/closed_forms.hpp"
#include "conformal/errors.hpp"
#include "conformal/genfunc.hpp"
#include "conformal/group_gate.hpp"
#include "conformal/invariant_algebra.hpp"
#include "conformal/numeric_roots.hpp"
#include "conformal/partition.hpp"
#include "conformal/serialize.hpp"
#include "conformal/toeplitz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace conformal::cli {

namespace {

using nlohmann::json;

struct Output {
    json record;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int status = kOk;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> v;
    for (const auto& p : split(text, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw RangeError("not a number: '" + p + "'");
        }
    }
    return v;
}

std::vector<Factor> parse_pairs(const std::string& text) {
    std::vector<Factor> fs;
    auto parts = split(text, ',');
    if (parts.empty() || parts.size() % 2) throw RangeError("--pairs wants n1,m1,n2,m2,...");
    for (std::size_t i = 0; i < parts.size(); i += 2) {
        try {
            fs.push_back({static_cast<unsigned>(std::stoul(parts[i])), static_cast<unsigned>(std::stoul(parts[i + 1]))});
        } catch (const std::exception&) {
            throw RangeError("bad --pairs entry");
        }
        if (fs.back().n == 0 || fs.back().m == 0) throw RangeError("--pairs sizes must be >= 1");
    }
    return fs;
}

// "s,l=value;s,l=value"
template <class V, class Conv>
std::map<CoeffSymbol, V> parse_assignments(const std::string& text, Conv conv) {
    std::map<CoeffSymbol, V> out;
    for (const auto& item : split(text, ';')) {
        auto eq = item.find('=');
        auto idx = split(item.substr(0, eq), ',');
        if (eq == std::string::npos || idx.size() != 2) throw RangeError("bad coefficient assignment '" + item + "'");
        try {
            CoeffSymbol sym{static_cast<unsigned>(std::stoul(idx[0])), static_cast<unsigned>(std::stoul(idx[1]))};
            out[sym] = conv(item.substr(eq + 1));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw RangeError("bad coefficient assignment '" + item + "'");
        }
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RangeError("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw RangeError("'" + path + "' is not JSON: " + e.what());
    }
}

// Accepts a bare polynomial or a CLI record carrying one under "poly".
SelfDualPoly load_poly(const std::string& path) {
    auto j = read_json_file(path);
    if (j.contains("poly")) j = j["poly"];
    return selfdual_from_json(j);
}

void check_nm(unsigned n, unsigned m) {
    if (n == 0 || m == 0) throw RangeError("--n and --m must be >= 1");
}

json factors_json(const std::vector<Factor>& fs) {
    json a = json::array();
    for (const auto& f : fs) a.push_back({f.n, f.m});
    return a;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// ---- partition / gauss ----

struct PartitionArgs {
    unsigned n = 0, m = 0;
    std::optional<unsigned> s;
    std::string method = "dp";
};

Output cmd_partition(const PartitionArgs& a) {
    check_nm(a.n, a.m);
    const unsigned N = a.n * a.m;
    if (a.s && *a.s > N) throw RangeError("--s must lie in 0..n*m");
    std::vector<unsigned> svals;
    if (a.s)
        svals.push_back(*a.s);
    else
        for (unsigned s = 0; s <= N; ++s) svals.push_back(s);

    Output o;
    o.header = {"n", "m", "s", "value", "method"};
    if (a.method == "closed") o.header.push_back("regime");
    json results = json::array();
    json row = json::array();
    std::vector<BigCount> full;
    if (a.method == "dp" && !a.s) full = conformal_row_dp(a.n, a.m);
    if (a.method == "gauss") full = gaussian_poly(a.n, a.m);
    if (a.method == "toeplitz" && !a.s) full = conformal_row_toeplitz(a.n, a.m);
    for (unsigned s : svals) {
        json r{{"s", s}};
        BigCount v;
        if (!full.empty()) {
            v = full[s];
        } else if (a.method == "dp") {
            v = conformal_count_dp(a.n, a.m, s);
        } else if (a.method == "oracle") {
            v = conformal_count_oracle(a.n, a.m, s, default_oracle_ceiling());
        } else if (a.method == "toeplitz") {
            v = conformal_via_toeplitz(a.n, a.m, s);
        } else {
            auto res = eval_piecewise(a.n, a.m, s);
            v = res.value;
            r["regime"] = regime_name(res.regime);
            r["reflected"] = res.reflected;
        }
        r["value"] = v.str();
        row.push_back(v.str());
        std::vector<std::string> line{std::to_string(a.n), std::to_string(a.m), std::to_string(s), v.str(), a.method};
        if (r.contains("regime")) line.push_back(r["regime"]);
        o.rows.push_back(line);
        results.push_back(r);
    }
    o.record["params"] = {{"n", a.n}, {"m", a.m}, {"method", a.method}};
    if (a.s) o.record["params"]["s"] = *a.s;
    o.record["method"] = a.method;
    o.record["results"] = results;
    if (!a.s) o.record["row"] = row;
    return o;
}

Output cmd_gauss(unsigned n, unsigned m) {
    check_nm(n, m);
    auto g = gaussian_poly(n, m);
    Output o;
    o.header = {"s", "coefficient"};
    json coeffs = json::array();
    BigCount sum = 0;
    bool unimodal = true;
    for (std::size_t s = 0; s < g.size(); ++s) {
        coeffs.push_back(g[s].str());
        o.rows.push_back({std::to_string(s), g[s].str()});
        sum += g[s];
        if (2 * s + 1 < g.size() && g[s] > g[s + 1]) unimodal = false;
    }
    bool palindromic = std::equal(g.begin(), g.end(), g.rbegin());
    o.record["params"] = {{"n", n}, {"m", m}};
    o.record["coefficients"] = coeffs;
    o.record["sum"] = sum.str();
    o.record["palindromic"] = palindromic;
    o.record["unimodal"] = unimodal;
    if (!palindromic || !unimodal || sum != binomial(n + m, n)) o.status = kVerifyFailed;
    return o;
}

// ---- mu ----

struct MuArgs {
    unsigned n = 0, m = 0;
    std::string pairs;
    bool check = false;
    bool symmetrized = false;
};

Output cmd_mu(const MuArgs& a) {
    Output o;
    o.header = {"quantity", "value"};
    auto put = [&](const std::string& key, const std::string& v) {
        o.record["results"][key] = v;
        o.rows.push_back({key, v});
    };
    if (!a.pairs.empty()) {
        auto fs = parse_pairs(a.pairs);
        o.record["params"] = {{"pairs", factors_json(fs)}};
        auto R = mu_product_closed(fs, Kind::Reciprocal), S = mu_product_closed(fs, Kind::Skew);
        put("R", R.str());
        put("S", S.str());
        if (a.check) {
            auto r2 = BigCount(mu_product_by_count(fs, Kind::Reciprocal, false));
            auto s2 = BigCount(mu_product_by_count(fs, Kind::Skew, false));
            put("R_count", r2.str());
            put("S_count", s2.str());
            if (r2 != R || s2 != S) o.status = kVerifyFailed;
        }
        if (a.symmetrized) {
            put("R_symmetrized", std::to_string(mu_product_by_count(fs, Kind::Reciprocal, true)));
            put("S_symmetrized", std::to_string(mu_product_by_count(fs, Kind::Skew, true)));
        }
        return o;
    }
    check_nm(a.n, a.m);
    o.record["params"] = {{"n", a.n}, {"m", a.m}};
    auto R = mu_closed(a.n, a.m, Kind::Reciprocal), S = mu_closed(a.n, a.m, Kind::Skew);
    put("R", R.str());
    put("S", S.str());
    put("Q", q_closed(a.n, a.m).str());
    if (a.check) {
        auto r2 = BigCount(mu_by_count(a.n, a.m, Kind::Reciprocal));
        auto s2 = BigCount(mu_by_count(a.n, a.m, Kind::Skew));
        auto q2 = BigCount(middle_fixed_points(a.n, a.m));
        put("R_count", r2.str());
        put("S_count", s2.str());
        put("Q_count", q2.str());
        if (r2 != R || s2 != S || q2 != q_closed(a.n, a.m)) o.status = kVerifyFailed;
    }
    return o;
}

// ---- selfdual ----

struct SelfDualArgs {
    unsigned n = 0, m = 0;
    std::string pairs, kind = "skew", bind, out, in, a, b, x;
    bool symmetrized = false;
    double lambda = 1.0, tol = 1e-10;
};

Output poly_output(const SelfDualPoly& p) {
    Output o;
    o.record["poly"] = to_json(p);
    o.record["text"] = to_string(p);
    o.record["mu"] = independent_coefficients(p);
    o.header = {"lambda", "monomial", "coefficient"};
    for (const auto& t : p.terms) {
        std::string c;
        if (t.coeff.constant != 0 || t.coeff.linear.empty()) c = to_string(t.coeff.constant);
        for (const auto& [sym, w] : t.coeff.linear)
            c += (c.empty() ? "" : " + ") + to_string(w) + "*c[" + std::to_string(sym.s) + "," +
                 std::to_string(sym.l) + "]";
        o.rows.push_back({std::to_string(t.mono.lambda), to_string(t.mono, p.factors), c});
    }
    return o;
}

void maybe_write(const Output& o, const std::string& path) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw RangeError("cannot write '" + path + "'");
    f << o.record["poly"].dump(2) << "\n";
}

Output cmd_selfdual_build(const SelfDualArgs& a) {
    Kind k = parse_kind(a.kind);
    auto bindings = parse_assignments<Rational>(a.bind, parse_rational);
    SelfDualPoly p;
    if (!a.pairs.empty()) {
        p = assemble_product(parse_pairs(a.pairs), k, a.symmetrized, bindings);
    } else {
        check_nm(a.n, a.m);
        p = assemble(a.n, a.m, k, bindings);
    }
    auto st = check_structure(p);
    if (!st.ok) throw InconsistencyError("assembled polynomial fails its structure check: " + st.problems.front());
    Output o = poly_output(p);
    o.record["params"] = {{"kind", kind_name(k)}, {"factors", factors_json(p.factors)}, {"symmetrized", a.symmetrized}};
    maybe_write(o, a.out);
    return o;
}

Output cmd_selfdual_print(const SelfDualArgs& a) {
    auto p = load_poly(a.in);
    Output o = poly_output(p);
    auto st = check_structure(p);
    o.record["structure_ok"] = st.ok;
    o.record["problems"] = st.problems;
    if (!st.ok) o.status = kVerifyFailed;
    return o;
}

Output cmd_selfdual_multiply(const SelfDualArgs& a) {
    auto p = load_poly(a.a), q = load_poly(a.b);
    auto pq = multiply(p, q);
    Output o = poly_output(pq);
    o.record["params"] = {{"a", kind_name(p.kind)}, {"b", kind_name(q.kind)}};
    o.record["kind"] = kind_name(pq.kind);
    maybe_write(o, a.out);
    return o;
}

Output cmd_selfdual_dualcheck(const SelfDualArgs& a) {
    auto p = load_poly(a.in);
    auto x = parse_doubles(a.x);
    auto rep = conformal_transform_check(p, x, a.lambda, a.tol);
    Output o;
    o.record["params"] = {{"x", x}, {"lambda", a.lambda}, {"tol", a.tol}};
    o.record["results"] = {{"ok", rep.ok}, {"left", rep.left}, {"right", rep.right}, {"rel_error", rep.rel_error}};
    o.header = {"ok", "left", "right", "rel_error"};
    o.rows.push_back({rep.ok ? "true" : "false", fmt(rep.left), fmt(rep.right), fmt(rep.rel_error)});
    if (!rep.ok) o.status = kVerifyFailed;
    return o;
}

// ---- roots ----

struct RootArgs {
    unsigned n = 0, m = 1;
    std::string x, coeffs = "const:1";
    double tol = 0.0;
};

CoeffMap parse_coeffs(const std::string& spec, unsigned n, unsigned m) {
    if (spec.rfind("const:", 0) == 0) return constant_coefficients(n, m, parse_doubles(spec.substr(6)).at(0));
    if (spec.rfind("random:", 0) == 0) {
        try {
            return random_coefficients(n, m, std::stoull(spec.substr(7)));
        } catch (const std::logic_error&) {
            throw RangeError("bad seed in '" + spec + "'");
        }
    }
    auto C = parse_assignments<double>(spec, [](const std::string& t) { return parse_doubles(t).at(0); });
    C[{0, 1}] = C.count({0, 1}) ? C[{0, 1}] : 1.0;
    return C;
}

Output cmd_roots(const RootArgs& a) {
    check_nm(a.n, a.m);
    Point x{parse_doubles(a.x)};
    if (x.x.size() != a.n) throw RangeError("--x needs exactly n values");
    auto C = parse_coeffs(a.coeffs, a.n, a.m);
    auto r = positive_root(a.n, a.m, C, x, a.tol);
    auto [mh, ma] = bounds_basic(x);
    auto d = root_duality_check(a.n, a.m, C, x);
    Output o;
    o.record["params"] = {{"n", a.n}, {"m", a.m}, {"x", x.x}, {"coeffs", a.coeffs}};
    json res{{"lambda", r.lambda},
             {"residual", r.residual},
             {"iterations", r.iterations},
             {"sign_changes", r.sign_changes},
             {"bounds_basic", {mh, ma}},
             {"duality", {{"ok", d.ok}, {"root_inverse", d.root_inverse}, {"product", d.product}}}};
    o.header = {"lambda", "residual", "harmonic", "arithmetic", "enhanced_lo", "enhanced_hi", "duality_ok"};
    std::vector<std::string> row{fmt(r.lambda), fmt(r.residual), fmt(mh), fmt(ma), "", "", d.ok ? "true" : "false"};
    if (a.n == 3 || a.n == 4) {
        auto [lo, hi] = bounds_enhanced(x);
        res["bounds_enhanced"] = {lo, hi};
        row[4] = fmt(lo);
        row[5] = fmt(hi);
    }
    o.rows.push_back(row);
    o.record["results"] = res;
    if (!d.ok) o.status = kVerifyFailed;
    return o;
}

// ---- groups ----

Output cmd_groups(const std::string& name) {
    std::vector<CatalogEntry> entries;
    if (name.empty())
        entries = builtin_catalog();
    else
        entries.push_back(catalog_entry(name));
    Output o;
    o.header = {"group", "degrees", "dual_degrees", "raw_duality", "dual_duality", "two_root", "computed", "expected", "agrees"};
    json list = json::array();
    for (const auto& e : entries) {
        auto c = classify(e);
        auto degs = [](const std::vector<unsigned>& d) {
            std::string s;
            for (unsigned v : d) s += (s.empty() ? "" : " ") + std::to_string(v);
            return s;
        };
        json j{{"group", c.name},
               {"degrees", c.degrees},
               {"dual_degrees", e.dual_degrees},
               {"raw_duality", c.raw_duality},
               {"dual_duality", c.dual_duality},
               {"computed", verdict_name(c.computed)},
               {"expected", verdict_name(c.expected)},
               {"agrees", c.agrees()}};
        j["two_root"] = c.two_root ? json(*c.two_root) : json(nullptr);
        if (!c.witness.empty()) j["witness"] = c.witness;
        if (!c.note.empty()) j["note"] = c.note;
        list.push_back(j);
        o.rows.push_back({c.name, degs(c.degrees), degs(e.dual_degrees), c.raw_duality ? "yes" : "no",
                          c.dual_duality ? "yes" : "no", c.two_root ? (*c.two_root ? "yes" : "no") : "-",
                          verdict_name(c.computed), verdict_name(c.expected), c.agrees() ? "yes" : "no"});
    }
    o.record["results"] = list;
    if (!name.empty()) o.record["params"] = {{"name", name}};
    return o;
}

// ---- verify ----

Output cmd_verify(const std::string& suite, const VerifyCaps& caps) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
        suites = {suite};
    else
        throw RangeError("unknown suite '" + suite + "'");
    Output o;
    o.record["params"] = {{"suite", suite}, {"max_n", caps.max_n}, {"max_m", caps.max_m}};
    o.header = {"suite", "checks", "failures", "status", "first_failure"};
    json list = json::array();
    for (const auto& s : suites) {
        auto rep = run_suite(s, caps);
        json fails = json::array();
        for (const auto& f : rep.failures) fails.push_back({{"where", f.where}, {"detail", f.detail}});
        json j{{"suite", s}, {"checks", rep.checks}, {"pass", rep.pass()}, {"failures", fails}};
        if (!rep.table.empty()) j["table"] = rep.table;
        list.push_back(j);
        o.rows.push_back({s, std::to_string(rep.checks), std::to_string(rep.failures.size()),
                          rep.pass() ? "pass" : "fail",
                          rep.failures.empty() ? "" : rep.failures.front().where + ": " + rep.failures.front().detail});
        if (!rep.pass()) o.status = kVerifyFailed;
    }
    o.record["results"] = list;
    o.record["pass"] = o.status == kOk;
    return o;
}

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string q = "\"";
    for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void emit(const Output& o, bool csv, std::ostream& out) {
    if (!csv) {
        out << o.record.dump(2) << "\n";
        return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << "\n";
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conformal partitions and self-dual symmetric polynomials", "conformal"};
    app.require_subcommand(1);
    app.fallthrough();
    bool csv = false, no_timing = false;
    app.add_flag("--csv", csv, "CSV instead of JSON");
    app.add_flag("--no-timing", no_timing, "Leave out the timing field");

    PartitionArgs pa;
    auto* part = app.add_subcommand("partition", "Conformal partition counts P_n^m(s)");
    part->add_option("--n", pa.n, "Largest part")->required();
    part->add_option("--m", pa.m, "Number of parts at most")->required();
    part->add_option("--s", pa.s, "Single degree; whole row when absent");
    part->add_option("--method", pa.method, "Counting method")
        ->check(CLI::IsMember({"dp", "oracle", "gauss", "toeplitz", "closed"}));

    unsigned gn = 0, gm = 0;
    auto* gauss = app.add_subcommand("gauss", "Gaussian polynomial coefficients");
    gauss->add_option("--n", gn)->required();
    gauss->add_option("--m", gm)->required();

    MuArgs ma;
    auto* mu = app.add_subcommand("mu", "Unimodality indices");
    mu->add_option("--n", ma.n);
    mu->add_option("--m", ma.m);
    mu->add_option("--pairs", ma.pairs, "n1,m1,n2,m2,... for product groups");
    mu->add_flag("--check", ma.check, "Cross-check against symbolic assembly");
    mu->add_flag("--symmetrized", ma.symmetrized, "Also count the symmetrized product");

    SelfDualArgs sa;
    auto* sd = app.add_subcommand("selfdual", "Self-dual polynomials");
    sd->require_subcommand(1);
    auto* build = sd->add_subcommand("build", "Assemble a polynomial");
    build->add_option("--n", sa.n);
    build->add_option("--m", sa.m);
    build->add_option("--pairs", sa.pairs);
    build->add_option("--kind", sa.kind, "reciprocal|skew");
    build->add_flag("--symmetrized", sa.symmetrized);
    build->add_option("--bind", sa.bind, "s,l=value;... (rationals allowed)");
    build->add_option("--out", sa.out, "Also write the polynomial JSON here");
    auto* print = sd->add_subcommand("print", "Show a stored polynomial");
    print->add_option("--in", sa.in)->required();
    auto* mult = sd->add_subcommand("multiply", "Multiply two numeric polynomials");
    mult->add_option("--a", sa.a)->required();
    mult->add_option("--b", sa.b)->required();
    mult->add_option("--out", sa.out);
    auto* dual = sd->add_subcommand("dualcheck", "Check the conformal transformation law");
    dual->add_option("--in", sa.in)->required();
    dual->add_option("--x", sa.x, "Comma separated positive values")->required();
    dual->add_option("--lambda", sa.lambda);
    dual->add_option("--tol", sa.tol);

    RootArgs ra;
    auto* roots = app.add_subcommand("roots", "Positive root of the skew equation");
    roots->add_option("--n", ra.n)->required();
    roots->add_option("--m", ra.m);
    roots->add_option("--x", ra.x)->required();
    roots->add_option("--coeffs", ra.coeffs, "const:V | random:SEED | s,l=v;...");
    roots->add_option("--tol", ra.tol);

    std::string group_name;
    auto* groups = app.add_subcommand("groups", "Group catalog classification");
    groups->add_option("--name", group_name);

    std::string suite = "all";
    VerifyCaps caps;
    auto* verify = app.add_subcommand("verify", "Cross-method validation suites");
    verify->add_option("--suite", suite)->check(
        CLI::IsMember({"all", "partitions", "closedforms", "algebra", "roots", "groups"}));
    verify->add_option("--max-n", caps.max_n);
    verify->add_option("--max-m", caps.max_m);
    verify->add_option("--threads", caps.threads)->check(CLI::Range(1u, 256u));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    std::string command;
    try {
        Output o;
        if (*part) {
            command = "partition";
            o = cmd_partition(pa);
        } else if (*gauss) {
            command = "gauss";
            o = cmd_gauss(gn, gm);
        } else if (*mu) {
            command = "mu";
            o = cmd_mu(ma);
        } else if (*sd) {
            if (*build) {
                command = "selfdual build";
                o = cmd_selfdual_build(sa);
            } else if (*print) {
                command = "selfdual print";
                o = cmd_selfdual_print(sa);
            } else if (*mult) {
                command = "selfdual multiply";
                o = cmd_selfdual_multiply(sa);
            } else {
                command = "selfdual dualcheck";
                o = cmd_selfdual_dualcheck(sa);
            }
        } else if (*roots) {
            command = "roots";
            o = cmd_roots(ra);
        } else if (*groups) {
            command = "groups";
            o = cmd_groups(group_name);
        } else {
            command = "verify";
            o = cmd_verify(suite, caps);
        }
        json rec{{"schema", kRecordSchema}, {"command", command}};
        rec.update(o.record);
        if (!no_timing)
            rec["timing_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        o.record = std::move(rec);
        emit(o, csv, out);
        return o.status;
    } catch (const ResourceCeilingError& e) {
        err << "error: " << e.what() << "\n";
        return kCeiling;
    } catch (const InconsistencyError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const BracketError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const ToleranceError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace conformal::cli
