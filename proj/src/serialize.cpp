#include "conformal/serialize.hpp"

#include "conformal/errors.hpp"

namespace conformal {

using nlohmann::json;

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw RangeError("not a rational number: '" + text + "'");
    }
}

namespace {

json coeff_json(const Coefficient& c) {
    json j;
    j["const"] = to_string(c.constant);
    json syms = json::array();
    for (const auto& [sym, w] : c.linear) syms.push_back({{"s", sym.s}, {"l", sym.l}, {"w", to_string(w)}});
    j["symbols"] = syms;
    return j;
}

Coefficient coeff_from(const json& j) {
    Coefficient c;
    c.constant = parse_rational(j.at("const").get<std::string>());
    for (const auto& s : j.at("symbols"))
        c.linear[{s.at("s").get<unsigned>(), s.at("l").get<unsigned>()}] =
            parse_rational(s.at("w").get<std::string>());
    return c;
}

}  // namespace

json to_json(const SelfDualPoly& p) {
    json j;
    j["schema"] = kSelfDualSchema;
    j["kind"] = kind_name(p.kind);
    j["symmetrized"] = p.symmetrized;
    json fs = json::array();
    for (const auto& f : p.factors) fs.push_back({{"n", f.n}, {"m", f.m}});
    j["factors"] = fs;
    json terms = json::array();
    for (const auto& t : p.terms)
        terms.push_back({{"inv", t.mono.exps}, {"lambda", t.mono.lambda}, {"coeff", coeff_json(t.coeff)}});
    j["terms"] = terms;
    json b = json::array();
    for (const auto& [sym, v] : p.bindings) b.push_back({{"s", sym.s}, {"l", sym.l}, {"value", to_string(v)}});
    j["bindings"] = b;
    return j;
}

SelfDualPoly selfdual_from_json(const json& j) {
    try {
        if (j.at("schema").get<std::string>() != kSelfDualSchema)
            throw RangeError("unsupported schema " + j.at("schema").dump());
        SelfDualPoly p;
        p.kind = parse_kind(j.at("kind").get<std::string>());
        p.symmetrized = j.value("symmetrized", false);
        for (const auto& f : j.at("factors")) p.factors.push_back({f.at("n").get<unsigned>(), f.at("m").get<unsigned>()});
        for (const auto& t : j.at("terms")) {
            InvMonomial mono{t.at("inv").get<std::vector<unsigned>>(), t.at("lambda").get<unsigned>()};
            p.terms.push_back({mono, coeff_from(t.at("coeff"))});
        }
        for (const auto& b : j.value("bindings", json::array()))
            p.bindings[{b.at("s").get<unsigned>(), b.at("l").get<unsigned>()}] =
                parse_rational(b.at("value").get<std::string>());
        return p;
    } catch (const json::exception& e) {
        throw RangeError(std::string("malformed self-dual polynomial JSON: ") + e.what());
    }
}

}  // namespace conformal
