#include "conformal/errors.hpp"
#include "conformal/invariant_algebra.hpp"
#include "conformal/numeric_roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace conformal {

namespace {

using TermMap = std::map<InvMonomial, Coefficient, CanonicalLess>;

std::vector<Term> flatten(const TermMap& acc) {
    std::vector<Term> out;
    for (const auto& [mono, c] : acc)
        if (!c.is_zero()) out.push_back({mono, c});
    return out;
}

unsigned total_order(const std::vector<Factor>& fs) {
    unsigned N = 0;
    for (const auto& f : fs) N += f.n * f.m;
    return N;
}

void need_factors(const std::vector<Factor>& fs) {
    if (fs.empty()) throw RangeError("need at least one (n, m) factor");
    for (const auto& f : fs)
        if (f.n == 0 || f.m == 0) throw RangeError("factor sizes must be >= 1");
}

// Block j of a concatenated tuple.
AlphaTuple block_of(const AlphaTuple& t, const std::vector<Factor>& fs, std::size_t j) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < j; ++i) off += fs[i].n;
    return AlphaTuple(t.begin() + off, t.begin() + off + fs[j].n);
}

InvMonomial product_plus(const AlphaTuple& t, const std::vector<Factor>& fs) {
    InvMonomial mono;
    unsigned s = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        AlphaTuple b = block_of(t, fs, j);
        s += alpha_degree(b);
        mono.exps.insert(mono.exps.end(), b.begin(), b.end());
    }
    mono.lambda = total_order(fs) - s;
    return mono;
}

InvMonomial product_minus(const AlphaTuple& t, const std::vector<Factor>& fs) {
    InvMonomial mono;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        InvMonomial b = term_minus(block_of(t, fs, j), fs[j].n, fs[j].m);
        mono.exps.insert(mono.exps.end(), b.exps.begin(), b.exps.end());
        mono.lambda += b.lambda;
    }
    return mono;
}

// Lexicographically smallest image of t under block permutations that
// keep it a valid tuple. Blocks are compared zero-padded.
AlphaTuple orbit_representative(const AlphaTuple& t, const std::vector<Factor>& fs) {
    const std::size_t k = fs.size();
    unsigned width = 0;
    for (const auto& f : fs) width = std::max(width, f.n);
    std::vector<AlphaTuple> padded;
    for (std::size_t j = 0; j < k; ++j) {
        AlphaTuple b = block_of(t, fs, j);
        b.resize(width, 0);
        padded.push_back(b);
    }
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    AlphaTuple best = t;
    do {
        AlphaTuple cand;
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) {
            const AlphaTuple& src = padded[perm[j]];
            for (unsigned r = fs[j].n; r < width; ++r)
                if (src[r] != 0) ok = false;
            if (!ok) break;
            AlphaTuple b(src.begin(), src.begin() + fs[j].n);
            if (alpha_weight(b) > fs[j].m) ok = false;
            cand.insert(cand.end(), b.begin(), b.end());
        }
        if (ok && cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Rational coefficient_value(const Coefficient& c, const Bindings& b) {
    Rational v = c.constant;
    for (const auto& [sym, w] : c.linear) {
        auto it = b.find(sym);
        if (it == b.end())
            throw RangeError("coefficient symbol (" + std::to_string(sym.s) + "," +
                             std::to_string(sym.l) + ") is unbound");
        v += w * it->second;
    }
    return v;
}

}  // namespace

std::vector<unsigned> SelfDualPoly::block_sizes() const {
    std::vector<unsigned> out;
    for (const auto& f : factors) out.push_back(f.n);
    return out;
}

unsigned SelfDualPoly::order() const { return total_order(factors); }

std::vector<CoeffSymbol> SelfDualPoly::symbols() const {
    std::set<CoeffSymbol> syms;
    for (const auto& t : terms)
        for (const auto& kv : t.coeff.linear) syms.insert(kv.first);
    return {syms.begin(), syms.end()};
}

bool SelfDualPoly::is_numeric() const {
    for (const auto& sym : symbols())
        if (!bindings.count(sym)) return false;
    return true;
}

std::vector<AlphaTuple> enumerate_product_alpha(const std::vector<Factor>& factors, unsigned s) {
    need_factors(factors);
    std::vector<AlphaTuple> out;
    AlphaTuple cur;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t j, unsigned rem) {
        if (j == factors.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        const auto& f = factors[j];
        for (unsigned sj = 0; sj <= std::min(rem, f.n * f.m); ++sj) {
            for (const auto& a : enumerate_alpha(f.n, f.m, sj)) {
                cur.insert(cur.end(), a.begin(), a.end());
                rec(j + 1, rem - sj);
                cur.resize(cur.size() - a.size());
            }
        }
    };
    rec(0, s);
    std::sort(out.begin(), out.end());
    return out;
}

SelfDualPoly assemble_product(const std::vector<Factor>& factors, Kind kind, bool symmetrized,
                              const Bindings& bindings) {
    need_factors(factors);
    const unsigned N = total_order(factors);
    const Rational sign = kind == Kind::Reciprocal ? 1 : -1;
    TermMap acc;
    for (unsigned s = 0; 2 * s <= N; ++s) {
        auto tuples = enumerate_product_alpha(factors, s);
        std::map<AlphaTuple, unsigned> rep_index;
        if (symmetrized) {
            std::set<AlphaTuple> reps;
            for (const auto& t : tuples) reps.insert(orbit_representative(t, factors));
            unsigned l = 0;
            for (const auto& r : reps) rep_index[r] = ++l;
        }
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            const auto& t = tuples[i];
            unsigned l = symmetrized ? rep_index.at(orbit_representative(t, factors))
                                     : static_cast<unsigned>(i + 1);
            Coefficient c = Coefficient::symbol({s, l});
            acc[product_plus(t, factors)] += c;
            acc[product_minus(t, factors)] += c.scaled(sign);
        }
    }
    SelfDualPoly p;
    p.factors = factors;
    p.kind = kind;
    p.symmetrized = symmetrized;
    p.terms = flatten(acc);
    if (!bindings.empty()) p = bind_symbols(p, bindings);
    return p;
}

SelfDualPoly assemble(unsigned n, unsigned m, Kind kind, const Bindings& bindings) {
    return assemble_product({{n, m}}, kind, false, bindings);
}

SelfDualPoly bind_symbols(const SelfDualPoly& p, const Bindings& bindings) {
    SelfDualPoly out = p;
    for (const auto& kv : bindings) out.bindings[kv.first] = kv.second;
    TermMap acc;
    for (const auto& t : p.terms) {
        Coefficient c;
        c.constant = t.coeff.constant;
        for (const auto& [sym, w] : t.coeff.linear) {
            auto it = out.bindings.find(sym);
            if (it != out.bindings.end())
                c.constant += w * it->second;
            else
                c.linear[sym] = w;
        }
        acc[t.mono] += c;
    }
    out.terms = flatten(acc);
    return out;
}

InvMonomial dual_monomial(const InvMonomial& mono, const std::vector<Factor>& factors) {
    const unsigned N = total_order(factors);
    if (mono.lambda > N) throw RangeError("dual_monomial: lambda power exceeds the order");
    InvMonomial d;
    d.lambda = N - mono.lambda;
    std::size_t off = 0;
    for (const auto& f : factors) {
        std::vector<unsigned> e(mono.exps.begin() + off, mono.exps.begin() + off + f.n);
        unsigned w = std::accumulate(e.begin(), e.end(), 0u);
        if (w > f.m) throw RangeError("dual_monomial: block weight exceeds m");
        std::vector<unsigned> out(f.n, 0);
        for (unsigned r = 1; r < f.n; ++r) out[f.n - r - 1] = e[r - 1];
        out[f.n - 1] = f.m - w;
        d.exps.insert(d.exps.end(), out.begin(), out.end());
        off += f.n;
    }
    return d;
}

StructureReport check_structure(const SelfDualPoly& p) {
    StructureReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };
    const unsigned N = p.order();
    const auto sizes = p.block_sizes();
    const unsigned width = std::accumulate(sizes.begin(), sizes.end(), 0u);
    TermMap by_mono;
    for (const auto& t : p.terms) {
        if (t.mono.exps.size() != width) {
            fail("term has wrong exponent length: " + to_string(t.mono, p.factors));
            continue;
        }
        if (t.coeff.is_zero()) fail("zero coefficient kept: " + to_string(t.mono, p.factors));
        if (monomial_degree(t.mono, sizes) != N)
            fail("inhomogeneous term " + to_string(t.mono, p.factors));
        std::size_t off = 0;
        for (const auto& f : p.factors) {
            unsigned w = 0;
            for (unsigned r = 0; r < f.n; ++r) w += t.mono.exps[off + r];
            if (w > f.m) fail("block weight above m in " + to_string(t.mono, p.factors));
            off += f.n;
        }
        by_mono[t.mono] += t.coeff;
    }
    if (!rep.ok) return rep;
    const Rational sign = p.kind == Kind::Reciprocal ? 1 : -1;
    for (const auto& [mono, c] : by_mono) {
        InvMonomial d = dual_monomial(mono, p.factors);
        auto it = by_mono.find(d);
        Coefficient partner = it == by_mono.end() ? Coefficient{} : it->second;
        if (!(partner == c.scaled(sign)))
            fail("counter-partner mismatch for " + to_string(mono, p.factors));
    }
    return rep;
}

SelfDualPoly multiply(const SelfDualPoly& p, const SelfDualPoly& q) {
    if (p.block_sizes() != q.block_sizes()) throw MismatchError("multiply: block sizes differ");
    if (!p.is_numeric() || !q.is_numeric())
        throw RangeError("multiply: both operands need numeric coefficient bindings");
    SelfDualPoly a = bind_symbols(p, p.bindings), b = bind_symbols(q, q.bindings);
    TermMap acc;
    for (const auto& s : a.terms) {
        for (const auto& t : b.terms) {
            InvMonomial mono{s.mono.exps, s.mono.lambda + t.mono.lambda};
            for (std::size_t i = 0; i < mono.exps.size(); ++i) mono.exps[i] += t.mono.exps[i];
            acc[mono] += Coefficient::value(s.coeff.constant * t.coeff.constant);
        }
    }
    SelfDualPoly out;
    out.kind = kind_product(p.kind, q.kind);
    for (std::size_t j = 0; j < p.factors.size(); ++j)
        out.factors.push_back({p.factors[j].n, p.factors[j].m + q.factors[j].m});
    out.terms = flatten(acc);
    auto rep = check_structure(out);
    if (!rep.ok) throw InconsistencyError("multiply: product broke structure: " + rep.problems.front());
    return out;
}

namespace {

// Per block I_{n,0..n} concatenated with block offsets.
std::vector<std::vector<double>> block_invariants(const std::vector<Factor>& fs,
                                                  const std::vector<double>& x) {
    std::size_t need = 0;
    for (const auto& f : fs) need += f.n;
    if (x.size() != need) throw RangeError("evaluate: expected " + std::to_string(need) + " variables");
    std::vector<std::vector<double>> out;
    std::size_t off = 0;
    for (const auto& f : fs) {
        Point pt{std::vector<double>(x.begin() + off, x.begin() + off + f.n)};
        out.push_back(elementary_symmetric(pt));
        off += f.n;
    }
    return out;
}

double term_value(const Term& t, const std::vector<Factor>& fs,
                  const std::vector<std::vector<double>>& inv, double lambda, const Bindings& b) {
    double v = coefficient_value(t.coeff, b).convert_to<double>();
    std::size_t off = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        for (unsigned r = 1; r <= fs[j].n; ++r) {
            unsigned e = t.mono.exps[off + r - 1];
            if (e) v *= std::pow(inv[j][r], static_cast<double>(e));
        }
        off += fs[j].n;
    }
    return v * std::pow(lambda, static_cast<double>(t.mono.lambda));
}

}  // namespace

double evaluate(const SelfDualPoly& p, double lambda, const std::vector<double>& x) {
    auto inv = block_invariants(p.factors, x);
    double sum = 0;
    for (const auto& t : p.terms) sum += term_value(t, p.factors, inv, lambda, p.bindings);
    return sum;
}

TransformReport conformal_transform_check(const SelfDualPoly& p, const std::vector<double>& x,
                                          double lambda, double tol) {
    if (!(lambda > 0)) throw RangeError("conformal_transform_check: lambda must be positive");
    for (double v : x)
        if (!(v > 0)) throw RangeError("conformal_transform_check: x must be positive");
    std::vector<double> xinv;
    for (double v : x) xinv.push_back(1.0 / v);
    auto inv = block_invariants(p.factors, x);
    auto inv_dual = block_invariants(p.factors, xinv);

    TransformReport rep;
    double scale = 0;
    for (const auto& t : p.terms) {
        double v = term_value(t, p.factors, inv_dual, 1.0 / lambda, p.bindings);
        rep.left += v;
        scale += std::abs(v);
    }
    double pref = std::pow(lambda, -static_cast<double>(p.order()));
    for (std::size_t j = 0; j < p.factors.size(); ++j)
        pref *= std::pow(inv[j][p.factors[j].n], -static_cast<double>(p.factors[j].m));
    if (p.kind == Kind::Skew) pref = -pref;
    rep.right = pref * evaluate(p, lambda, x);
    double diff = std::abs(rep.left - rep.right);
    rep.rel_error = scale > 0 ? diff / scale : diff;
    rep.ok = rep.rel_error <= tol;
    return rep;
}

std::size_t independent_coefficients(const SelfDualPoly& p) {
    // symbols sharing a monomial end up in one component
    std::vector<CoeffSymbol> syms;
    for (const auto& s : p.symbols())
        if (!p.bindings.count(s)) syms.push_back(s);
    std::map<CoeffSymbol, std::size_t> idx;
    for (std::size_t i = 0; i < syms.size(); ++i) idx[syms[i]] = i;
    std::vector<std::size_t> parent(syms.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& t : p.terms) {
        std::size_t first = SIZE_MAX;
        for (const auto& kv : t.coeff.linear) {
            std::size_t i = idx.at(kv.first);
            if (first == SIZE_MAX)
                first = i;
            else
                parent[find(i)] = find(first);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> comp_terms;
    for (std::size_t ti = 0; ti < p.terms.size(); ++ti)
        if (!p.terms[ti].coeff.linear.empty())
            comp_terms[find(idx.at(p.terms[ti].coeff.linear.begin()->first))].push_back(ti);
    std::map<std::size_t, std::vector<std::size_t>> comp_syms;
    for (std::size_t i = 0; i < syms.size(); ++i) comp_syms[find(i)].push_back(i);

    std::size_t rank = 0;
    for (const auto& [root, members] : comp_syms) {
        auto it = comp_terms.find(root);
        if (it == comp_terms.end()) continue;  // symbol cancelled everywhere
        std::map<std::size_t, std::size_t> col;
        for (std::size_t c = 0; c < members.size(); ++c) col[members[c]] = c;
        // rows = monomials, columns = symbols; rank is the same either way
        std::vector<std::vector<Rational>> M;
        for (std::size_t ti : it->second) {
            std::vector<Rational> row(members.size(), 0);
            for (const auto& [sym, w] : p.terms[ti].coeff.linear) row[col.at(idx.at(sym))] = w;
            M.push_back(std::move(row));
        }
        std::size_t r = 0;
        for (std::size_t c = 0; c < members.size() && r < M.size(); ++c) {
            std::size_t piv = r;
            while (piv < M.size() && M[piv][c] == 0) ++piv;
            if (piv == M.size()) continue;
            std::swap(M[piv], M[r]);
            for (std::size_t i = r + 1; i < M.size(); ++i) {
                if (M[i][c] == 0) continue;
                Rational f = M[i][c] / M[r][c];
                for (std::size_t cc = c; cc < members.size(); ++cc) M[i][cc] -= f * M[r][cc];
            }
            ++r;
        }
        rank += r;
    }
    return rank;
}

std::size_t mu_by_count(unsigned n, unsigned m, Kind kind) {
    return independent_coefficients(assemble(n, m, kind));
}

std::size_t mu_product_by_count(const std::vector<Factor>& factors, Kind kind, bool symmetrized) {
    return independent_coefficients(assemble_product(factors, kind, symmetrized));
}

namespace {

std::string block_letter(std::size_t j, std::size_t k) {
    if (k == 1) return "I";
    static const char* letters = "XYZUVW";
    return j < 6 ? std::string(1, letters[j]) : "B" + std::to_string(j);
}

std::string coeff_string(const Coefficient& c) {
    std::vector<std::string> parts;
    for (const auto& [sym, w] : c.linear) {
        std::string name = "c[" + std::to_string(sym.s) + "," + std::to_string(sym.l) + "]";
        if (w == 1)
            parts.push_back(name);
        else if (w == -1)
            parts.push_back("-" + name);
        else
            parts.push_back(to_string(w) + "*" + name);
    }
    if (c.constant != 0 || parts.empty()) parts.push_back(to_string(c.constant));
    if (parts.size() == 1) return parts[0];
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
    return s + ")";
}

}  // namespace

std::string to_string(const InvMonomial& mono, const std::vector<Factor>& factors) {
    std::vector<std::string> parts;
    std::size_t off = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        for (unsigned r = 1; r <= factors[j].n; ++r) {
            unsigned e = mono.exps.at(off + r - 1);
            if (!e) continue;
            std::string s = block_letter(j, factors.size()) + "_{" + std::to_string(factors[j].n) +
                            "," + std::to_string(r) + "}";
            if (e > 1) s += "^" + std::to_string(e);
            parts.push_back(s);
        }
        off += factors[j].n;
    }
    if (mono.lambda) parts.push_back(mono.lambda > 1 ? "lambda^" + std::to_string(mono.lambda) : "lambda");
    if (parts.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    return out;
}

std::string to_string(const SelfDualPoly& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i) os << " + ";
        os << coeff_string(p.terms[i].coeff) << "*" << to_string(p.terms[i].mono, p.factors);
    }
    return os.str();
}

}  // namespace conformal
