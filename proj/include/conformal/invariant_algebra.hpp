#pragma once

#include "conformal/big.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace conformal {

enum class Kind { Reciprocal, Skew };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);
// R*R = S*S = R, R*S = S
Kind kind_product(Kind a, Kind b);

// alpha_1..alpha_n
using AlphaTuple = std::vector<unsigned>;

unsigned alpha_degree(const AlphaTuple& a);  // sum r*alpha_r
unsigned alpha_weight(const AlphaTuple& a);  // sum alpha_r

// Solutions of sum r*alpha_r = s, sum alpha_r <= m, ascending lexicographic.
std::vector<AlphaTuple> enumerate_alpha(unsigned n, unsigned m, unsigned s);

// Monomial in the invariants and lambda. For product groups the exponent
// vector is the concatenation of per-block vectors; entry r-1 of a block
// of size n is the power of I_{n,r}.
struct InvMonomial {
    std::vector<unsigned> exps;
    unsigned lambda = 0;

    auto operator<=>(const InvMonomial&) const = default;
};

// Canonical order: lambda power descending, then exponents lexicographic.
struct CanonicalLess {
    bool operator()(const InvMonomial& a, const InvMonomial& b) const {
        if (a.lambda != b.lambda) return a.lambda > b.lambda;
        return a.exps < b.exps;
    }
};

// Sum of r*e_r per block plus lambda.
unsigned monomial_degree(const InvMonomial& mono, const std::vector<unsigned>& block_sizes);

InvMonomial term_plus(const AlphaTuple& alpha, unsigned n, unsigned m);
InvMonomial term_minus(const AlphaTuple& alpha, unsigned n, unsigned m);

// T+ * T- == I_n^{m - |alpha|} prod (I_r I_{n-r})^{alpha_r} lambda^{mn}
bool constitutive_check(const AlphaTuple& alpha, unsigned n, unsigned m);

// c_{s,l} (or C_{s,l}); l is 1-based.
struct CoeffSymbol {
    unsigned s = 0;
    unsigned l = 0;

    auto operator<=>(const CoeffSymbol&) const = default;
};

// constant + sum w_i * symbol_i
struct Coefficient {
    Rational constant = 0;
    std::map<CoeffSymbol, Rational> linear;

    bool is_zero() const;
    bool is_constant() const { return linear.empty(); }
    Coefficient& operator+=(const Coefficient& o);
    Coefficient operator-() const;
    Coefficient scaled(const Rational& k) const;
    bool operator==(const Coefficient& o) const = default;

    static Coefficient symbol(CoeffSymbol sym, Rational w = 1);
    static Coefficient value(Rational v);
};

struct Term {
    InvMonomial mono;
    Coefficient coeff;
};

struct Factor {
    unsigned n = 0;
    unsigned m = 0;

    bool operator==(const Factor&) const = default;
};

using Bindings = std::map<CoeffSymbol, Rational>;

struct SelfDualPoly {
    std::vector<Factor> factors;  // one entry for a plain S_n polynomial
    Kind kind = Kind::Reciprocal;
    bool symmetrized = false;
    std::vector<Term> terms;  // canonical order, no zero coefficients
    Bindings bindings;

    std::vector<unsigned> block_sizes() const;
    unsigned order() const;  // sum n_j m_j
    // every symbol occurring in terms has a binding
    bool is_numeric() const;
    std::vector<CoeffSymbol> symbols() const;
};

// Plain S_n polynomial. Unbound symbols stay symbolic.
SelfDualPoly assemble(unsigned n, unsigned m, Kind kind, const Bindings& bindings = {});

// Product group S_{n1} x ... x S_{nk}. Symmetrized mode gives one symbol
// per orbit of block permutations (blocks zero-padded to a common size).
SelfDualPoly assemble_product(const std::vector<Factor>& factors, Kind kind, bool symmetrized,
                              const Bindings& bindings = {});

// Concatenated block tuples at total degree s, in the order that fixes l.
std::vector<AlphaTuple> enumerate_product_alpha(const std::vector<Factor>& factors, unsigned s);

// Substitute bindings into the coefficients.
SelfDualPoly bind_symbols(const SelfDualPoly& p, const Bindings& bindings);

// Product of two numeric polynomials with the same block sizes.
SelfDualPoly multiply(const SelfDualPoly& p, const SelfDualPoly& q);

struct StructureReport {
    bool ok = true;
    std::vector<std::string> problems;
};

// Homogeneity, per-block weight bound and closure under the dual map with
// the sign of p.kind.
StructureReport check_structure(const SelfDualPoly& p);

// Image of a monomial under x -> 1/x, lambda -> 1/lambda after clearing
// lambda^{order} prod I_{n_j,n_j}^{m_j}.
InvMonomial dual_monomial(const InvMonomial& mono, const std::vector<Factor>& factors);

// p(lambda, x); x concatenates the block variables. Needs numeric p.
double evaluate(const SelfDualPoly& p, double lambda, const std::vector<double>& x);

struct TransformReport {
    bool ok = false;
    double left = 0;   // p(1/lambda, 1/x)
    double right = 0;  // +-lambda^{-order} prod I_n^{-m} p(lambda, x)
    double rel_error = 0;
};

TransformReport conformal_transform_check(const SelfDualPoly& p, const std::vector<double>& x,
                                          double lambda, double tol);

// Rank of the symbol -> monomial matrix (exact).
std::size_t independent_coefficients(const SelfDualPoly& p);
std::size_t mu_by_count(unsigned n, unsigned m, Kind kind);
std::size_t mu_product_by_count(const std::vector<Factor>& factors, Kind kind, bool symmetrized);

// Self-paired middle tuples, i.e. skew cancellations.
std::size_t middle_fixed_points(unsigned n, unsigned m);

BigCount q_closed(unsigned n, unsigned m);
BigCount mu_closed(unsigned n, unsigned m, Kind kind);
BigCount mu_product_closed(const std::vector<Factor>& factors, Kind kind);

// Tuple counts of the lower, middle and upper blocks.
struct TupleSplit {
    BigCount lower;
    BigCount middle;
    BigCount upper;
};
TupleSplit tuple_split(unsigned n, unsigned m);

std::string to_string(const InvMonomial& mono, const std::vector<Factor>& factors);
std::string to_string(const SelfDualPoly& p);

}  // namespace conformal
