#pragma once

#include "conformal/big.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conformal {

struct GroupDegrees {
    std::string name;
    std::vector<unsigned> degrees;  // ascending
};

// d_k + d_{n-k} == d_n for k = 1..n-1 on the sorted list.
bool degree_duality_check(const GroupDegrees& g);

// Binary form sum_i form[i] x1^i x2^{d-i}, d = form.size()-1.
// Distinct projective roots over C, counting x2 = 0 when form[d] == 0.
std::size_t distinct_root_count(const std::vector<Rational>& form);

std::size_t descartes_sign_changes(const std::vector<double>& coeffs);

enum class Verdict { Admits, DoesNot };
std::string verdict_name(Verdict v);

struct CatalogEntry {
    GroupDegrees group;
    // Degrees of the basis the equation is actually built from. Differs from
    // group.degrees for D_n, I_{2,2}, C_2, C_4 (squared variables or a
    // containing reflection group).
    std::vector<unsigned> dual_degrees;
    // Rank-2 groups: spanning forms of the top-degree invariants. The first
    // primary_forms entries are new generators, the rest are powers of the
    // quadratic invariant.
    std::vector<std::vector<Rational>> top_forms;
    std::size_t primary_forms = 1;
    bool dependent_extra = false;  // extra invariant whose square is in the S_n ring
    std::string note;
    Verdict expected;
};

CatalogEntry catalog_entry(const std::string& name);
std::vector<CatalogEntry> builtin_catalog();

// Smallest integer combination (|c| <= bound) of forms with at most two
// distinct roots, or nothing. Some of the first `primary` coefficients
// must be nonzero.
std::optional<std::vector<int>> two_root_search(const std::vector<std::vector<Rational>>& forms,
                                              std::size_t primary = 1, int bound = 4);

struct Classification {
    std::string name;
    std::vector<unsigned> degrees;
    bool raw_duality = false;   // on the listed degrees
    bool dual_duality = false;  // on dual_degrees
    std::optional<bool> two_root;
    std::vector<int> witness;
    Verdict computed;
    Verdict expected;
    bool agrees() const { return computed == expected; }
    std::string note;
};

Classification classify(const CatalogEntry& e);

// Binary forms used by the catalog.
std::vector<Rational> real_power_form(unsigned m);   // Re (x1 + i x2)^m
std::vector<Rational> imag_power_form(unsigned m);   // Im (x1 + i x2)^m
std::vector<Rational> radial_power_form(unsigned k); // (x1^2 + x2^2)^k

}  // namespace conformal
