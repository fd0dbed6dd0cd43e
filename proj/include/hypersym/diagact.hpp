#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypersym/abelian.hpp"
#include "hypersym/polyforms.hpp"

namespace hypersym {

// Diagonal automorphism as a tuple of rational exponents mod 1: entry k_j
// over common denominator n encodes the root of unity exp(2*pi*i*k_j/n).
// Table notation: 1/n(k_1, ..., k_N).
struct DiagonalAutomorphism {
    Int n = 1;
    std::vector<Int> exps;  // residues in [0, n)

    // Projective canonical form: subtract exps[0] from every entry, then
    // divide out the common factor of n and all entries.  Makes projective
    // equality a syntactic check.
    DiagonalAutomorphism normalized() const;

    std::string str() const;  // "1/n(k_1,...,k_N)"
    static DiagonalAutomorphism parse(const std::string& text);
    bool operator==(const DiagonalAutomorphism&) const = default;
};

// Order of the class in the projective group: smallest k >= 1 with
// k*(exps_j - exps_1) = 0 mod n for all j.
Int pgl_order(const DiagonalAutomorphism& g);

// The residue c with F -> exp(2*pi*i*c/n) * F, i.e. the common value of
// <alpha, exps> mod n over all monomials; nullopt when residues differ.
std::optional<Int> acts_with_character(const DiagonalAutomorphism& g, const Support& s);

struct SymmetryGroupResult {
    FiniteAbelianGroup group;
    std::vector<DiagonalAutomorphism> generators;  // one per invariant factor
    std::vector<Int> scalar_characters;            // per generator, over its n
};

// Non-smooth supports can leave a coordinate direction unconstrained; the
// witness is a rational direction (over denominator 1) generating a
// positive-dimensional family of symmetries.
struct InfiniteGroup {
    std::vector<Int> free_direction;
};

// G_F for an arbitrary support: kernel of the monomial-difference pairing
// on (Q/Z)^N modulo scalars, computed by SNF over the scalar-free
// coordinates y_j = e_j - e_N.
std::variant<SymmetryGroupResult, InfiniteGroup> symmetry_group(const Support& s);

// Generator of G_F for the Klein polynomial K_a: denominator
// |1-(1-d)^a|, exponents (1-d)^{j-1}.  Fixes the K_a support exactly
// (character 0); projective order |1-(1-d)^a| / d.
DiagonalAutomorphism klein_generator(int d, int a);

// Generator for the chain polynomial T_b, lifted to denominator
// d(d-1)^{b-1} so the character is exactly 0; projective order (d-1)^{b-1}.
DiagonalAutomorphism chain_generator(int d, int b);

// Presentation of G_F for a simple polynomial:
// (prod Z/|1-(1-d)^{a_i}| x prod Z/(d(d-1)^{b_j-1})) / <(m_i/d, (d-1)^{b_j-1})>.
// Factor order matches the canonical simple_support layout (K parts
// ascending, then T parts ascending).
QuotientPresentation predicted_group(int d, const SimpleType& t);

}  // namespace hypersym
