#pragma once

#include <map>

#include "demishuffle/polynomial.hpp"

namespace demishuffle {

/// Array binomial coefficient (t over k): the coefficient of the word w_t in
/// the demi-shuffle polynomial S^(k). Product of binomials
/// C(t_1, k_1) C(t_1+t_2-k_1, k_2) ... ; equal to 1 for t = k = (;N). Zero
/// when depths, sizes or labels disagree, or any factor is out of range.
Integer array_binomial(const MultiIndex &t, const MultiIndex &k);

/// Magnus binomial coefficient {k over t}: the coefficient of the word w_t in
/// the Magnus polynomial M^(k). Signed product of binomials
/// (-1)^{Σ (d-i+1)(k_i-t_i)} C(k_1, k_1-t_1) C(k_2, k_1+k_2-t_1-t_2) ... ;
/// zero under the same mismatch rules as array_binomial.
Integer magnus_binomial(const MultiIndex &k, const MultiIndex &t);

/// Magnus polynomial M^(k) = Y_{λ_1}^{(k_1)} ... Y_{λ_d}^{(k_d)} X^{k_inf},
/// built from the elimination recursion Y^(0) = Y, Y^(j+1) = [X, Y^(j)].
/// Homogeneous of bidegree (|k|, dep k).
Polynomial magnus_poly(const MultiIndex &k, const Alphabet &alphabet);

/// M^(k) assembled directly as Σ_t {k over t} w_t; equals magnus_poly.
Polynomial magnus_poly_closed(const MultiIndex &k, const Alphabet &alphabet);

/// Demi-shuffle polynomial
/// S^(k) = (...((X^{k_1} Y_{λ_1}) ⧢ X^{k_2}) Y_{λ_2} ...) ⧢ X^{k_inf}:
/// alternately shuffle in X-powers and append Y-letters. The dual basis of
/// the Magnus basis under the standard pairing.
Polynomial demi_shuffle_poly(const MultiIndex &k, const Alphabet &alphabet);

/// S^(k) assembled directly as Σ_t (t over k) w_t; equals demi_shuffle_poly.
Polynomial demi_shuffle_poly_closed(const MultiIndex &k, const Alphabet &alphabet);

enum class BasisKind { magnus, demi_shuffle };

/// Coordinates of a polynomial in the Magnus or demi-shuffle basis.
class BasisExpansion {
public:
    BasisExpansion(BasisKind kind, Alphabet alphabet)
        : kind_(kind), alphabet_(alphabet) {}

    BasisKind kind() const noexcept { return kind_; }
    const Alphabet &alphabet() const noexcept { return alphabet_; }
    const std::map<MultiIndex, Rational> &coefficients() const noexcept { return coefficients_; }
    Rational coefficient(const MultiIndex &k) const;

    void add_coefficient(const MultiIndex &k, const Rational &c);

    friend bool operator==(const BasisExpansion &, const BasisExpansion &) = default;

private:
    BasisKind kind_;
    Alphabet alphabet_;
    std::map<MultiIndex, Rational> coefficients_;
};

/// Coordinates of u in the Magnus basis: α_k = ⟨S^(k), u⟩, so that
/// u = Σ α_k M^(k). Candidate indices are enumerated from the bidegrees and
/// label sequences occurring in u.
BasisExpansion expand_magnus(const Polynomial &u);

/// Coordinates of u in the demi-shuffle basis: ⟨M^(k), u⟩, so that
/// u = Σ ⟨M^(k), u⟩ S^(k).
BasisExpansion expand_demishuffle(const Polynomial &u);

/// Σ_k coeff_k · B^(k) where B is the expansion's basis.
Polynomial recombine(const BasisExpansion &expansion);

} // namespace demishuffle
