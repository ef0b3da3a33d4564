#pragma once

#include <map>
#include <optional>

#include "demishuffle/rational.hpp"
#include "demishuffle/words.hpp"

namespace demishuffle {

/// A noncommutative polynomial: a finite map from words to exact rational
/// coefficients. Zero coefficients are never stored; the zero polynomial has
/// an empty term map. All stored words fit the polynomial's alphabet.
/// Immutable by convention: every operation returns a new value.
class Polynomial {
public:
    explicit Polynomial(Alphabet alphabet = Alphabet{1}) : alphabet_(alphabet) {}

    static Polynomial zero(Alphabet alphabet) { return Polynomial(alphabet); }
    static Polynomial unit(Alphabet alphabet) { return monomial(alphabet, Word{}); }
    static Polynomial monomial(Alphabet alphabet, const Word &w, const Rational &coeff = 1);

    const Alphabet &alphabet() const noexcept { return alphabet_; }
    const std::map<Word, Rational> &terms() const noexcept { return terms_; }
    Rational coefficient(const Word &w) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Adds coeff * w, dropping the term if the sum cancels. Validates that
    /// w fits the alphabet.
    void add_term(const Word &w, const Rational &coeff);

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    Alphabet alphabet_;
    std::map<Word, Rational> terms_;
};

Polynomial operator+(const Polynomial &p, const Polynomial &q);
Polynomial operator-(const Polynomial &p, const Polynomial &q);
Polynomial operator-(const Polynomial &p);
Polynomial operator*(const Rational &c, const Polynomial &p);
Polynomial operator*(const Polynomial &p, const Rational &c);

/// Coefficient-wise scaling; zero coefficients dropped.
Polynomial scale(const Rational &c, const Polynomial &p);

/// Bilinear extension of word concatenation. Words longer than `cutoff`
/// are discarded when a cutoff is given.
Polynomial concat_mul(const Polynomial &p, const Polynomial &q,
                      std::optional<int> cutoff = std::nullopt);

/// Shuffle product of two words; coefficients are interleaving multiplicities.
/// Follows the recursion (ua) ⧢ (vb) = (u ⧢ vb)a + (ua ⧢ v)b.
std::map<Word, Integer> shuffle_words(const Word &u, const Word &v);

/// Bilinear extension of the word shuffle, with optional degree cutoff.
Polynomial shuffle_mul(const Polynomial &p, const Polynomial &q,
                       std::optional<int> cutoff = std::nullopt);

/// Half-shuffle (Zinbiel) product: on words, x0·u ≺ v = x0·(u ⧢ v), extended
/// bilinearly. Every word of the left operand must be nonempty.
Polynomial half_shuffle(const Polynomial &p, const Polynomial &q);

/// Letter-reversal anti-automorphism; coefficients unchanged.
Polynomial reverse(const Polynomial &p);

/// Standard pairing: sum over words of the coefficient products. On words it
/// is the Kronecker symbol.
Rational pairing(const Polynomial &p, const Polynomial &q);

} // namespace demishuffle
