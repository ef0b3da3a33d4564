#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace demishuffle {

/// A letter of the alphabet {X} ∪ {Y_1, ..., Y_m}: 0 encodes X and
/// i >= 1 encodes Y_i.
using Letter = std::uint16_t;

inline constexpr Letter letter_x = 0;

constexpr Letter y_letter(int i) { return static_cast<Letter>(i); }

constexpr bool is_y(Letter l) { return l != letter_x; }

/// The alphabet X < Y_1 < ... < Y_m, determined by the number m >= 1 of
/// Y-letters. m = 1 reproduces the two-letter algebra.
class Alphabet {
public:
    explicit Alphabet(int y_count = 1);

    int y_count() const noexcept { return y_count_; }
    bool contains(Letter l) const noexcept { return l <= y_count_; }

    friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
    int y_count_;
};

/// A word: a finite letter sequence, i.e. a monomial of the free
/// associative algebra. The empty word is the unit 1. Words compare in
/// canonical order: shorter first, then lexicographic with X < Y_1 < Y_2 < ...
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word x_power(int k);
    static Word single(Letter l) { return Word({l}); }

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter> &letters() const noexcept { return letters_; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    friend bool operator==(const Word &, const Word &) = default;
    friend std::strong_ordering operator<=>(const Word &a, const Word &b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
            return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

/// True when every letter of w belongs to the alphabet.
bool fits(const Word &w, const Alphabet &alphabet);

Word concat(const Word &a, const Word &b);

struct Bidegree {
    int x_degree = 0;
    int y_degree = 0;
    friend bool operator==(const Bidegree &, const Bidegree &) = default;
};

/// Counts of X-letters and Y-letters in w.
Bidegree bidegree(const Word &w);

/// A multi-index k = (k_1, ..., k_d; k_inf) with non-negative entries and a
/// distinguished tail, plus a label sequence (λ_1, ..., λ_d) selecting the
/// Y-letter of each slot (all 1 in the two-letter algebra). Encodes the word
/// X^{k_1} Y_{λ_1} ... X^{k_d} Y_{λ_d} X^{k_inf}. Ordered like the word it
/// encodes.
class MultiIndex {
public:
    MultiIndex() = default; // (;0)
    MultiIndex(std::vector<int> body, int tail);
    MultiIndex(std::vector<int> body, std::vector<int> labels, int tail);

    int depth() const noexcept { return static_cast<int>(body_.size()); }
    /// |k| = k_1 + ... + k_d + k_inf (the X-degree of the encoded word).
    int size() const noexcept;
    int tail() const noexcept { return tail_; }
    int word_length() const noexcept { return size() + depth(); }
    const std::vector<int> &body() const noexcept { return body_; }
    const std::vector<int> &labels() const noexcept { return labels_; }

    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
    friend std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b);

private:
    std::vector<int> body_;
    std::vector<int> labels_;
    int tail_ = 0;
};

/// The word X^{k_1} Y_{λ_1} ... X^{k_d} Y_{λ_d} X^{k_inf} associated to k.
/// Throws std::invalid_argument when a label is outside the alphabet.
Word index_to_word(const MultiIndex &k, const Alphabet &alphabet);

/// Inverse of index_to_word: reads off the X-runs between Y-letters.
MultiIndex word_to_index(const Word &w);

/// All words of length <= max_length over the alphabet, in canonical order.
std::vector<Word> words_up_to(int max_length, const Alphabet &alphabet);

/// All multi-indices t with labels fixed to `labels` whose encoded word has
/// x_degree X-letters, i.e. the compositions of x_degree into depth+1 parts.
std::vector<MultiIndex> indices_with_bidegree(int x_degree, std::span<const int> labels);

/// All multi-indices (with all label assignments over the alphabet) whose
/// encoded word has length <= max_word_length, in canonical order.
std::vector<MultiIndex> indices_up_to_length(int max_word_length, const Alphabet &alphabet);

} // namespace demishuffle
