#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "demishuffle/bases.hpp"
#include "demishuffle/grouplike.hpp"
#include "demishuffle/series.hpp"
#include "demishuffle/text.hpp"

namespace demishuffle::testing {

inline const Alphabet two_letters{1};

inline Word w(std::string_view text, const Alphabet &alphabet = two_letters) {
    return parse_word(text, alphabet);
}

inline MultiIndex idx(std::string_view text, const Alphabet &alphabet = two_letters) {
    return parse_index(text, alphabet);
}

inline Polynomial p(std::string_view text, const Alphabet &alphabet = two_letters) {
    return parse_poly(text, alphabet);
}

inline Polynomial mono(const Word &word, const Alphabet &alphabet = two_letters) {
    return Polynomial::monomial(alphabet, word);
}

/// Independent shuffle oracle: sums the C(|u|+|v|, |u|) positional
/// interleavings directly, one selection mask at a time. Deliberately avoids
/// the recursive route used by shuffle_words.
inline std::map<Word, Integer> shuffle_by_interleavings(const Word &u, const Word &v) {
    const std::size_t total = u.length() + v.length();
    std::vector<bool> take_u(total, false);
    std::fill(take_u.begin(), take_u.begin() + static_cast<std::ptrdiff_t>(u.length()), true);
    std::map<Word, Integer> result;
    do {
        std::vector<Letter> letters;
        letters.reserve(total);
        std::size_t iu = 0, iv = 0;
        for (bool from_u : take_u)
            letters.push_back(from_u ? u[iu++] : v[iv++]);
        result[Word(std::move(letters))] += 1;
    } while (std::prev_permutation(take_u.begin(), take_u.end()));
    return result;
}

/// Deterministic random polynomial with small integer coefficients.
inline Polynomial random_int_poly(std::mt19937 &rng, int max_degree, int term_count,
                                  const Alphabet &alphabet = two_letters) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    Polynomial result(alphabet);
    for (int t = 0; t < term_count; ++t) {
        const int len = pick(max_degree + 1);
        std::vector<Letter> letters;
        for (int i = 0; i < len; ++i)
            letters.push_back(static_cast<Letter>(pick(alphabet.y_count() + 1)));
        const int coeff = pick(11) - 5;
        result.add_term(Word(std::move(letters)), coeff);
    }
    return result;
}

/// Deterministic random polynomial with small rational coefficients.
inline Polynomial random_rational_poly(std::mt19937 &rng, int max_degree, int term_count,
                                       const Alphabet &alphabet = two_letters) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    Polynomial result(alphabet);
    for (int t = 0; t < term_count; ++t) {
        const int len = pick(max_degree + 1);
        std::vector<Letter> letters;
        for (int i = 0; i < len; ++i)
            letters.push_back(static_cast<Letter>(pick(alphabet.y_count() + 1)));
        result.add_term(Word(std::move(letters)), Rational(pick(11) - 5, 1 + pick(4)));
    }
    return result;
}

inline std::vector<Word> nonempty_words_up_to(int max_length,
                                              const Alphabet &alphabet = two_letters) {
    std::vector<Word> words = words_up_to(max_length, alphabet);
    std::erase_if(words, [](const Word &word) { return word.empty(); });
    return words;
}

inline GrouplikeSpec exp_x_exp_y(int cutoff) {
    return GrouplikeSpec{two_letters, cutoff, {{letter_x, 1}, {y_letter(1), 1}}};
}

/// Deterministic random exponential-product spec; every fourth spec gets its
/// X-scalar cancelled so that c_X = 0 cases are always present.
inline GrouplikeSpec random_spec(std::mt19937 &rng, int serial, int cutoff,
                                 const Alphabet &alphabet = two_letters) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    GrouplikeSpec spec{alphabet, cutoff, {}};
    const int factor_count = 1 + pick(4);
    for (int f = 0; f < factor_count; ++f) {
        const Letter letter = static_cast<Letter>(pick(alphabet.y_count() + 1));
        const int numerator = 1 + pick(3);
        spec.factors.push_back(
            {letter, Rational(pick(2) ? -numerator : numerator, 1 + pick(3))});
    }
    if (serial % 4 == 3) {
        Rational x_total = 0;
        for (const GrouplikeFactor &f : spec.factors)
            if (f.letter == letter_x)
                x_total += f.scalar;
        if (x_total != 0)
            spec.factors.push_back({letter_x, -x_total});
    }
    return spec;
}

} // namespace demishuffle::testing
