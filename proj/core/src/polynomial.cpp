#include "demishuffle/polynomial.hpp"

#include <stdexcept>

namespace demishuffle {

namespace {

void require_same_alphabet(const Alphabet &a, const Alphabet &b) {
    if (!(a == b))
        throw std::invalid_argument("alphabet mismatch");
}

} // namespace

Polynomial Polynomial::monomial(Alphabet alphabet, const Word &w, const Rational &coeff) {
    Polynomial p(alphabet);
    p.add_term(w, coeff);
    return p;
}

Rational Polynomial::coefficient(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Word &w, const Rational &coeff) {
    if (!fits(w, alphabet_))
        throw std::invalid_argument("word outside polynomial alphabet");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial operator+(const Polynomial &p, const Polynomial &q) {
    require_same_alphabet(p.alphabet(), q.alphabet());
    Polynomial r = p;
    for (const auto &[w, c] : q.terms())
        r.add_term(w, c);
    return r;
}

Polynomial operator-(const Polynomial &p, const Polynomial &q) { return p + (-q); }

Polynomial operator-(const Polynomial &p) { return Rational(-1) * p; }

Polynomial operator*(const Rational &c, const Polynomial &p) { return scale(c, p); }

Polynomial operator*(const Polynomial &p, const Rational &c) { return scale(c, p); }

Polynomial scale(const Rational &c, const Polynomial &p) {
    Polynomial r(p.alphabet());
    if (c == 0)
        return r;
    for (const auto &[w, v] : p.terms())
        r.add_term(w, c * v);
    return r;
}

Polynomial concat_mul(const Polynomial &p, const Polynomial &q, std::optional<int> cutoff) {
    require_same_alphabet(p.alphabet(), q.alphabet());
    Polynomial r(p.alphabet());
    for (const auto &[w1, c1] : p.terms()) {
        for (const auto &[w2, c2] : q.terms()) {
            if (cutoff && w1.length() + w2.length() > static_cast<std::size_t>(*cutoff))
                continue;
            r.add_term(concat(w1, w2), c1 * c2);
        }
    }
    return r;
}

std::map<Word, Integer> shuffle_words(const Word &u, const Word &v) {
    // dp[i][j] = u[0..i) shuffled with v[0..j), following the tail recursion
    // (ua) sha (vb) = (u sha vb)a + (ua sha v)b.
    const std::size_t m = u.length(), n = v.length();
    std::vector<std::vector<std::map<Word, Integer>>> dp(
        m + 1, std::vector<std::map<Word, Integer>>(n + 1));
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            auto &cell = dp[i][j];
            if (i == 0 && j == 0) {
                cell[Word{}] = 1;
                continue;
            }
            if (i > 0) {
                for (const auto &[w, c] : dp[i - 1][j])
                    cell[concat(w, Word::single(u[i - 1]))] += c;
            }
            if (j > 0) {
                for (const auto &[w, c] : dp[i][j - 1])
                    cell[concat(w, Word::single(v[j - 1]))] += c;
            }
        }
    }
    return dp[m][n];
}

Polynomial shuffle_mul(const Polynomial &p, const Polynomial &q, std::optional<int> cutoff) {
    require_same_alphabet(p.alphabet(), q.alphabet());
    Polynomial r(p.alphabet());
    for (const auto &[w1, c1] : p.terms()) {
        for (const auto &[w2, c2] : q.terms()) {
            if (cutoff && w1.length() + w2.length() > static_cast<std::size_t>(*cutoff))
                continue;
            const Rational factor = c1 * c2;
            for (const auto &[w, mult] : shuffle_words(w1, w2))
                r.add_term(w, factor * Rational(mult));
        }
    }
    return r;
}

Polynomial half_shuffle(const Polynomial &p, const Polynomial &q) {
    require_same_alphabet(p.alphabet(), q.alphabet());
    Polynomial r(p.alphabet());
    for (const auto &[w1, c1] : p.terms()) {
        if (w1.empty())
            throw std::invalid_argument("half-shuffle left operand contains the empty word");
        const Word head = Word::single(w1[0]);
        const Word rest(std::vector<Letter>(w1.begin() + 1, w1.end()));
        for (const auto &[w2, c2] : q.terms()) {
            const Rational factor = c1 * c2;
            for (const auto &[w, mult] : shuffle_words(rest, w2))
                r.add_term(concat(head, w), factor * Rational(mult));
        }
    }
    return r;
}

Polynomial reverse(const Polynomial &p) {
    Polynomial r(p.alphabet());
    for (const auto &[w, c] : p.terms()) {
        std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
        r.add_term(Word(std::move(letters)), c);
    }
    return r;
}

Rational pairing(const Polynomial &p, const Polynomial &q) {
    require_same_alphabet(p.alphabet(), q.alphabet());
    // walk the smaller term map
    const Polynomial &small = p.term_count() <= q.term_count() ? p : q;
    const Polynomial &large = p.term_count() <= q.term_count() ? q : p;
    Rational sum = 0;
    for (const auto &[w, c] : small.terms())
        sum += c * large.coefficient(w);
    return sum;
}

} // namespace demishuffle
