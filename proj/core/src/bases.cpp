#include "demishuffle/bases.hpp"

#include <set>
#include <stdexcept>

namespace demishuffle {

namespace {

bool comparable(const MultiIndex &a, const MultiIndex &b) {
    return a.depth() == b.depth() && a.size() == b.size() && a.labels() == b.labels();
}

} // namespace

Integer array_binomial(const MultiIndex &t, const MultiIndex &k) {
    if (!comparable(t, k))
        return 0;
    Integer result = 1;
    long long t_prefix = 0, k_prefix = 0;
    for (int i = 0; i < k.depth(); ++i) {
        t_prefix += t.body()[i];
        result *= binomial(t_prefix - k_prefix, k.body()[i]);
        if (result == 0)
            return 0;
        k_prefix += k.body()[i];
    }
    return result;
}

Integer magnus_binomial(const MultiIndex &k, const MultiIndex &t) {
    if (!comparable(t, k))
        return 0;
    const int d = k.depth();
    Integer result = 1;
    long long sign_exponent = 0, diff_prefix = 0;
    for (int i = 0; i < d; ++i) {
        const long long diff = k.body()[i] - t.body()[i];
        sign_exponent += (d - i) * diff;
        diff_prefix += diff;
        result *= binomial(k.body()[i], diff_prefix);
        if (result == 0)
            return 0;
    }
    return sign_exponent % 2 ? -result : result;
}

namespace {

/// Y_λ^(j): the elimination recursion Y^(0) = Y_λ, Y^(j+1) = [X, Y^(j)].
Polynomial elimination_element(int order, Letter label, const Alphabet &alphabet) {
    const Polynomial x = Polynomial::monomial(alphabet, Word::single(letter_x));
    Polynomial p = Polynomial::monomial(alphabet, Word::single(label));
    for (int j = 0; j < order; ++j)
        p = concat_mul(x, p) - concat_mul(p, x);
    return p;
}

void require_labels(const MultiIndex &k, const Alphabet &alphabet) {
    for (int label : k.labels())
        if (!alphabet.contains(static_cast<Letter>(label)))
            throw std::invalid_argument("label outside alphabet");
}

} // namespace

Polynomial magnus_poly(const MultiIndex &k, const Alphabet &alphabet) {
    require_labels(k, alphabet);
    Polynomial result = Polynomial::unit(alphabet);
    for (int i = 0; i < k.depth(); ++i)
        result = concat_mul(
            result, elimination_element(k.body()[i], static_cast<Letter>(k.labels()[i]), alphabet));
    return concat_mul(result, Polynomial::monomial(alphabet, Word::x_power(k.tail())));
}

Polynomial magnus_poly_closed(const MultiIndex &k, const Alphabet &alphabet) {
    require_labels(k, alphabet);
    Polynomial result(alphabet);
    for (const MultiIndex &t : indices_with_bidegree(k.size(), k.labels())) {
        const Integer c = magnus_binomial(k, t);
        if (c != 0)
            result.add_term(index_to_word(t, alphabet), Rational(c));
    }
    return result;
}

Polynomial demi_shuffle_poly(const MultiIndex &k, const Alphabet &alphabet) {
    require_labels(k, alphabet);
    Polynomial result = Polynomial::unit(alphabet);
    for (int i = 0; i < k.depth(); ++i) {
        result = shuffle_mul(result, Polynomial::monomial(alphabet, Word::x_power(k.body()[i])));
        result = concat_mul(
            result, Polynomial::monomial(alphabet, Word::single(static_cast<Letter>(k.labels()[i]))));
    }
    return shuffle_mul(result, Polynomial::monomial(alphabet, Word::x_power(k.tail())));
}

Polynomial demi_shuffle_poly_closed(const MultiIndex &k, const Alphabet &alphabet) {
    require_labels(k, alphabet);
    Polynomial result(alphabet);
    for (const MultiIndex &t : indices_with_bidegree(k.size(), k.labels())) {
        const Integer c = array_binomial(t, k);
        if (c != 0)
            result.add_term(index_to_word(t, alphabet), Rational(c));
    }
    return result;
}

Rational BasisExpansion::coefficient(const MultiIndex &k) const {
    auto it = coefficients_.find(k);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

void BasisExpansion::add_coefficient(const MultiIndex &k, const Rational &c) {
    for (int label : k.labels())
        if (!alphabet_.contains(static_cast<Letter>(label)))
            throw std::invalid_argument("label outside alphabet");
    if (c == 0)
        return;
    auto [it, inserted] = coefficients_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coefficients_.erase(it);
    }
}

namespace {

/// Expansion coefficients read off by pairing u against the given dual
/// family, over all indices whose bidegree/label sector occurs in u.
template <typename DualPoly>
BasisExpansion expand_by_pairing(const Polynomial &u, BasisKind kind, DualPoly &&dual) {
    BasisExpansion expansion(kind, u.alphabet());
    std::set<std::pair<int, std::vector<int>>> sectors;
    for (const auto &[w, c] : u.terms()) {
        const MultiIndex idx = word_to_index(w);
        sectors.emplace(idx.size(), idx.labels());
    }
    for (const auto &[x_degree, labels] : sectors) {
        for (const MultiIndex &k : indices_with_bidegree(x_degree, labels)) {
            const Rational c = pairing(dual(k, u.alphabet()), u);
            expansion.add_coefficient(k, c);
        }
    }
    return expansion;
}

} // namespace

BasisExpansion expand_magnus(const Polynomial &u) {
    return expand_by_pairing(u, BasisKind::magnus, demi_shuffle_poly);
}

BasisExpansion expand_demishuffle(const Polynomial &u) {
    return expand_by_pairing(u, BasisKind::demi_shuffle, magnus_poly);
}

Polynomial recombine(const BasisExpansion &expansion) {
    auto basis_poly =
        expansion.kind() == BasisKind::magnus ? magnus_poly : demi_shuffle_poly;
    Polynomial result(expansion.alphabet());
    for (const auto &[k, c] : expansion.coefficients())
        result = result + c * basis_poly(k, expansion.alphabet());
    return result;
}

} // namespace demishuffle
