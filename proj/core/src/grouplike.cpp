#include "demishuffle/grouplike.hpp"

#include <stdexcept>

#include "demishuffle/bases.hpp"

namespace demishuffle {

namespace {

void for_each_composition(int total, int parts, auto &&fn) {
    std::vector<int> entries(static_cast<std::size_t>(parts));
    auto rec = [&](auto &&self, int slot, int remaining) -> void {
        if (slot == parts) {
            if (remaining == 0)
                fn(entries);
            return;
        }
        if (slot == parts - 1) {
            entries[static_cast<std::size_t>(slot)] = remaining;
            fn(entries);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            entries[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
}

} // namespace

TruncatedSeries grouplike_from_spec(const GrouplikeSpec &spec) {
    TruncatedSeries result = TruncatedSeries::one(spec.alphabet, spec.cutoff);
    for (const GrouplikeFactor &factor : spec.factors) {
        if (!spec.alphabet.contains(factor.letter))
            throw std::invalid_argument("factor letter outside alphabet");
        TruncatedSeries exponent(spec.alphabet, spec.cutoff);
        if (spec.cutoff >= 1)
            exponent.add_term(Word::single(factor.letter), factor.scalar);
        result = result * series_exp(exponent);
    }
    return result;
}

GrouplikeCheck is_grouplike(const TruncatedSeries &j) {
    if (j.constant_term() != 1)
        return {false, std::nullopt};
    const std::vector<Word> words = words_up_to(j.cutoff() - 1, j.alphabet());
    // Violations come in mirror pairs, so scanning left <= right in canonical
    // order still reports the first violating pair.
    for (const Word &left : words) {
        if (left.empty())
            continue;
        for (const Word &right : words) {
            if (right.empty() || right < left)
                continue;
            if (left.length() + right.length() > static_cast<std::size_t>(j.cutoff()))
                continue;
            Rational lhs = 0;
            for (const auto &[w, mult] : shuffle_words(left, right))
                lhs += Rational(mult) * j.coefficient(w);
            const Rational rhs = j.coefficient(left) * j.coefficient(right);
            if (lhs != rhs)
                return {false, ShuffleWitness{left, right, lhs, rhs}};
        }
    }
    return {true, std::nullopt};
}

RegularCoefficients regular_coefficients(const TruncatedSeries &j) {
    RegularCoefficients regulars{j.alphabet(), j.cutoff(), j.coefficient(Word::single(letter_x)), {}};
    for (const auto &[w, c] : j.terms()) {
        if (w.empty())
            continue; // the unit coefficient is pinned to 1 for group-like series
        const MultiIndex k = word_to_index(w);
        if (k.tail() == 0)
            regulars.by_index.emplace(k, c);
    }
    return regulars;
}

namespace {

Rational regular_lookup(const RegularCoefficients &regulars, const MultiIndex &k) {
    if (k.depth() == 0)
        return 1; // c_(;0), the group-like unit
    if (auto it = regulars.by_index.find(k); it != regulars.by_index.end())
        return it->second;
    if (k.word_length() <= regulars.cutoff)
        return 0; // within the stored range, absent means zero
    throw std::invalid_argument("regular coefficient beyond source cutoff");
}

} // namespace

Rational reconstruct_coefficient(const RegularCoefficients &regulars, const MultiIndex &k) {
    const int d = k.depth();
    Rational total = 0;
    for (int s = 0; s <= k.tail(); ++s) {
        const int t = k.tail() - s;
        const Rational weight =
            Rational(s % 2 ? -1 : 1) * rational_pow(regulars.c_x, t) / Rational(factorial(t));
        if (weight == 0)
            continue;
        for_each_composition(s, d, [&](const std::vector<int> &shift) {
            Integer product = 1;
            std::vector<int> shifted = k.body();
            for (int i = 0; i < d; ++i) {
                shifted[static_cast<std::size_t>(i)] += shift[static_cast<std::size_t>(i)];
                product *= binomial(k.body()[i] + shift[static_cast<std::size_t>(i)], k.body()[i]);
            }
            const MultiIndex regular_index(std::move(shifted), k.labels(), 0);
            total += weight * Rational(product) * regular_lookup(regulars, regular_index);
        });
    }
    return total;
}

ReconstructionReport verify_reconstruction(const TruncatedSeries &j) {
    if (!is_grouplike(j).grouplike)
        throw std::invalid_argument("series is not group-like");
    const RegularCoefficients regulars = regular_coefficients(j);
    ReconstructionReport report;
    for (const MultiIndex &k : indices_up_to_length(j.cutoff(), j.alphabet())) {
        const Rational direct = j.coefficient(index_to_word(k, j.alphabet()));
        const Rational reconstructed = reconstruct_coefficient(regulars, k);
        ++report.checked;
        if (direct != reconstructed)
            report.mismatches.push_back({k, direct, reconstructed});
    }
    return report;
}

namespace {

struct ShiftSetup {
    int depth;
    int total_shift;
    MultiIndex kappa_zero;     // (κ; 0)
    MultiIndex kappa_shift;    // (κ; s)
    MultiIndex shifted_zero;   // (κ+s; 0)
};

ShiftSetup make_setup(std::span<const int> kappa, std::span<const int> shifts) {
    if (kappa.size() != shifts.size())
        throw std::invalid_argument("kappa and shift lengths differ");
    int total = 0;
    std::vector<int> body(kappa.begin(), kappa.end());
    std::vector<int> shifted = body;
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        total += shifts[i];
        shifted[i] += shifts[i];
        if (shifted[i] < 0)
            throw std::invalid_argument("kappa_i + s_i must be non-negative");
    }
    if (total < 0)
        throw std::invalid_argument("total shift must be non-negative");
    return {static_cast<int>(kappa.size()), total, MultiIndex(body, 0), MultiIndex(body, total),
            MultiIndex(shifted, 0)};
}

/// Σ_τ ⟨S^(τ;0), w_(κ+s;0)⟩ ⟨M^(τ;0), w_(κ;s)⟩ over τ of matching bidegree,
/// through the monomial-expansion coefficients.
Integer convolution_sum(const ShiftSetup &setup) {
    Integer sum = 0;
    for_each_composition(setup.shifted_zero.size(), setup.depth, [&](const std::vector<int> &tau) {
        const MultiIndex tau_index(tau, 0);
        sum += array_binomial(setup.shifted_zero, tau_index) *
               magnus_binomial(tau_index, setup.kappa_shift);
    });
    return sum;
}

} // namespace

bool lemma42_check(std::span<const int> kappa, std::span<const int> shifts) {
    const ShiftSetup setup = make_setup(kappa, shifts);
    Integer rhs = setup.total_shift % 2 ? -1 : 1;
    for (std::size_t i = 0; i < kappa.size(); ++i)
        rhs *= binomial(kappa[i] + shifts[i], kappa[i]);
    return convolution_sum(setup) == rhs;
}

bool note43_identity_check(std::span<const int> kappa, std::span<const int> shifts) {
    const ShiftSetup setup = make_setup(kappa, shifts);
    const Alphabet alphabet{1};

    // pairing form: the convolution sum against a genuinely shuffled product
    const Word target = index_to_word(setup.shifted_zero, alphabet);
    Integer shuffle_coeff = 0;
    const auto shuffled =
        shuffle_words(index_to_word(setup.kappa_zero, alphabet), Word::x_power(setup.total_shift));
    if (auto it = shuffled.find(target); it != shuffled.end())
        shuffle_coeff = it->second;
    if (setup.total_shift % 2)
        shuffle_coeff = -shuffle_coeff;
    if (convolution_sum(setup) != shuffle_coeff)
        return false;

    // per-index reduction: both routes through every rho of matching bidegree
    const Integer sign = setup.total_shift % 2 ? -1 : 1;
    bool ok = true;
    for_each_composition(setup.kappa_zero.size(), setup.depth, [&](const std::vector<int> &rho) {
        const MultiIndex rho_shift_tail(rho, setup.total_shift); // (ρ; s)
        const MultiIndex rho_zero(rho, 0);                       // (ρ; 0)
        std::vector<int> bumped = rho;                           // (ρ + (0,...,0,s); 0)
        if (!bumped.empty())
            bumped.back() += setup.total_shift;
        const MultiIndex rho_bumped(bumped, 0);
        const Integer left = array_binomial(setup.shifted_zero, rho_shift_tail) *
                             magnus_binomial(rho_zero, setup.kappa_zero);
        const Integer right = sign * array_binomial(setup.shifted_zero, rho_bumped) *
                              magnus_binomial(rho_bumped, setup.kappa_shift);
        if (left != right)
            ok = false;
    });
    return ok;
}

} // namespace demishuffle
