#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "demishuffle/series.hpp"

namespace demishuffle {

/// One exponential factor exp(scalar * letter).
struct GrouplikeFactor {
    Letter letter = letter_x;
    Rational scalar;
    friend bool operator==(const GrouplikeFactor &, const GrouplikeFactor &) = default;
};

/// Recipe for a group-like series: a product of exponentials of scalar
/// multiples of single letters, truncated at `cutoff`. An empty factor list
/// yields the series 1.
struct GrouplikeSpec {
    Alphabet alphabet{1};
    int cutoff = 0;
    std::vector<GrouplikeFactor> factors;
    friend bool operator==(const GrouplikeSpec &, const GrouplikeSpec &) = default;
};

/// The truncated product exp(c_1 a_1) ... exp(c_r a_r). Constant term 1.
TruncatedSeries grouplike_from_spec(const GrouplikeSpec &spec);

/// A violated shuffle relation: ⟨left ⧢ right, J⟩ != c_left * c_right.
struct ShuffleWitness {
    Word left;
    Word right;
    Rational shuffle_pairing;
    Rational coefficient_product;
};

struct GrouplikeCheck {
    bool grouplike = false;
    /// First violation in canonical order (outer word, then inner), present
    /// iff the check failed on a word pair. Empty-word violations (constant
    /// term != 1) carry no witness.
    std::optional<ShuffleWitness> witness;
};

/// Ree's criterion, cutoff-limited: constant term 1 and
/// ⟨w ⧢ w', J⟩ = c_w c_w' for all nonempty word pairs with
/// |w| + |w'| <= cutoff.
GrouplikeCheck is_grouplike(const TruncatedSeries &j);

/// The coefficients of J at tail-free indices (k_inf = 0, words not ending
/// in X, including the empty word), plus c_X = c_(;1). Everything the
/// reconstruction formula consumes.
struct RegularCoefficients {
    Alphabet alphabet{1};
    int cutoff = 0;
    Rational c_x;
    std::map<MultiIndex, Rational> by_index;
};

RegularCoefficients regular_coefficients(const TruncatedSeries &j);

/// Reconstructs c_k from the regular coefficients:
///   c_k = Σ_{s+t=k_inf} (-1)^s (c_X)^t / t!
///           Σ_{s_1+...+s_d=s} C(k_1+s_1, k_1) ... C(k_d+s_d, k_d) c_(k+s;0)
/// with (c_X)^0/0! = 1 even when c_X = 0. A required regular coefficient that
/// is absent counts as zero only when the source cutoff guarantees it was
/// stored if nonzero (index word length <= cutoff); otherwise throws.
Rational reconstruct_coefficient(const RegularCoefficients &regulars, const MultiIndex &k);

struct ReconstructionMismatch {
    MultiIndex index;
    Rational direct;
    Rational reconstructed;
};

struct ReconstructionReport {
    std::int64_t checked = 0;
    std::vector<ReconstructionMismatch> mismatches; // canonical index order
    bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares every coefficient of J (index word length <= cutoff) against its
/// reconstruction from the regular coefficients. Requires J group-like
/// (throws otherwise); the report is then expected to be empty.
ReconstructionReport verify_reconstruction(const TruncatedSeries &j);

/// Convolution identity oracle:
///   Σ_τ ⟨S^(τ;0), w_(κ+s;0)⟩ ⟨M^(τ;0), w_(κ;s)⟩ = (-1)^s Π C(κ_i+s_i, κ_i)
/// evaluated by direct enumeration of τ of matching bidegree. Requires
/// s = Σ s_i >= 0 and κ_i + s_i >= 0.
bool lemma42_check(std::span<const int> kappa, std::span<const int> shifts);

/// The equivalent pairing form
///   Σ_τ ⟨S^(τ;0), w_(κ+s;0)⟩ ⟨M^(τ;0), w_(κ;0)·X^s⟩
///     = (-1)^s ⟨w_(κ;0) ⧢ X^s, w_(κ+s;0)⟩
/// (right side evaluated with a real shuffle), plus the per-index binomial
/// identity it reduces to, checked for every ρ of matching bidegree. Same
/// preconditions as lemma42_check.
bool note43_identity_check(std::span<const int> kappa, std::span<const int> shifts);

} // namespace demishuffle
