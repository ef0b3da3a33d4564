#pragma once

#include <map>

#include "demishuffle/polynomial.hpp"

namespace demishuffle {

/// A formal power series truncated at total degree `cutoff`: a polynomial
/// whose words all have length <= cutoff, with the cutoff recorded.
/// Multiplication silently drops words beyond the cutoff; combining two
/// series requires equal cutoffs.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Alphabet alphabet = Alphabet{1}, int cutoff = 0);

    /// Keeps the terms of p of length <= cutoff.
    static TruncatedSeries truncate(const Polynomial &p, int cutoff);
    static TruncatedSeries one(Alphabet alphabet, int cutoff);

    const Alphabet &alphabet() const noexcept { return alphabet_; }
    int cutoff() const noexcept { return cutoff_; }
    const std::map<Word, Rational> &terms() const noexcept { return terms_; }
    Rational coefficient(const Word &w) const;
    Rational constant_term() const { return coefficient(Word{}); }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Word &w, const Rational &coeff);

    Polynomial as_polynomial() const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    Alphabet alphabet_;
    int cutoff_;
    std::map<Word, Rational> terms_;
};

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a);
/// Concatenation product truncated at the common cutoff.
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

/// exp(p) = Σ_{n} p^n / n! with concatenation powers, truncated. Requires
/// zero constant term; the result has constant term 1.
TruncatedSeries series_exp(const TruncatedSeries &p);

/// log(J) = Σ_{n>=1} (-1)^{n+1} (J-1)^n / n, truncated. Requires constant
/// term 1; the result has constant term 0. Inverse of series_exp.
TruncatedSeries series_log(const TruncatedSeries &j);

} // namespace demishuffle
