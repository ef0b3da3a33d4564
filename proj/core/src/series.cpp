#include "demishuffle/series.hpp"

#include <stdexcept>

namespace demishuffle {

namespace {

void require_compatible(const TruncatedSeries &a, const TruncatedSeries &b) {
    if (!(a.alphabet() == b.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    if (a.cutoff() != b.cutoff())
        throw std::invalid_argument("cutoff mismatch");
}

} // namespace

TruncatedSeries::TruncatedSeries(Alphabet alphabet, int cutoff)
    : alphabet_(alphabet), cutoff_(cutoff) {
    if (cutoff < 0)
        throw std::invalid_argument("negative cutoff");
}

TruncatedSeries TruncatedSeries::truncate(const Polynomial &p, int cutoff) {
    TruncatedSeries s(p.alphabet(), cutoff);
    for (const auto &[w, c] : p.terms())
        if (w.length() <= static_cast<std::size_t>(cutoff))
            s.add_term(w, c);
    return s;
}

TruncatedSeries TruncatedSeries::one(Alphabet alphabet, int cutoff) {
    TruncatedSeries s(alphabet, cutoff);
    s.add_term(Word{}, 1);
    return s;
}

Rational TruncatedSeries::coefficient(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Word &w, const Rational &coeff) {
    if (!fits(w, alphabet_))
        throw std::invalid_argument("word outside series alphabet");
    if (w.length() > static_cast<std::size_t>(cutoff_))
        throw std::invalid_argument("word longer than series cutoff");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial TruncatedSeries::as_polynomial() const {
    Polynomial p(alphabet_);
    for (const auto &[w, c] : terms_)
        p.add_term(w, c);
    return p;
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
    require_compatible(a, b);
    TruncatedSeries r = a;
    for (const auto &[w, c] : b.terms())
        r.add_term(w, c);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) {
    return a + Rational(-1) * b;
}

TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a) {
    TruncatedSeries r(a.alphabet(), a.cutoff());
    if (c == 0)
        return r;
    for (const auto &[w, v] : a.terms())
        r.add_term(w, c * v);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
    require_compatible(a, b);
    return TruncatedSeries::truncate(
        concat_mul(a.as_polynomial(), b.as_polynomial(), a.cutoff()), a.cutoff());
}

TruncatedSeries series_exp(const TruncatedSeries &p) {
    if (p.constant_term() != 0)
        throw std::invalid_argument("series_exp needs zero constant term");
    TruncatedSeries result = TruncatedSeries::one(p.alphabet(), p.cutoff());
    TruncatedSeries power = result; // p^n / n!
    for (int n = 1; n <= p.cutoff(); ++n) {
        power = Rational(1, n) * (power * p);
        if (power.is_zero())
            break;
        result = result + power;
    }
    return result;
}

TruncatedSeries series_log(const TruncatedSeries &j) {
    if (j.constant_term() != 1)
        throw std::invalid_argument("series_log needs constant term 1");
    const TruncatedSeries a = j - TruncatedSeries::one(j.alphabet(), j.cutoff());
    TruncatedSeries result(j.alphabet(), j.cutoff());
    TruncatedSeries power = TruncatedSeries::one(j.alphabet(), j.cutoff());
    for (int n = 1; n <= j.cutoff(); ++n) {
        power = power * a;
        if (power.is_zero())
            break;
        result = result + Rational(n % 2 ? 1 : -1, n) * power;
    }
    return result;
}

} // namespace demishuffle
