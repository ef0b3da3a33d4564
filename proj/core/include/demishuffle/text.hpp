#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "demishuffle/polynomial.hpp"

namespace demishuffle {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &message, std::size_t position);
    /// Byte offset into the parsed text where the error was detected.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// "p/q", denominator omitted when 1.
std::string format_rational(const Rational &r);
Rational parse_rational(std::string_view text);

std::string letter_name(Letter l, const Alphabet &alphabet);

/// Juxtaposed letters, "1" for the empty word. Y-letters print as "Y" in the
/// two-letter alphabet and as "Y1", "Y2", ... otherwise.
std::string format_word(const Word &w, const Alphabet &alphabet);

/// Accepts juxtaposed letter tokens with optional powers and whitespace:
/// "XXY", "X^2 Y", "X Y2 X". Bare "Y" means Y_1. "1" is the empty word.
Word parse_word(std::string_view text, const Alphabet &alphabet);

/// "(k1,...,kd;kinf)"; entries carry ":label" suffixes when the alphabet has
/// more than one Y-letter. Depth 0 prints as "(;kinf)".
std::string format_index(const MultiIndex &k, const Alphabet &alphabet);
MultiIndex parse_index(std::string_view text, const Alphabet &alphabet);

/// Terms in canonical word order joined by " + " / " - "; coefficients as
/// "p/q*WORD" with unit coefficients omitted; "0" for the zero polynomial.
std::string format_poly(const Polynomial &p);

/// Grammar: poly := term (('+'|'-') term)*;
///          term := [rational '*']? word | rational.
Polynomial parse_poly(std::string_view text, const Alphabet &alphabet);

} // namespace demishuffle
