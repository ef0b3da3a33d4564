#include "demishuffle/text.hpp"

#include <cctype>

namespace demishuffle {

ParseError::ParseError(const std::string &message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    [[noreturn]] void fail(const std::string &message) const { throw ParseError(message, pos); }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::string_view digits() {
        const std::size_t start = pos;
        while (at_digit())
            ++pos;
        if (pos == start)
            fail("expected digits");
        return text.substr(start, pos - start);
    }

    int small_integer() {
        const std::size_t start = pos;
        const std::string_view ds = digits();
        if (ds.size() > 9)
            throw ParseError("number too large", start);
        int value = 0;
        for (char c : ds)
            value = value * 10 + (c - '0');
        return value;
    }

    void expect_end() {
        skip_ws();
        if (!done())
            fail("unexpected trailing input");
    }
};

Integer parse_unsigned_integer(Cursor &cur) {
    return Integer(std::string(cur.digits()));
}

Rational parse_rational_body(Cursor &cur) {
    cur.skip_ws();
    bool negative = false;
    if (cur.consume('-'))
        negative = true;
    else
        cur.consume('+');
    cur.skip_ws();
    if (!cur.at_digit())
        cur.fail("expected a number");
    Integer num = parse_unsigned_integer(cur);
    Integer den = 1;
    if (cur.consume('/')) {
        const std::size_t den_pos = cur.pos;
        if (!cur.at_digit())
            cur.fail("expected a denominator");
        den = parse_unsigned_integer(cur);
        if (den == 0)
            throw ParseError("zero denominator", den_pos);
    }
    if (negative)
        num = -num;
    return Rational(num, den);
}

bool at_letter(const Cursor &cur) { return cur.peek() == 'X' || cur.peek() == 'Y'; }

/// One letter token with an optional Y-index and an optional power:
/// X, X^2, Y, Y3, Y3^2, ...
std::pair<Letter, int> parse_letter_token(Cursor &cur, const Alphabet &alphabet) {
    Letter letter = letter_x;
    if (cur.consume('Y')) {
        int index = 1;
        const std::size_t index_pos = cur.pos;
        if (cur.at_digit())
            index = cur.small_integer();
        if (index < 1 || !alphabet.contains(static_cast<Letter>(index)))
            throw ParseError("unknown letter Y" + std::to_string(index), index_pos);
        letter = static_cast<Letter>(index);
    } else {
        cur.expect('X');
    }
    int power = 1;
    if (cur.consume('^'))
        power = cur.small_integer();
    return {letter, power};
}

/// Letter tokens until something that cannot continue a word. Returns at
/// least one token's worth of letters or fails.
Word parse_word_body(Cursor &cur, const Alphabet &alphabet) {
    std::vector<Letter> letters;
    cur.skip_ws();
    if (!at_letter(cur))
        cur.fail("expected a word");
    while (at_letter(cur)) {
        const auto [letter, power] = parse_letter_token(cur, alphabet);
        letters.insert(letters.end(), static_cast<std::size_t>(power), letter);
        cur.skip_ws();
    }
    return Word(std::move(letters));
}

} // namespace

std::string format_rational(const Rational &r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

Rational parse_rational(std::string_view text) {
    Cursor cur{text};
    const Rational r = parse_rational_body(cur);
    cur.expect_end();
    return r;
}

std::string letter_name(Letter l, const Alphabet &alphabet) {
    if (l == letter_x)
        return "X";
    if (alphabet.y_count() == 1)
        return "Y";
    return "Y" + std::to_string(static_cast<int>(l));
}

std::string format_word(const Word &w, const Alphabet &alphabet) {
    if (w.empty())
        return "1";
    std::string s;
    for (Letter l : w)
        s += letter_name(l, alphabet);
    return s;
}

Word parse_word(std::string_view text, const Alphabet &alphabet) {
    Cursor cur{text};
    cur.skip_ws();
    if (cur.consume('1')) {
        cur.expect_end();
        return Word{};
    }
    const Word w = parse_word_body(cur, alphabet);
    cur.expect_end();
    return w;
}

std::string format_index(const MultiIndex &k, const Alphabet &alphabet) {
    std::string s = "(";
    for (int i = 0; i < k.depth(); ++i) {
        if (i > 0)
            s += ",";
        s += std::to_string(k.body()[i]);
        if (alphabet.y_count() > 1)
            s += ":" + std::to_string(k.labels()[i]);
    }
    s += ";" + std::to_string(k.tail()) + ")";
    return s;
}

MultiIndex parse_index(std::string_view text, const Alphabet &alphabet) {
    Cursor cur{text};
    cur.skip_ws();
    cur.expect('(');
    std::vector<int> body;
    std::vector<int> labels;
    cur.skip_ws();
    if (!cur.consume(';')) {
        while (true) {
            cur.skip_ws();
            body.push_back(cur.small_integer());
            cur.skip_ws();
            int label = 1;
            if (cur.consume(':')) {
                cur.skip_ws();
                const std::size_t label_pos = cur.pos;
                label = cur.small_integer();
                if (label < 1 || !alphabet.contains(static_cast<Letter>(label)))
                    throw ParseError("label outside alphabet", label_pos);
                cur.skip_ws();
            }
            labels.push_back(label);
            if (cur.consume(','))
                continue;
            cur.expect(';');
            break;
        }
    }
    cur.skip_ws();
    const int tail = cur.small_integer();
    cur.skip_ws();
    cur.expect(')');
    cur.expect_end();
    return MultiIndex(std::move(body), std::move(labels), tail);
}

std::string format_poly(const Polynomial &p) {
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &[w, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (w.empty())
            s += format_rational(magnitude);
        else if (magnitude == 1)
            s += format_word(w, p.alphabet());
        else
            s += format_rational(magnitude) + "*" + format_word(w, p.alphabet());
        first = false;
    }
    return s;
}

Polynomial parse_poly(std::string_view text, const Alphabet &alphabet) {
    Cursor cur{text};
    Polynomial p(alphabet);
    cur.skip_ws();
    if (cur.done())
        cur.fail("empty polynomial");
    bool negative = cur.consume('-');
    while (true) {
        cur.skip_ws();
        Rational coeff = 1;
        Word word;
        if (cur.at_digit()) {
            coeff = parse_rational_body(cur);
            cur.skip_ws();
            if (cur.consume('*'))
                word = parse_word_body(cur, alphabet);
        } else if (at_letter(cur)) {
            word = parse_word_body(cur, alphabet);
        } else {
            cur.fail("expected a term");
        }
        p.add_term(word, negative ? -coeff : coeff);
        cur.skip_ws();
        if (cur.done())
            break;
        if (cur.consume('-'))
            negative = true;
        else if (cur.consume('+'))
            negative = false;
        else
            cur.fail("expected '+' or '-'");
    }
    return p;
}

} // namespace demishuffle
