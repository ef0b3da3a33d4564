#include <doctest.h>

#include "demishuffle/json_io.hpp"
#include "support.hpp"

using namespace demishuffle;
using namespace demishuffle::testing;

TEST_CASE("rational text form") {
    CHECK(format_rational(Rational(1, 2)) == "1/2");
    CHECK(format_rational(Rational(-3)) == "-3");
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("word text form") {
    CHECK(parse_word("XXY", two_letters) == w("XXY"));
    CHECK(parse_word("X^2 Y", two_letters) == w("XXY"));
    CHECK(parse_word("1", two_letters) == Word{});
    CHECK(format_word(Word{}, two_letters) == "1");
    CHECK(format_word(w("XXY"), two_letters) == "XXY");

    const Alphabet two{2};
    CHECK(parse_word("X Y2 X", two) == Word({letter_x, y_letter(2), letter_x}));
    CHECK(format_word(Word({letter_x, y_letter(2)}), two) == "XY2");
    CHECK(parse_word("Y1Y2", two) == Word({y_letter(1), y_letter(2)}));

    CHECK_THROWS_AS(parse_word("Y2", two_letters), ParseError);
    CHECK_THROWS_AS(parse_word("XZ", two_letters), ParseError);
    CHECK_THROWS_AS(parse_word("", two_letters), ParseError);
}

TEST_CASE("multi-index text form") {
    CHECK(parse_index("(1,0;2)", two_letters) == MultiIndex({1, 0}, 2));
    CHECK(parse_index("(;5)", two_letters) == MultiIndex({}, 5));
    CHECK(parse_index(" ( 1 , 1 ; 0 ) ", two_letters) == MultiIndex({1, 1}, 0));
    CHECK(format_index(MultiIndex({1, 0}, 2), two_letters) == "(1,0;2)");
    CHECK(format_index(MultiIndex{}, two_letters) == "(;0)");

    const Alphabet two{2};
    CHECK(parse_index("(1:2,1:1;0)", two) == MultiIndex({1, 1}, {2, 1}, 0));
    CHECK(format_index(MultiIndex({1, 1}, {2, 1}, 0), two) == "(1:2,1:1;0)");

    CHECK_THROWS_AS(parse_index("(1,0)", two_letters), ParseError);
    CHECK_THROWS_AS(parse_index("(1:3;0)", two), ParseError);
    CHECK_THROWS_AS(parse_index("(1;0) junk", two_letters), ParseError);
}

TEST_CASE("polynomial parsing examples") {
    CHECK(p("2*XXY - XYX") == Polynomial::monomial(two_letters, w("XXY"), 2) +
                                  Polynomial::monomial(two_letters, w("XYX"), -1));
    CHECK(p("X^2 Y") == mono(w("XXY")));
    CHECK(p("1 + X") == Polynomial::unit(two_letters) + mono(w("X")));
    CHECK(p("-1/2*YX") == Polynomial::monomial(two_letters, w("YX"), Rational(-1, 2)));
    CHECK(p("X - X").is_zero());
}

TEST_CASE("polynomial syntax errors carry positions") {
    CHECK_THROWS_AS(p("X + "), ParseError);
    try {
        p("X + ");
    } catch (const ParseError &e) {
        CHECK(e.position() == 4);
    }
    try {
        p("2*XXY - XY$");
    } catch (const ParseError &e) {
        CHECK(e.position() == 10);
    }
    CHECK_THROWS_AS(p(""), ParseError);
    CHECK_THROWS_AS(p("2 XY"), ParseError);
}

TEST_CASE("polynomial formatting") {
    CHECK(format_poly(p("XYXY + 2*XXYY")) == "2*XXYY + XYXY");
    CHECK(format_poly(Polynomial::zero(two_letters)) == "0");
    CHECK(format_poly(p("-YX")) == "-YX");
    CHECK(format_poly(p("1 - 1/2*X")) == "1 - 1/2*X");
    CHECK(format_poly(p("Y - 3*X")) == "-3*X + Y");
}

TEST_CASE("format then parse is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial u = random_rational_poly(rng, 6, 7);
        CHECK(parse_poly(format_poly(u), two_letters) == u);
    }
    const Alphabet two{2};
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial u = random_rational_poly(rng, 5, 6, two);
        CHECK(parse_poly(format_poly(u), two) == u);
    }
}

TEST_CASE("polynomial JSON round trip and shape") {
    const Polynomial u = p("1/2*XY - YX + 3");
    const nlohmann::json j = to_json(u);
    CHECK(j.at("alphabet") == 1);
    CHECK(j.at("cutoff").is_null());
    CHECK(j.at("terms").size() == 3);
    CHECK(j.at("terms")[0].at("word") == "1"); // canonical order: shortest first
    CHECK(polynomial_from_json(j) == u);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial v = random_rational_poly(rng, 5, 6);
        CHECK(polynomial_from_json(to_json(v)) == v);
    }
}

TEST_CASE("series JSON round trip") {
    const TruncatedSeries s = TruncatedSeries::truncate(p("1 + X + 1/2*XX"), 2);
    const nlohmann::json j = to_json(s);
    CHECK(j.at("cutoff") == 2);
    CHECK(series_from_json(j) == s);
}

TEST_CASE("grouplike spec JSON") {
    const nlohmann::json j = {
        {"cutoff", 4},
        {"factors",
         {{{"letter", "X"}, {"scalar", "1"}}, {{"letter", "Y"}, {"scalar", "-2/3"}}}}};
    const GrouplikeSpec spec = spec_from_json(j);
    CHECK(spec.cutoff == 4);
    CHECK(spec.alphabet == two_letters);
    CHECK(spec.factors.size() == 2);
    CHECK(spec.factors[1].scalar == Rational(-2, 3));
    CHECK(spec_from_json(to_json(spec)) == spec);

    const nlohmann::json labeled = {
        {"cutoff", 3}, {"factors", {{{"letter", "Y2"}, {"scalar", "1"}}}}};
    CHECK(spec_from_json(labeled).alphabet == Alphabet{2});
}

TEST_CASE("reconstruction report JSON") {
    const ReconstructionReport report = verify_reconstruction(grouplike_from_spec(exp_x_exp_y(4)));
    const nlohmann::json j = to_json(report, two_letters);
    CHECK(j.at("checked") == 31);
    CHECK(j.at("mismatches").empty());
}
