#include <doctest.h>

#include "support.hpp"

using namespace demishuffle;
using namespace demishuffle::testing;

TEST_CASE("grouplike_from_spec examples") {
    CHECK(grouplike_from_spec({two_letters, 5, {}}) == TruncatedSeries::one(two_letters, 5));

    const TruncatedSeries exp_x = grouplike_from_spec({two_letters, 2, {{letter_x, 1}}});
    CHECK(exp_x == TruncatedSeries::truncate(p("1 + X + 1/2*XX"), 2));

    const TruncatedSeries product = grouplike_from_spec(exp_x_exp_y(2));
    CHECK(product ==
          TruncatedSeries::truncate(p("1 + X + Y + 1/2*XX + XY + 1/2*YY"), 2));

    CHECK_THROWS_AS(grouplike_from_spec({two_letters, 2, {{y_letter(2), 1}}}),
                    std::invalid_argument);
}

TEST_CASE("Ree criterion accepts exponential products") {
    CHECK(is_grouplike(grouplike_from_spec(exp_x_exp_y(6))).grouplike);
    CHECK(is_grouplike(TruncatedSeries::one(two_letters, 4)).grouplike);
}

TEST_CASE("Ree criterion rejects 1 + X + Y with the first canonical witness") {
    const GrouplikeCheck check = is_grouplike(TruncatedSeries::truncate(p("1 + X + Y"), 2));
    CHECK_FALSE(check.grouplike);
    REQUIRE(check.witness.has_value());
    // (X, X) precedes (X, Y) canonically, and already violates:
    // <X sha X, J> = 2 c_XX = 0 while c_X^2 = 1.
    CHECK(check.witness->left == w("X"));
    CHECK(check.witness->right == w("X"));
    CHECK(check.witness->shuffle_pairing == 0);
    CHECK(check.witness->coefficient_product == 1);
    // the pair (X, Y) named in the examples is violated as well
    const Polynomial j = p("1 + X + Y");
    CHECK(pairing(shuffle_mul(p("X"), p("Y")), j) == 0);
    CHECK(j.coefficient(w("X")) * j.coefficient(w("Y")) == 1);
}

TEST_CASE("Ree criterion rejects a wrong constant term") {
    const GrouplikeCheck check = is_grouplike(TruncatedSeries::truncate(p("2 + X"), 2));
    CHECK_FALSE(check.grouplike);
    CHECK_FALSE(check.witness.has_value());
}

TEST_CASE("perturbing a group-like series breaks a shuffle relation") {
    TruncatedSeries j = grouplike_from_spec(exp_x_exp_y(6));
    j.add_term(w("XYX"), 1);
    const GrouplikeCheck check = is_grouplike(j);
    CHECK_FALSE(check.grouplike);
    CHECK(check.witness.has_value());
}

TEST_CASE("regular coefficients of exp(X) exp(Y)") {
    const RegularCoefficients regulars =
        regular_coefficients(grouplike_from_spec(exp_x_exp_y(5)));
    CHECK(regulars.c_x == 1);
    CHECK(regulars.by_index.at(idx("(1;0)")) == 1);          // XY
    CHECK(regulars.by_index.at(idx("(2;0)")) == Rational(1, 2)); // XXY
    CHECK(regulars.by_index.at(idx("(0;0)")) == 1);          // Y
    // the unit index stays implicit; everything stored is tail-free
    CHECK_FALSE(regulars.by_index.contains(idx("(;0)")));
    for (const auto &[k, c] : regulars.by_index) {
        CHECK(k.tail() == 0);
        CHECK(k.depth() >= 1);
    }
}

TEST_CASE("regular coefficients of the constant series") {
    const RegularCoefficients regulars =
        regular_coefficients(TruncatedSeries::one(two_letters, 4));
    CHECK(regulars.by_index.empty());
    CHECK(regulars.c_x == 0);
}

TEST_CASE("reconstruction of depth-0 coefficients is a pure exponential") {
    const GrouplikeSpec spec{two_letters, 6, {{letter_x, Rational(2, 3)}, {y_letter(1), 1}}};
    const TruncatedSeries j = grouplike_from_spec(spec);
    const RegularCoefficients regulars = regular_coefficients(j);
    for (int n = 0; n <= 6; ++n) {
        const Rational expected =
            rational_pow(Rational(2, 3), n) / Rational(factorial(n));
        CHECK(reconstruct_coefficient(regulars, MultiIndex({}, n)) == expected);
        CHECK(j.coefficient(Word::x_power(n)) == expected);
    }
}

TEST_CASE("reconstruction matches the printed degree-raising examples") {
    const TruncatedSeries j = grouplike_from_spec(exp_x_exp_y(6));
    const RegularCoefficients regulars = regular_coefficients(j);
    // c_YX = c_X c_Y - c_XY = 1 - 1 = 0
    CHECK(reconstruct_coefficient(regulars, idx("(0;1)")) == 0);
    CHECK(j.coefficient(w("YX")) == 0);
    // c_XYX = C(1,1) c_(1;0) - C(2,1) c_(2;0) = 1 - 2/2 = 0
    CHECK(reconstruct_coefficient(regulars, idx("(1;1)")) == 0);
    CHECK(j.coefficient(w("XYX")) == 0);
}

TEST_CASE("a regular coefficient beyond the cutoff cannot be trusted as zero") {
    const RegularCoefficients regulars =
        regular_coefficients(grouplike_from_spec(exp_x_exp_y(2)));
    // reconstructing c_(0;2) needs c_(2;0), whose word XXY has length 3 > 2
    CHECK_THROWS_AS(reconstruct_coefficient(regulars, idx("(0;2)")), std::invalid_argument);
}

TEST_CASE("verify_reconstruction on paper examples") {
    CHECK(verify_reconstruction(grouplike_from_spec(exp_x_exp_y(6))).passed());

    const GrouplikeSpec conjugated{
        two_letters, 6, {{letter_x, 2}, {y_letter(1), 1}, {letter_x, -1}}};
    const ReconstructionReport report = verify_reconstruction(grouplike_from_spec(conjugated));
    CHECK(report.passed());
    CHECK(report.checked == 127); // all indices of word length <= 6

    CHECK_THROWS_AS(verify_reconstruction(TruncatedSeries::truncate(p("1 + X + Y"), 2)),
                    std::invalid_argument);
}

TEST_CASE("verify_reconstruction on random exponential products") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const GrouplikeSpec spec = random_spec(rng, trial, 6);
        const TruncatedSeries j = grouplike_from_spec(spec);
        CHECK(is_grouplike(j).grouplike);
        CHECK(verify_reconstruction(j).passed());
    }
}

namespace {

Rational coeff(const TruncatedSeries &j, std::string_view word) {
    return j.coefficient(w(word));
}

} // namespace

TEST_CASE("printed degree <= 4 coefficient identities") {
    std::mt19937 rng(47);
    std::vector<TruncatedSeries> suite;
    suite.push_back(grouplike_from_spec(exp_x_exp_y(4)));
    for (int trial = 0; trial < 8; ++trial)
        suite.push_back(grouplike_from_spec(random_spec(rng, trial, 4)));
    for (const TruncatedSeries &j : suite) {
        const Rational cx = coeff(j, "X"), cy = coeff(j, "Y"), cxy = coeff(j, "XY");
        const Rational cxxy = coeff(j, "XXY"), cxyy = coeff(j, "XYY");
        const Rational cxxyy = coeff(j, "XXYY");
        CHECK(coeff(j, "YX") == cx * cy - cxy);
        CHECK(coeff(j, "XYX") == cx * cxy - 2 * cxxy);
        CHECK(coeff(j, "YXYX") ==
              cx * cxy * cy - 2 * cx * cxyy - 2 * cxxy * cy + cxy * cxy / 2 + 2 * cxxyy);
        CHECK(coeff(j, "XYXY") == cxy * cxy / 2 - 2 * cxxyy);
    }
}

TEST_CASE("specialization at Y = 0 is exp(c_X X)") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        const TruncatedSeries j = grouplike_from_spec(random_spec(rng, trial, 6));
        const Rational cx = j.coefficient(w("X"));
        for (int t = 0; t <= 6; ++t)
            CHECK(j.coefficient(Word::x_power(t)) == rational_pow(cx, t) / Rational(factorial(t)));
    }
}

TEST_CASE("lemma 4.2 oracle") {
    const std::vector<int> kappa1{1}, shift1{1};
    CHECK(lemma42_check(kappa1, shift1));
    // the single surviving term is <M^(2;0), XYX> = -2
    CHECK(pairing(magnus_poly(idx("(2;0)"), two_letters), p("XYX")) == -2);

    const std::vector<int> kappa2{2, 0, 1}, zero3{0, 0, 0};
    CHECK(lemma42_check(kappa2, zero3));

    const std::vector<int> kappa3{0, 1}, shift3{1, 0};
    CHECK(lemma42_check(kappa3, shift3));

    const std::vector<int> neg{-1};
    CHECK_THROWS_AS(lemma42_check(kappa1, neg), std::invalid_argument);
    const std::vector<int> kappa0{0}, down{-1};
    CHECK_THROWS_AS(lemma42_check(kappa0, down), std::invalid_argument);
    const std::vector<int> mismatched{1, 2};
    CHECK_THROWS_AS(lemma42_check(kappa1, mismatched), std::invalid_argument);
}

TEST_CASE("note 4.3 identity oracle") {
    const std::vector<int> kappa1{1}, shift1{1};
    CHECK(note43_identity_check(kappa1, shift1));
    // its right side: -<XY sha X, XXY> = -2
    const auto shuffled = shuffle_words(w("XY"), w("X"));
    CHECK(shuffled.at(w("XXY")) == 2);

    const std::vector<int> kappa2{1, 1}, shift2{0, 1};
    CHECK(note43_identity_check(kappa2, shift2));

    const std::vector<int> kappa3{2}, zero1{0};
    CHECK(note43_identity_check(kappa3, zero1));
}

TEST_CASE("lemma 4.2 and note 4.3 small exhaustive sweep") {
    // depth <= 2 here; the acceptance suite runs the full depth <= 3 sweep
    for (int d = 0; d <= 2; ++d) {
        std::vector<int> kappa(static_cast<std::size_t>(d));
        std::vector<int> shifts(static_cast<std::size_t>(d));
        auto sweep = [&](auto &&self, int slot) -> void {
            if (slot == 2 * d) {
                int total = 0;
                for (int i = 0; i < d; ++i) {
                    total += shifts[static_cast<std::size_t>(i)];
                    if (kappa[static_cast<std::size_t>(i)] + shifts[static_cast<std::size_t>(i)] < 0)
                        return;
                }
                if (total < 0)
                    return;
                CHECK(lemma42_check(kappa, shifts));
                CHECK(note43_identity_check(kappa, shifts));
                return;
            }
            if (slot < d) {
                for (int v = 0; v <= 2; ++v) {
                    kappa[static_cast<std::size_t>(slot)] = v;
                    self(self, slot + 1);
                }
            } else {
                for (int v = -2; v <= 2; ++v) {
                    shifts[static_cast<std::size_t>(slot - d)] = v;
                    self(self, slot + 1);
                }
            }
        };
        sweep(sweep, 0);
    }
}
