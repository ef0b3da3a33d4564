#include "demishuffle/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "demishuffle/text.hpp"

namespace demishuffle {

namespace {

nlohmann::json terms_to_json(const std::map<Word, Rational> &terms, const Alphabet &alphabet) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[w, c] : terms)
        out.push_back({{"word", format_word(w, alphabet)}, {"coeff", format_rational(c)}});
    return out;
}

Alphabet alphabet_from_json(const nlohmann::json &j) {
    return Alphabet(j.at("alphabet").get<int>());
}

} // namespace

nlohmann::json to_json(const Polynomial &p) {
    return {{"alphabet", p.alphabet().y_count()},
            {"cutoff", nullptr},
            {"terms", terms_to_json(p.terms(), p.alphabet())}};
}

Polynomial polynomial_from_json(const nlohmann::json &j) {
    const Alphabet alphabet = alphabet_from_json(j);
    Polynomial p(alphabet);
    for (const auto &term : j.at("terms")) {
        p.add_term(parse_word(term.at("word").get<std::string>(), alphabet),
                   parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

nlohmann::json to_json(const TruncatedSeries &s) {
    return {{"alphabet", s.alphabet().y_count()},
            {"cutoff", s.cutoff()},
            {"terms", terms_to_json(s.terms(), s.alphabet())}};
}

TruncatedSeries series_from_json(const nlohmann::json &j) {
    const Alphabet alphabet = alphabet_from_json(j);
    TruncatedSeries s(alphabet, j.at("cutoff").get<int>());
    for (const auto &term : j.at("terms")) {
        s.add_term(parse_word(term.at("word").get<std::string>(), alphabet),
                   parse_rational(term.at("coeff").get<std::string>()));
    }
    return s;
}

namespace {

Letter letter_from_name(const std::string &name) {
    if (name == "X")
        return letter_x;
    if (name == "Y")
        return y_letter(1);
    if (name.size() >= 2 && name[0] == 'Y') {
        int index = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw std::invalid_argument("bad letter name: " + name);
            index = index * 10 + (name[i] - '0');
        }
        if (index >= 1)
            return y_letter(index);
    }
    throw std::invalid_argument("bad letter name: " + name);
}

} // namespace

nlohmann::json to_json(const GrouplikeSpec &spec) {
    nlohmann::json factors = nlohmann::json::array();
    for (const GrouplikeFactor &f : spec.factors)
        factors.push_back({{"letter", letter_name(f.letter, spec.alphabet)},
                           {"scalar", format_rational(f.scalar)}});
    return {{"cutoff", spec.cutoff}, {"factors", factors}};
}

GrouplikeSpec spec_from_json(const nlohmann::json &j) {
    GrouplikeSpec spec;
    spec.cutoff = j.at("cutoff").get<int>();
    int max_y = 1;
    for (const auto &factor : j.at("factors")) {
        const Letter letter = letter_from_name(factor.at("letter").get<std::string>());
        spec.factors.push_back({letter, parse_rational(factor.at("scalar").get<std::string>())});
        max_y = std::max(max_y, static_cast<int>(letter));
    }
    // the alphabet may be given explicitly; otherwise the factors determine it
    spec.alphabet = Alphabet(j.contains("alphabet") ? j.at("alphabet").get<int>() : max_y);
    return spec;
}

nlohmann::json to_json(const ReconstructionReport &report, const Alphabet &alphabet) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const ReconstructionMismatch &m : report.mismatches)
        mismatches.push_back({{"index", format_index(m.index, alphabet)},
                              {"direct", format_rational(m.direct)},
                              {"reconstructed", format_rational(m.reconstructed)}});
    return {{"checked", report.checked}, {"mismatches", mismatches}};
}

} // namespace demishuffle
