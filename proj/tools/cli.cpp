#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "demishuffle/bases.hpp"
#include "demishuffle/grouplike.hpp"
#include "demishuffle/json_io.hpp"
#include "demishuffle/text.hpp"

namespace demishuffle::cli {

namespace {

constexpr int cutoff_ceiling = 16;

struct GlobalOptions {
    int y_count = 1;
    bool json = false;
    bool unsafe_cutoff = false;

    Alphabet alphabet() const { return Alphabet(y_count); }

    void check_cutoff(int value, const std::string &name) const {
        if (value > cutoff_ceiling && !unsafe_cutoff)
            throw CLI::ValidationError(name + " exceeds the ceiling of " +
                                       std::to_string(cutoff_ceiling) +
                                       " (pass --unsafe-cutoff to override)");
    }
};

nlohmann::json spec_file_json(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("cannot open spec file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void print_json(std::ostream &out, const nlohmann::json &j) { out << j.dump(2) << "\n"; }

int cmd_expand(const GlobalOptions &global, const std::string &poly_text,
               const std::string &basis, std::ostream &out) {
    const Alphabet alphabet = global.alphabet();
    const Polynomial u = parse_poly(poly_text, alphabet);
    const BasisExpansion expansion =
        basis == "magnus" ? expand_magnus(u) : expand_demishuffle(u);
    if (global.json) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto &[k, c] : expansion.coefficients())
            coeffs.push_back({{"index", format_index(k, alphabet)},
                              {"coeff", format_rational(c)}});
        print_json(out, {{"basis", basis}, {"alphabet", alphabet.y_count()},
                         {"coefficients", coeffs}});
        return exit_success;
    }
    if (expansion.coefficients().empty()) {
        out << "0\n";
        return exit_success;
    }
    for (const auto &[k, c] : expansion.coefficients())
        out << format_index(k, alphabet) << ": " << format_rational(c) << "\n";
    return exit_success;
}

int cmd_pair(const GlobalOptions &global, const std::string &left, const std::string &right,
             std::ostream &out) {
    const Alphabet alphabet = global.alphabet();
    const Rational value = pairing(parse_poly(left, alphabet), parse_poly(right, alphabet));
    if (global.json)
        print_json(out, {{"pairing", format_rational(value)}});
    else
        out << format_rational(value) << "\n";
    return exit_success;
}

int cmd_shuffle(const GlobalOptions &global, const std::string &left, const std::string &right,
                std::optional<int> cutoff, std::ostream &out) {
    const Alphabet alphabet = global.alphabet();
    const Polynomial result =
        shuffle_mul(parse_poly(left, alphabet), parse_poly(right, alphabet), cutoff);
    if (global.json)
        print_json(out, to_json(result));
    else
        out << format_poly(result) << "\n";
    return exit_success;
}

int cmd_basis(const GlobalOptions &global, const std::string &kind,
              const std::string &index_text, std::ostream &out) {
    const Alphabet alphabet = global.alphabet();
    const MultiIndex k = parse_index(index_text, alphabet);
    Polynomial result(alphabet);
    if (kind == "magnus")
        result = magnus_poly(k, alphabet);
    else if (kind == "magnus-closed")
        result = magnus_poly_closed(k, alphabet);
    else if (kind == "demishuffle")
        result = demi_shuffle_poly(k, alphabet);
    else
        result = demi_shuffle_poly_closed(k, alphabet);
    if (global.json)
        print_json(out, to_json(result));
    else
        out << format_poly(result) << "\n";
    return exit_success;
}

int cmd_grouplike_check(const GlobalOptions &global, const std::string &spec_path,
                        const std::string &poly_text, int cutoff, std::ostream &out) {
    TruncatedSeries series{global.alphabet(), 0};
    if (!spec_path.empty()) {
        series = grouplike_from_spec(spec_from_json(spec_file_json(spec_path)));
    } else {
        global.check_cutoff(cutoff, "--cutoff");
        series = TruncatedSeries::truncate(parse_poly(poly_text, global.alphabet()), cutoff);
    }
    const GrouplikeCheck check = is_grouplike(series);
    const Alphabet alphabet = series.alphabet();
    if (global.json) {
        nlohmann::json j{{"grouplike", check.grouplike}, {"witness", nullptr}};
        if (check.witness)
            j["witness"] = {{"left", format_word(check.witness->left, alphabet)},
                            {"right", format_word(check.witness->right, alphabet)},
                            {"shuffle_pairing", format_rational(check.witness->shuffle_pairing)},
                            {"coefficient_product",
                             format_rational(check.witness->coefficient_product)}};
        print_json(out, j);
    } else if (check.grouplike) {
        out << "group-like: yes\n";
    } else {
        out << "group-like: no\n";
        if (check.witness)
            out << "witness: (" << format_word(check.witness->left, alphabet) << ", "
                << format_word(check.witness->right, alphabet)
                << ") shuffle-pairing " << format_rational(check.witness->shuffle_pairing)
                << " != coefficient-product "
                << format_rational(check.witness->coefficient_product) << "\n";
        else
            out << "witness: constant term is not 1\n";
    }
    return check.grouplike ? exit_success : exit_verification_failure;
}

int cmd_reconstruct(const GlobalOptions &global, const std::string &spec_path,
                    const std::string &index_text, std::ostream &out) {
    const GrouplikeSpec spec = spec_from_json(spec_file_json(spec_path));
    const TruncatedSeries series = grouplike_from_spec(spec);
    const RegularCoefficients regulars = regular_coefficients(series);
    const MultiIndex k = parse_index(index_text, spec.alphabet);
    const Rational value = reconstruct_coefficient(regulars, k);
    if (global.json)
        print_json(out, {{"index", format_index(k, spec.alphabet)},
                         {"coeff", format_rational(value)}});
    else
        out << format_rational(value) << "\n";
    return exit_success;
}

int cmd_verify_duality(const GlobalOptions &global, int max_len, std::ostream &out) {
    global.check_cutoff(max_len, "--max-len");
    const Alphabet alphabet = global.alphabet();
    const std::vector<MultiIndex> indices = indices_up_to_length(max_len, alphabet);
    std::vector<Polynomial> demi, magnus;
    demi.reserve(indices.size());
    magnus.reserve(indices.size());
    for (const MultiIndex &k : indices) {
        demi.push_back(demi_shuffle_poly(k, alphabet));
        magnus.push_back(magnus_poly(k, alphabet));
    }
    std::int64_t checked = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j < indices.size(); ++j) {
            const Rational value = pairing(demi[i], magnus[j]);
            const Rational expected = i == j ? 1 : 0;
            ++checked;
            if (value != expected)
                failures.push_back({{"s_index", format_index(indices[i], alphabet)},
                                    {"m_index", format_index(indices[j], alphabet)},
                                    {"pairing", format_rational(value)}});
        }
    }
    if (global.json)
        print_json(out, {{"checked", checked}, {"failures", failures}});
    else
        out << "checked: " << checked << ", failures: " << failures.size() << "\n";
    return failures.empty() ? exit_success : exit_verification_failure;
}

std::vector<GrouplikeSpec> random_specs(const Alphabet &alphabet, int count, int cutoff,
                                        unsigned seed) {
    std::mt19937 rng(seed);
    // plain modulo keeps the stream identical across standard libraries
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    std::vector<GrouplikeSpec> specs;
    for (int i = 0; i < count; ++i) {
        GrouplikeSpec spec{alphabet, cutoff, {}};
        const int factor_count = 1 + pick(4);
        for (int f = 0; f < factor_count; ++f) {
            const Letter letter = static_cast<Letter>(pick(alphabet.y_count() + 1));
            const int numerator = 1 + pick(3);
            const Rational scalar =
                Rational(pick(2) ? -numerator : numerator, 1 + pick(3));
            spec.factors.push_back({letter, scalar});
        }
        if (i % 4 == 3) {
            // force c_X = 0: cancel the accumulated X scalar
            Rational x_total = 0;
            for (const GrouplikeFactor &f : spec.factors)
                if (f.letter == letter_x)
                    x_total += f.scalar;
            if (x_total != 0)
                spec.factors.push_back({letter_x, -x_total});
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

int cmd_verify_theorem41(const GlobalOptions &global, const std::string &spec_path,
                         int random_count, int cutoff, unsigned seed, std::ostream &out) {
    global.check_cutoff(cutoff, "--cutoff");
    std::vector<GrouplikeSpec> specs;
    if (!spec_path.empty())
        specs.push_back(spec_from_json(spec_file_json(spec_path)));
    else
        specs = random_specs(global.alphabet(), random_count, cutoff, seed);
    std::int64_t checked = 0, failures = 0;
    nlohmann::json reports = nlohmann::json::array();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const ReconstructionReport report = verify_reconstruction(grouplike_from_spec(specs[i]));
        checked += report.checked;
        failures += static_cast<std::int64_t>(report.mismatches.size());
        if (global.json)
            reports.push_back(to_json(report, specs[i].alphabet));
        else
            out << "spec " << i + 1 << ": checked " << report.checked << ", mismatches "
                << report.mismatches.size() << "\n";
    }
    if (global.json)
        print_json(out, {{"checked", checked}, {"failures", failures}, {"reports", reports}});
    else
        out << "checked: " << checked << ", failures: " << failures << "\n";
    return failures == 0 ? exit_success : exit_verification_failure;
}

int cmd_verify_lemma42(int max_depth, int max_entry, int max_shift, bool json,
                       std::ostream &out) {
    std::int64_t checked = 0, failures = 0;
    std::vector<int> kappa, shifts;
    auto sweep_shifts = [&](auto &&self, int slot, int depth) -> void {
        if (slot == depth) {
            int total = 0;
            bool valid = true;
            for (int i = 0; i < depth; ++i) {
                total += shifts[static_cast<std::size_t>(i)];
                valid = valid &&
                        kappa[static_cast<std::size_t>(i)] + shifts[static_cast<std::size_t>(i)] >= 0;
            }
            if (total < 0 || !valid)
                return;
            ++checked;
            if (!lemma42_check(kappa, shifts) || !note43_identity_check(kappa, shifts))
                ++failures;
            return;
        }
        for (int v = -max_shift; v <= max_shift; ++v) {
            shifts[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, depth);
        }
    };
    auto sweep_kappa = [&](auto &&self, int slot, int depth) -> void {
        if (slot == depth) {
            sweep_shifts(sweep_shifts, 0, depth);
            return;
        }
        for (int v = 0; v <= max_entry; ++v) {
            kappa[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, depth);
        }
    };
    for (int depth = 0; depth <= max_depth; ++depth) {
        kappa.assign(static_cast<std::size_t>(depth), 0);
        shifts.assign(static_cast<std::size_t>(depth), 0);
        sweep_kappa(sweep_kappa, 0, depth);
    }
    if (json)
        print_json(out, {{"checked", checked}, {"failures", failures}});
    else
        out << "checked: " << checked << ", failures: " << failures << "\n";
    return failures == 0 ? exit_success : exit_verification_failure;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Magnus and demi-shuffle dual bases of the free associative algebra"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--y-count", global.y_count, "number of Y letters in the alphabet")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--json", global.json, "emit JSON instead of plain text");
    app.add_flag("--unsafe-cutoff", global.unsafe_cutoff,
                 "allow cutoffs beyond the combinatorial-growth ceiling of 16");

    std::string poly_text, poly_left, poly_right, basis, kind, index_text, spec_path;

    auto *expand = app.add_subcommand("expand", "expand a polynomial in a dual basis");
    expand->add_option("poly", poly_text, "polynomial, e.g. \"2*XXY - XYX\"")->required();
    expand->add_option("--basis", basis, "target basis")
        ->required()
        ->check(CLI::IsMember({"magnus", "demishuffle"}));

    auto *pair_cmd = app.add_subcommand("pair", "standard pairing of two polynomials");
    pair_cmd->add_option("left", poly_left)->required();
    pair_cmd->add_option("right", poly_right)->required();

    int shuffle_cutoff = -1;
    auto *shuffle = app.add_subcommand("shuffle", "shuffle product of two polynomials");
    shuffle->add_option("left", poly_left)->required();
    shuffle->add_option("right", poly_right)->required();
    shuffle->add_option("--cutoff", shuffle_cutoff, "drop words longer than this")
        ->check(CLI::NonNegativeNumber);

    auto *basis_cmd = app.add_subcommand("basis", "print a basis polynomial for an index");
    basis_cmd->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"magnus", "magnus-closed", "demishuffle", "demishuffle-closed"}));
    basis_cmd->add_option("index", index_text, "multi-index, e.g. \"(1,1;0)\"")->required();

    int series_cutoff = 8;
    auto *grouplike = app.add_subcommand("grouplike-check", "Ree-criterion check of a series");
    grouplike->add_option("poly", poly_text, "series given as a polynomial");
    grouplike->add_option("--spec", spec_path, "JSON spec of an exponential product");
    grouplike->add_option("--cutoff", series_cutoff, "truncation degree for a polynomial input")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    auto *reconstruct = app.add_subcommand(
        "reconstruct", "reconstruct one coefficient from the regular coefficients");
    reconstruct->add_option("--spec", spec_path, "JSON spec of an exponential product")
        ->required();
    reconstruct->add_option("--index", index_text, "multi-index of the coefficient")->required();

    int max_len = 7;
    auto *duality = app.add_subcommand("verify-duality",
                                       "exhaustive pairing sweep of the two bases");
    duality->add_option("--max-len", max_len, "max word length of the swept indices")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    int random_count = 20;
    unsigned seed = 1;
    auto *theorem41 = app.add_subcommand(
        "verify-theorem41", "coefficient reconstruction on group-like series");
    theorem41->add_option("--spec", spec_path, "JSON spec of an exponential product");
    theorem41->add_option("--random", random_count, "number of random specs")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    theorem41->add_option("--cutoff", series_cutoff, "truncation degree of random specs")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    theorem41->add_option("--seed", seed, "random seed")->capture_default_str();

    int max_depth = 3, max_entry = 3, max_shift = 3;
    auto *lemma42 = app.add_subcommand("verify-lemma42",
                                       "convolution and shuffle-pairing identity sweep");
    lemma42->add_option("--max-depth", max_depth)->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    lemma42->add_option("--max-entry", max_entry)->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    lemma42->add_option("--max-shift", max_shift)->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    std::vector<const char *> argv;
    argv.push_back("demishuffle");
    for (const std::string &a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (app.got_subcommand(expand))
            return cmd_expand(global, poly_text, basis, out);
        if (app.got_subcommand(pair_cmd))
            return cmd_pair(global, poly_left, poly_right, out);
        if (app.got_subcommand(shuffle)) {
            std::optional<int> cutoff;
            if (shuffle->count("--cutoff")) {
                global.check_cutoff(shuffle_cutoff, "--cutoff");
                cutoff = shuffle_cutoff;
            }
            return cmd_shuffle(global, poly_left, poly_right, cutoff, out);
        }
        if (app.got_subcommand(basis_cmd))
            return cmd_basis(global, kind, index_text, out);
        if (app.got_subcommand(grouplike)) {
            if (spec_path.empty() == poly_text.empty())
                throw CLI::ValidationError(
                    "grouplike-check needs exactly one of a polynomial or --spec");
            return cmd_grouplike_check(global, spec_path, poly_text, series_cutoff, out);
        }
        if (app.got_subcommand(reconstruct))
            return cmd_reconstruct(global, spec_path, index_text, out);
        if (app.got_subcommand(duality))
            return cmd_verify_duality(global, max_len, out);
        if (app.got_subcommand(theorem41))
            return cmd_verify_theorem41(global, spec_path, random_count, series_cutoff, seed, out);
        if (app.got_subcommand(lemma42))
            return cmd_verify_lemma42(max_depth, max_entry, max_shift, global.json, out);
        throw CLI::ValidationError("no command given");
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_success;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_success;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace demishuffle::cli
