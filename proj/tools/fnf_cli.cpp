// fnf: exact reduction of degenerate order-two singular 1-forms to the
// normal form eta0 + x^2 b(x) (x dy - y dx), over Q(t1, ..., tm).
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fnf/io.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitValidation = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitParse = 4;

fnf::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fnf::SchemaError("cannot open input file '" + path + "'");
    fnf::json doc;
    in >> doc;
    return doc;
}

void write_output(const fnf::json& doc, const std::string& path) {
    std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw fnf::SchemaError("cannot open output file '" + path + "'");
        out << text;
    }
}

std::vector<fnf::FieldElement> parse_list(const std::string& text) {
    std::vector<fnf::FieldElement> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(fnf::parse_coefficient(item));
    return out;
}

fnf::json genericity_json(const fnf::GenericityReport& rep) {
    fnf::json doc;
    doc["schema"] = "fnf.genericity/1";
    doc["dicritic"] = rep.dicritic;
    doc["cone_normalized"] = rep.cone_normalized;
    if (rep.residues)
        doc["residues"] = fnf::json::array({rep.residues->alpha1.to_string(), rep.residues->alpha2.to_string(),
                                            rep.residues->alpha3.to_string()});
    doc["generic"] = rep.generic;
    return doc;
}

// seeded random identity-tangent polynomial map of bounded degree with
// integer coefficients in [-3, 3]
fnf::FormalMapJet random_identity_tangent_map(std::uint64_t seed, int degree, int order) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    fnf::Jet2 u = fnf::Jet2::monomial(order, 1, 0);
    fnf::Jet2 v = fnf::Jet2::monomial(order, 0, 1);
    for (int d = 2; d <= degree; ++d)
        for (int i = 0; i <= d; ++i) {
            u.add_coeff(i, d - i, fnf::FieldElement(coeff(rng)));
            v.add_coeff(i, d - i, fnf::FieldElement(coeff(rng)));
        }
    return fnf::FormalMapJet(std::move(u), std::move(v));
}

int run(int argc, char** argv) {
    CLI::App app{"exact normal-form engine for order-two singular 1-forms"};
    app.require_subcommand(1);

    std::string input, output, transcript_path, map_path, lambda_text, b_text, second_input;
    int order = 12;
    int degree = 3;
    std::uint64_t seed = 0;

    auto add_io = [&](CLI::App* cmd, bool need_input) {
        if (need_input) cmd->add_option("--input", input, "input document")->required();
        cmd->add_option("--output", output, "output path (default: stdout)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "print the genericity report of a 1-form");
    add_io(analyze, true);

    CLI::App* construct = app.add_subcommand("construct", "build the standard example family");
    construct->add_option("--lambda", lambda_text, "three residues, comma separated")->required();
    construct->add_option("--b", b_text, "b coefficients, comma separated");
    construct->add_option("--order", order, "truncation order")->capture_default_str();
    add_io(construct, false);

    CLI::App* rectify = app.add_subcommand("rectify", "rectify the separatrix tangent to x=0");
    add_io(rectify, true);

    CLI::App* reduce = app.add_subcommand("reduce", "reduce to the formal normal form");
    add_io(reduce, true);
    reduce->add_option("--transcript", transcript_path, "write the reduction transcript here");

    CLI::App* pullback_cmd = app.add_subcommand("pullback", "pull a 1-form back along a formal map");
    add_io(pullback_cmd, true);
    pullback_cmd->add_option("--map", map_path, "map document")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of two normal forms");
    equiv->add_option("--input", input, "first normal-form document")->required();
    equiv->add_option("--other", second_input, "second normal-form document")->required();

    CLI::App* perturb = app.add_subcommand("perturb", "emit a seeded random identity-tangent map");
    perturb->add_option("--seed", seed, "random seed")->capture_default_str();
    perturb->add_option("--degree", degree, "maximum degree of the perturbation")->capture_default_str();
    perturb->add_option("--order", order, "truncation order")->capture_default_str();
    perturb->add_option("--output", output, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        fnf::OneFormJet eta = fnf::form_from_json(read_json(input));
        write_output(genericity_json(fnf::check_genericity(eta)), output);
        return kExitSuccess;
    }
    if (construct->parsed()) {
        auto lambda = parse_list(lambda_text);
        if (lambda.size() != 3) throw fnf::ValidationError("--lambda needs exactly three entries");
        fnf::OneFormJet eta = fnf::construct_standard_example({lambda[0], lambda[1], lambda[2]},
                                                              parse_list(b_text), order);
        write_output(fnf::form_to_json(eta), output);
        return kExitSuccess;
    }
    if (rectify->parsed()) {
        fnf::OneFormJet eta = fnf::form_from_json(read_json(input));
        auto [out, steps] = fnf::rectify_separatrix(std::move(eta));
        write_output(fnf::form_to_json(out), output);
        return kExitSuccess;
    }
    if (reduce->parsed()) {
        fnf::OneFormJet eta = fnf::form_from_json(read_json(input));
        auto [nf, transcript] = fnf::reduce_to_normal_form(eta);
        if (!transcript_path.empty()) write_output(fnf::transcript_to_json(transcript), transcript_path);
        write_output(fnf::normal_form_to_json(nf), output);
        return kExitSuccess;
    }
    if (pullback_cmd->parsed()) {
        fnf::OneFormJet eta = fnf::form_from_json(read_json(input));
        fnf::FormalMapJet phi = fnf::map_from_json(read_json(map_path));
        // work at the common truncation order
        int N = std::min(eta.order(), phi.order());
        if (eta.order() != N) eta = eta.truncated(N);
        if (phi.order() != N) phi = fnf::FormalMapJet(phi.U.truncated(N), phi.V.truncated(N));
        write_output(fnf::form_to_json(fnf::pullback(eta, phi)), output);
        return kExitSuccess;
    }
    if (equiv->parsed()) {
        fnf::NormalForm a = fnf::normal_form_from_json(read_json(input));
        fnf::NormalForm b = fnf::normal_form_from_json(read_json(second_input));
        return fnf::invariant_equivalent(a, b) ? kExitSuccess : kExitNotEquivalent;
    }
    if (perturb->parsed()) {
        write_output(fnf::map_to_json(random_identity_tangent_map(seed, degree, order)), output);
        return kExitSuccess;
    }
    return kExitValidation;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fnf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fnf::json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fnf::GenericityError& e) {
        std::cerr << "genericity error: " << e.what() << "\n";
        return kExitGenericity;
    } catch (const fnf::ResonanceError& e) {
        std::cerr << "resonance error: " << e.what() << "\n";
        return kExitGenericity;
    } catch (const fnf::ObstructionError& e) {
        std::cerr << "obstruction error: " << e.what() << "\n";
        return kExitGenericity;
    } catch (const fnf::SchemaError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fnf::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fnf::DigestMismatchError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
