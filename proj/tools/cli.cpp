#include "cli.hpp"

#include "eltrans/calculus.hpp"
#include "eltrans/chain.hpp"
#include "eltrans/explorer.hpp"
#include "eltrans/monoid.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace eltrans::cli {

namespace {

const std::vector<std::string> kEncodings{"word", "matrix", "fraction", "cf"};

Word decode_any(const std::string& kind, const std::string& value) {
    if (kind == "word") return Word::parse(value);
    if (kind == "matrix") return matrix_to_word(UnimodularMatrix::parse(value));
    if (kind == "fraction") return fraction_to_word(PositiveFraction::parse(value));
    return fraction_to_word(cf_eval(ContinuedFraction::parse(value)));
}

std::string encode_any(const std::string& kind, const Word& w) {
    if (kind == "word") return w.str();
    if (kind == "matrix") return word_to_matrix(w).str();
    if (kind == "fraction") return word_to_fraction(w).str();
    return word_to_cf(w).str();
}

SurfaceState read_state(const std::string& path, std::istream& in) {
    nlohmann::json doc;
    try {
        if (path == "-") {
            doc = nlohmann::json::parse(in);
        } else {
            std::ifstream file(path);
            if (!file) throw DomainError("cannot open state file '" + path + "'");
            doc = nlohmann::json::parse(file);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("state file '" + path + "' is not valid JSON: " + e.what());
    }
    return SurfaceState::from_json(doc);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw DomainError("cannot write output file '" + out_path + "'");
    file << text;
}

std::string state_text(const SurfaceState& st) { return st.to_json().dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculus of elementary transformations and del Pezzo hierarchies", "eltrans"};
    app.require_subcommand(1);

    // convert
    std::string from, to, value;
    auto* convert = app.add_subcommand("convert", "Convert between word, matrix, fraction and cf encodings");
    convert->add_option("--from", from, "Input encoding")->required()->check(CLI::IsMember(kEncodings));
    convert->add_option("--to", to, "Output encoding")->required()->check(CLI::IsMember(kEncodings));
    convert->add_option("value", value, "Value to convert ('-' for the empty word)")->required();

    // simulate / check
    std::string word;
    std::int64_t mu = 1;
    std::string chain_format = "table";
    auto* simulate = app.add_subcommand("simulate", "Simulate the blow-up chain of a word");
    simulate->add_option("--word", word, "Word over {L,R}; '' or '-' for the empty word")->required();
    simulate->add_option("--mu", mu, "Multiplicity of the initial fibre")->capture_default_str();
    simulate->add_option("--format", chain_format, "table or records")
        ->check(CLI::IsMember({"table", "records"}))
        ->capture_default_str();

    auto* check = app.add_subcommand("check", "Check the closed forms against the blow-up simulation");
    check->add_option("--word", word, "Word over {L,R}")->required();
    check->add_option("--mu", mu, "Multiplicity of the initial fibre")->capture_default_str();

    // pullback
    std::string cf_text;
    std::int64_t l = 1;
    auto* pullback = app.add_subcommand("pullback", "Mumford pullback coefficients on a chain");
    pullback->add_option("--cf", cf_text, "Continued fraction [s1,...,sm]")->required();
    pullback->add_option("--l", l, "Residue degree of the centre")->capture_default_str();
    pullback->add_option("--mu", mu, "Multiplicity of the fibre")->capture_default_str();

    // init
    std::int64_t g = 1, e = 1;
    std::string out_path;
    auto* init = app.add_subcommand("init", "Surface state of a P^1-bundle with a negative section");
    init->add_option("--g", g, "Genus of the base curve")->required();
    init->add_option("--e", e, "Self-intersection -e of the section")->required();
    init->add_option("--out", out_path, "Output file (default stdout)");

    // transform / test / contract
    std::string state_path, site_spec;
    auto* transform = app.add_subcommand("transform", "Apply one elementary transformation to a state");
    transform->add_option("--state", state_path, "State file ('-' for stdin)")->required();
    transform->add_option("--site", site_spec, "Site 'b,d,l,word'")->required();
    transform->add_option("--out", out_path, "Output file (default stdout)");

    auto* test = app.add_subcommand("test", "Does the state contract to a del Pezzo surface?");
    test->add_option("--state", state_path, "State file ('-' for stdin)")->required();

    auto* contract_cmd = app.add_subcommand("contract", "Contract the section of a del Pezzo state");
    contract_cmd->add_option("--state", state_path, "State file ('-' for stdin)")->required();

    // relcanon
    std::int64_t n = 1, r2 = 0;
    auto* relcanon = app.add_subcommand("relcanon", "Fibre coefficient R^2/n of n K_{Y/B}");
    relcanon->add_option("--n", n, "Degree n of the multisection")->required();
    relcanon->add_option("--r2", r2, "Self-intersection R^2")->required();

    // explore
    ExplorationConfig config;
    std::string policy = "reuse";
    std::string graph_format = "dot";
    auto* explore = app.add_subcommand("explore", "Enumerate the del Pezzo hierarchy within bounds");
    explore->add_option("--g", config.g, "Genus of the base curve")->required();
    explore->add_option("--e", config.e, "Self-intersection -e of the initial section")->required();
    explore->add_option("--max-steps", config.max_steps)->capture_default_str();
    explore->add_option("--max-d", config.max_d)->capture_default_str();
    explore->add_option("--max-l", config.max_l)->capture_default_str();
    explore->add_option("--max-word-length", config.max_word_length)->capture_default_str();
    explore->add_option("--max-nodes", config.max_nodes)->capture_default_str();
    explore->add_option("--policy", policy, "fresh or reuse")
        ->check(CLI::IsMember({"fresh", "reuse"}))
        ->capture_default_str();
    explore->add_option("--format", graph_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();
    explore->add_option("--out", out_path, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    }

    try {
        if (*convert) {
            out << encode_any(to, decode_any(from, value)) << "\n";
        } else if (*simulate) {
            ChainFiber fiber = simulate_blowups(Word::parse(word), Integer(mu));
            out << (chain_format == "records" ? fiber.records() : fiber.table());
        } else if (*check) {
            OracleReport rep = oracle_check(Word::parse(word), Integer(mu));
            out << rep.str();
            return rep.passed() ? 0 : 1;
        } else if (*pullback) {
            auto coeffs = mumford_pullback_chain(ContinuedFraction::parse(cf_text), Integer(l), Integer(mu));
            for (std::size_t i = 0; i < coeffs.gamma.size(); ++i) {
                out << "gamma_" << (i + 1) << " = " << to_string(coeffs.gamma[i]) << "\n";
            }
        } else if (*init) {
            emit(state_text(init_from_p1_bundle(g, e)), out_path, out);
        } else if (*transform) {
            SurfaceState st = read_state(state_path, in);
            emit(state_text(apply_elementary_transformation(st, TransformSite::parse(site_spec))), out_path, out);
        } else if (*test) {
            SurfaceState st = read_state(state_path, in);
            out << "del Pezzo: " << (del_pezzo_test(st) ? "true" : "false") << " (lambda = "
                << to_string(st.lambda()) << ")\n";
        } else if (*contract_cmd) {
            DelPezzoData data = contract(read_state(state_path, in));
            out << "canonical_coefficient = " << to_string(data.canonical_coefficient) << "\n";
            out << "k_squared = " << to_string(data.k_squared) << "\n";
        } else if (*relcanon) {
            out << relative_canonical_coefficient(Integer(n), Integer(r2)).str() << "\n";
        } else if (*explore) {
            config.site_policy = policy == "fresh" ? SitePolicy::FreshOnly : SitePolicy::ReuseAllowed;
            Hierarchy h = enumerate(config);
            emit(graph_format == "json" ? h.to_json().dump(2) + "\n" : h.to_dot(), out_path, out);
        }
    } catch (const DomainError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::logic_error& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace eltrans::cli
