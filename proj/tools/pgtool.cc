#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pg/automata.hh"
#include "pg/cfg.hh"
#include "pg/derivation.hh"
#include "pg/errors.hh"
#include "pg/grammar.hh"
#include "pg/oracle.hh"
#include "pg/prohibition.hh"
#include "pg/text_format.hh"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitFile = 65;
constexpr int kExitUnsupportedPair = 66;
constexpr int kExitIndefinite = 67;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pg::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

pg::ProhibitionGrammar load(const std::string& path) {
    pg::ProhibitionGrammar g = pg::parse_grammar_file(read_file(path));
    for (const pg::Grammar* component : {&g.positive, &g.negative}) {
        std::vector<std::string> issues = pg::validate(*component);
        if (!issues.empty()) throw pg::Error(path + ": " + issues.front());
    }
    return g;
}

pg::Budget parse_budget(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--budget", "expected max-steps,max-form-length");
    try {
        long long steps = std::stoll(text.substr(0, comma));
        long long length = std::stoll(text.substr(comma + 1));
        if (steps <= 0 || length <= 0)
            throw CLI::ValidationError("--budget", "both components must be positive");
        return {static_cast<std::size_t>(steps), static_cast<std::size_t>(length)};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--budget", "expected max-steps,max-form-length");
    } catch (const std::out_of_range&) {
        throw CLI::ValidationError("--budget", "component out of range");
    }
}

std::vector<std::string> sorted_alphabet(const pg::ProhibitionGrammar& g) {
    const auto& a = g.alphabet();
    return {a.begin(), a.end()};
}

int run_classify(const std::string& file) {
    pg::ProhibitionGrammar g = load(file);
    pg::PairClass pc = pg::pair_class(g);
    std::cout << "positive: " << pg::class_name(pc.positive) << '\n';
    std::cout << "negative: " << pg::class_name(pc.negative) << '\n';
    std::cout << "pair: " << pg::format_pair_class(pc) << '\n';
    std::cout << "status: " << pg::status_name(pg::decidability_status(pc)) << '\n';
    return 0;
}

int run_member(const std::string& file, const std::string& word_text,
               const std::string& budget_text, bool trace) {
    pg::ProhibitionGrammar g = load(file);
    pg::Word w = pg::parse_word(word_text, g.alphabet());
    pg::Budget budget = budget_text.empty() ? pg::Budget::default_for(w) : parse_budget(budget_text);
    pg::ProhibitionDecider decider(g);
    pg::Verdict v = decider.member(w, budget);
    std::cout << pg::membership_name(v.value) << '\n';
    if (trace && v.evidence)
        for (const pg::SententialForm& form : *v.evidence)
            std::cout << pg::format_form(form) << '\n';
    switch (v.value) {
        case pg::Membership::In: return 0;
        case pg::Membership::NotIn: return 1;
        case pg::Membership::Unknown: return 2;
    }
    return 2;
}

int run_construct(const std::string& file, const std::string& out_path) {
    pg::ProhibitionGrammar g = load(file);
    pg::PairClass pc = pg::pair_class(g);
    pg::Grammar diff;
    if (pc.positive == pg::ChomskyClass::Type3 && pc.negative == pg::ChomskyClass::Type3) {
        diff = pg::construct_regular_difference(g.positive, g.negative);
    } else if (pc.positive == pg::ChomskyClass::Type2 && pc.negative == pg::ChomskyClass::Type3) {
        diff = pg::construct_cf_minus_regular(g.positive, g.negative);
    } else {
        std::cerr << "construct supports only (3,3) and (2,3) pairs; this file is "
                  << pg::format_pair_class(pc) << '\n';
        return kExitUnsupportedPair;
    }
    std::string text = pg::serialize(pg::with_empty_negative(diff));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw pg::Error("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int run_sample(const std::string& file, std::size_t max_len, const pg::Budget& budget) {
    pg::ProhibitionGrammar g = load(file);
    pg::ProhibitionDecider decider(g);
    pg::LanguageSlice s = pg::slice(
        [&](const pg::Word& w) { return decider.member(w, budget); }, sorted_alphabet(g), max_len);
    for (const pg::Word& w : s.words) std::cout << pg::format_word(w) << '\n';
    return 0;
}

int run_verify(const std::string& claim_text, const std::vector<std::string>& files,
               std::size_t max_len, const pg::Budget& budget) {
    pg::Claim claim = pg::parse_claim(claim_text);
    std::vector<pg::ProhibitionGrammar> instances;
    instances.reserve(files.size());
    for (const std::string& f : files) instances.push_back(load(f));
    pg::RelationReport report = pg::verify_relation(claim, instances, max_len, budget);
    std::cout << pg::to_string(report);
    return report.all_consistent() ? 0 : 1;
}

std::filesystem::path find_demos_dir(const char* argv0) {
    if (const char* env = std::getenv("PG_DEMOS_DIR")) return env;
    std::error_code ec;
    std::filesystem::path exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (ec) exe = std::filesystem::absolute(argv0 ? argv0 : ".", ec);
    for (const auto& base : {exe.parent_path(), exe.parent_path().parent_path()}) {
        std::filesystem::path candidate = base / "demos";
        if (std::filesystem::exists(candidate / "irregular_verbs.pg", ec)) return candidate;
    }
    throw pg::Error("cannot locate the demos directory; set PG_DEMOS_DIR");
}

int run_demo(const char* argv0) {
    std::filesystem::path dir = find_demos_dir(argv0);

    pg::ProhibitionGrammar verbs = load((dir / "irregular_verbs.pg").string());
    pg::ProhibitionDecider verb_decider(verbs);
    std::cout << "irregular verbs (irregular_verbs.pg):\n";
    for (const char* text : {"wear ed", "keep ed", "adopt ed", "wore", "kept"}) {
        pg::Word w = pg::parse_word(text, verbs.alphabet());
        pg::Verdict v = verb_decider.member(w, pg::Budget::default_for(w));
        std::cout << text << " → " << pg::membership_name(v.value) << '\n';
    }

    pg::ProhibitionGrammar witness = load((dir / "anbncn_witness.pg").string());
    pg::ProhibitionDecider witness_decider(witness);
    std::cout << "\na^n b^n c^n as a difference (anbncn_witness.pg), words up to length 9:\n";
    pg::LanguageSlice s = pg::slice(
        [&](const pg::Word& w) { return witness_decider.member(w, pg::Budget::for_slice(9)); },
        {"a", "b", "c"}, 9);
    for (const pg::Word& w : s.words) std::cout << pg::format_word(w) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for grammars with prohibition: languages of the form L(P) \\ L(N)"};
    app.require_subcommand(1);

    std::string file, word_text, budget_text, out_path, claim_text;
    std::vector<std::string> files;
    std::size_t max_len = 0;
    bool trace = false;

    CLI::App* classify_cmd = app.add_subcommand("classify", "Report component classes and decidability");
    classify_cmd->add_option("file", file, "grammar file")->required();

    CLI::App* member_cmd = app.add_subcommand("member", "Decide membership of a word");
    member_cmd->add_option("file", file, "grammar file")->required();
    member_cmd->add_option("--word", word_text, "space-separated tokens; eps for the empty word")
        ->required();
    member_cmd->add_option("--budget", budget_text, "max-steps,max-form-length");
    member_cmd->add_flag("--trace", trace, "print the derivation evidence when membership holds");

    CLI::App* construct_cmd =
        app.add_subcommand("construct", "Emit one grammar for the difference language");
    construct_cmd->add_option("file", file, "grammar file")->required();
    construct_cmd->add_option("--out", out_path, "write the grammar here instead of stdout");

    CLI::App* sample_cmd = app.add_subcommand("sample", "List all accepted words up to a length");
    sample_cmd->add_option("file", file, "grammar file")->required();
    sample_cmd->add_option("--max-len", max_len, "maximum word length")->required();
    sample_cmd->add_option("--budget", budget_text, "max-steps,max-form-length");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Cross-check a constructive claim on grammar files");
    verify_cmd->add_option("--claim", claim_text, "one of T1, T2, T8, T9, P1")
        ->required()
        ->check(CLI::IsMember({"T1", "T2", "T8", "T9", "P1"}));
    verify_cmd->add_option("--max-len", max_len, "slice length for the cross-check")->required();
    verify_cmd->add_option("files", files, "grammar files")->required();

    CLI::App* demo_cmd = app.add_subcommand("demo", "Run the bundled showcases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(file);
        if (member_cmd->parsed()) return run_member(file, word_text, budget_text, trace);
        if (construct_cmd->parsed()) return run_construct(file, out_path);
        if (sample_cmd->parsed()) {
            pg::Budget budget =
                budget_text.empty() ? pg::Budget::for_slice(max_len) : parse_budget(budget_text);
            return run_sample(file, max_len, budget);
        }
        if (verify_cmd->parsed()) return run_verify(claim_text, files, max_len,
                                                    pg::Budget::for_slice(max_len));
        if (demo_cmd->parsed()) return run_demo(argv[0]);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const pg::IndefiniteError& e) {
        std::cerr << e.what() << '\n';
        return kExitIndefinite;
    } catch (const pg::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitFile;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitFile;
    }
    return kExitUsage;
}
