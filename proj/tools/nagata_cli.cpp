// Command-line front end: parses an input polynomial (expression text or
// JSON), runs one of the engine commands, and prints a JSON or text report.
// Exit codes: 0 success, 1 invalid input, 2 internal check mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nagata/nagata.hpp"

namespace {

struct CliOptions {
    std::string input_path = "-";
    std::string format = "json";
    std::string action;
    std::string dot_path;
    std::string ideal_path;
    bool minimal = false;
    int trials = 10;
    uint64_t seed = 0;
};

/// One generator per line, `*` for products, `^` for powers; ready to paste
/// into a general-purpose computer algebra system. The symbolic u-power block
/// is expanded so the listing is self-contained.
void write_ideal_listing(const std::string& path, const nagata::GeneratorSet& gs,
                         const nagata::NagataInput& in) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw nagata::ValidationError("cannot write ideal file '" + path + "'");
    for (const auto& g : gs.gens) out << nagata::generator_str(g) << "\n";
    if (gs.item2_symbolic)
        for (const auto& g : nagata::expand_power_block(in))
            out << nagata::generator_str(g) << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw nagata::ValidationError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("-i,--input", opt.input_path,
                    "input file (JSON or expression text), '-' for stdin");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--action", opt.action, "apolarity pairing")
        ->check(CLI::IsMember({"contraction", "differentiation"}));
}

int run_command(const std::string& command, const CliOptions& opt) {
    nagata::NagataInput input = nagata::parse_input_document(read_input(opt.input_path));
    nagata::RunOptions ro;
    ro.command = command;
    if (!opt.action.empty()) ro.action_override = nagata::action_from_name(opt.action);
    ro.minimal = opt.minimal;
    ro.trials = opt.trials;
    ro.seed = opt.seed;

    if (command == "ann" && !opt.ideal_path.empty()) {
        nagata::NagataInput in = input;
        if (ro.action_override) in.action = *ro.action_override;
        auto gs = nagata::build_generators(in, nagata::build_face_model(in));
        if (opt.minimal) gs = nagata::minimalize(gs, in);
        write_ideal_listing(opt.ideal_path, gs, in);
    }

    nagata::RunResult res = nagata::run(std::move(input), ro);
    if (command == "hasse" && !opt.dot_path.empty()) {
        std::ofstream out(opt.dot_path, std::ios::binary);
        if (!out)
            throw nagata::ValidationError("cannot write DOT file '" + opt.dot_path + "'");
        out << res.doc["hasse"]["dot"].get<std::string>();
    }
    if (opt.format == "json")
        std::cout << res.doc.dump(2) << "\n";
    else
        std::cout << nagata::render_text(res);
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert tables, annihilators and Lefschetz checks for "
                 "polynomials x0^d1*g0 + ... + xn^d1*gn with monomial facets"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string command;
    for (const char* name : {"hilbert", "ann", "check", "hasse", "lefschetz"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, opt);
        if (std::string(name) == "ann") {
            sub->add_flag("--minimal", opt.minimal, "prune to a minimal generating set");
            sub->add_option("--ideal", opt.ideal_path,
                            "write the generators one per line, ready for a computer "
                            "algebra system");
        }
        if (std::string(name) == "hasse")
            sub->add_option("--dot", opt.dot_path, "also write the DOT graph to a file");
        if (std::string(name) == "lefschetz") {
            sub->add_option("--trials", opt.trials, "random trials for the SLP search");
            sub->add_option("--seed", opt.seed, "RNG seed");
        }
        if (std::string(name) == "check")
            sub->add_option("--seed", opt.seed, "RNG seed (reserved; kept for reproducible reports)");
        sub->callback([&command, name]() { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return run_command(command, opt);
    } catch (const nagata::ValidationError& e) {
        if (opt.format == "json") {
            nagata::Json err;
            err["schema_version"] = nagata::kSchemaVersion;
            err["error"] = e.what();
            std::cerr << err.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }
}
