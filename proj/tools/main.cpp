// Command-line front end: parses a presentation file and dispatches the
// verification and computation commands.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qkoszul/cli.hpp"

namespace {

using namespace qkoszul;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Defect parse_defect(const std::string& name) {
    if (name == "d-qexp") return Defect::d_scalar_exponent;
    if (name == "xi-qexp") return Defect::xi_scalar_exponent;
    if (name == "zeta-coeff") return Defect::zeta_coefficient_index;
    throw ParseError("unknown defect '" + name +
                     "' (expected d-qexp, xi-qexp, or zeta-coeff)");
}

// "--assign q1_2=2/3": parameter name and an exact rational value.
void parse_assignment(const std::string& text, std::map<ParamIndex, Rational>& out) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ParseError("assignment must look like q1_2=2/3, got '" + text + "'");
    std::string name = text.substr(0, eq);
    std::string value = text.substr(eq + 1);
    if (name.size() < 2 || name[0] != 'q')
        throw ParseError("assignment parameter must be named q<i>_<j>");
    auto underscore = name.find('_');
    if (underscore == std::string::npos)
        throw ParseError("assignment parameter must be named q<i>_<j>");
    int i = 0, j = 0;
    try {
        i = std::stoi(name.substr(1, underscore - 1));
        j = std::stoi(name.substr(underscore + 1));
    } catch (const std::exception&) {
        throw ParseError("assignment parameter must be named q<i>_<j>");
    }
    LaurentScalar parsed = parse_scalar(value);
    if (!parsed.is_constant() || parsed.constant_value() == 0)
        throw ParseError("assignment value must be a nonzero rational, got '" + value +
                         "'");
    out[param_index(i, j)] = parsed.constant_value();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for quantum symmetric algebra "
                 "quotients: twisted Koszul resolutions, cohomology rings, "
                 "and chain-level 2-cocycles"};
    app.require_subcommand(1);

    std::string file;
    CliOptions opt;
    std::vector<std::string> assignments;
    std::string format = "text";
    std::string defect = "none";

    const std::vector<std::string> commands = {
        "validate",     "gr",           "resolution-check", "cohomology",
        "cocycle-table", "chainmap-check", "full-verify"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", file, "presentation file")->required();
        sub->add_option("--max-degree", opt.max_degree,
                        "homological degree bound (default 5)");
        sub->add_option("--exp-bound", opt.exp_bound,
                        "exponent/weight bound for sweeps (default per command)");
        sub->add_option("--word-bound", opt.word_bound,
                        "word length bound for the confluence sweep (default 4)");
        sub->add_option("--gen", opt.gen, "restrict cocycle table to one index");
        sub->add_option("--assign", assignments,
                        "numeric parameter assignment, e.g. q1_2=2/3 (repeatable)");
        sub->add_option("--format", format, "output format: text|tsv")
            ->check(CLI::IsMember({"text", "tsv"}));
        sub->add_option("--inject-defect", defect,
                        "negative-control defect: d-qexp|xi-qexp|zeta-coeff")
            ->check(CLI::IsMember({"none", "d-qexp", "xi-qexp", "zeta-coeff"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string command = sub->get_name();
        opt.format = (format == "tsv") ? OutputFormat::tsv : OutputFormat::text;
        if (defect != "none") opt.defect = parse_defect(defect);
        for (const std::string& a : assignments) parse_assignment(a, opt.assign);

        const std::string content = read_file(file);
        const Presentation pres = parse_presentation(content);

        // Structural validation gates every command except validate itself.
        if (command != "validate") {
            Report validation = validate_presentation(pres);
            if (!validation.passed()) {
                std::cerr << "error: invalid presentation\n";
                validation.print(std::cerr);
                return 2;
            }
        }

        return run_command(command, pres, opt, file, fingerprint_hex(content),
                           std::cout);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
