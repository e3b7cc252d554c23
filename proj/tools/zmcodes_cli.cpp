// Command-line front end: parses a spec file, runs one command (or the
// file's own `run` payloads), and prints a deterministic report.
//
// Exit status: 0 success, 1 computation error, 2 parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <zmcodes/zmcodes.hpp>

namespace {

int run_all(const zmcodes::SpecDocument& doc, const std::vector<std::vector<std::string>>& commands,
            const zmcodes::CommandOptions& opt) {
    int status = 0;
    for (const auto& cmd : commands) {
        const int rc = zmcodes::run_command(doc, cmd, opt, std::cout, std::cerr);
        if (rc != 0) status = rc;
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matrix-product, hull, LCD and torsion computations over Z/mZ"};
    app.footer(
        "commands: info <code> | dual <code> | hull <code> | lcd <code> |\n"
        "          mpc <codes...> <matrix> | torsion <code> <i> |\n"
        "          distance <code> | verify <suite>\n"
        "verify runs without a file: zmcodes verify <suite>");

    std::string file;
    std::vector<std::string> command;
    zmcodes::CommandOptions opt;
    std::string suite;

    app.add_option("file", file, "input spec file (or 'verify' to run a suite directly)");
    app.add_option("command", command, "command and its arguments");
    app.add_option("--enum-cap", opt.enum_cap, "full-enumeration bound for exact distances");
    app.add_option("--weight-cap", opt.weight_cap, "weight bound for the membership distance search");
    app.add_flag("--oracle", opt.oracle, "cross-check results against brute-force oracles where feasible");
    app.add_option("--suite", suite, "run a property suite and exit (same as: verify <suite>)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        zmcodes::SpecDocument empty_doc;
        empty_doc.ring.emplace(2);

        if (!suite.empty()) return zmcodes::run_command(empty_doc, {"verify", suite}, opt, std::cout, std::cerr);

        if (file == "verify" && !command.empty())
            return zmcodes::run_command(empty_doc, {"verify", command.front()}, opt, std::cout, std::cerr);

        if (file.empty()) {
            std::cerr << "error: no input file\n";
            return 2;
        }

        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open '" << file << "'\n";
            return 2;
        }
        std::ostringstream text;
        text << in.rdbuf();
        const zmcodes::SpecDocument doc = zmcodes::parse_spec(text.str());

        if (!command.empty()) return zmcodes::run_command(doc, command, opt, std::cout, std::cerr);
        if (!doc.run_commands.empty()) return run_all(doc, doc.run_commands, opt);

        std::cout << "ring: Z" << doc.ring->modulus() << "\n";
        std::cout << "codes:";
        for (const auto& [name, _] : doc.codes) std::cout << " " << name;
        std::cout << "\nmatrices:";
        for (const auto& [name, _] : doc.matrices) std::cout << " " << name;
        std::cout << "\n";
        return 0;
    } catch (const zmcodes::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const zmcodes::SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
