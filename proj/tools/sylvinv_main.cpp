#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sylvinv/commands.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sylvester matrix inverse, adjugate and Bezout solver (JSON in, JSON out)"};
    app.require_subcommand(1);

    sylvinv::CommandOptions options;
    std::string input_path;
    std::string out_path;

    for (const std::string& name : sylvinv::command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("input", input_path, "input JSON file (stdin when omitted or '-')");
        sub->add_option("--method", options.method, "auto | lagrange | hermite | oracle | dyadic")
            ->capture_default_str();
        sub->add_option("--guard-tol", options.guards.singular_tol, "singularity guard")->capture_default_str();
        sub->add_option("--verify-tol", options.verify_tol, "verification tolerance")->capture_default_str();
        sub->add_flag("--find-roots", options.find_roots, "compute zeros of coefficient input (all taken simple)");
        sub->add_option("--out", out_path, "write JSON here instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sylvinv::exit_code::validation;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    sylvinv::CommandResult result;
    std::string text;
    if (input_path.empty() || input_path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "error: cannot read " << input_path << "\n";
            return sylvinv::exit_code::validation;
        }
        text = read_all(in);
    }
    sylvinv::json input;
    try {
        input = sylvinv::json::parse(text);
        result = sylvinv::run_command(command, input, options);
    } catch (const sylvinv::json::exception& e) {
        result.exit_code = sylvinv::exit_code::validation;
        result.output = {{"error", {{"kind", "invalid_json"}, {"message", e.what()}}}};
    }

    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
    if (result.exit_code != 0) std::cerr << "error: " << result.output["error"]["message"].get<std::string>() << "\n";

    const std::string dumped = result.output.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << dumped;
    } else {
        std::ofstream out(out_path);
        out << dumped;
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return sylvinv::exit_code::validation;
        }
    }
    return result.exit_code;
}
