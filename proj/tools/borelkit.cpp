#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "borelkit/script.hpp"

int main(int argc, char** argv) {
    CLI::App app{"borelkit: exact computations with Borel-type monomial ideals"};
    std::string script_path;
    borelkit::RunOptions options;
    app.add_option("script", script_path,
                   "script file (.mid); reads standard input when absent");
    app.add_flag("--json", options.json, "emit one key-sorted JSON object per command");
    app.add_flag("--quiet", options.quiet, "suppress command reports");
    app.add_option("--seed", options.seed, "seed for randomized commands (default 0)");
    app.add_option("--betti-budget", options.betti_budget,
                   "multidegree budget for Betti computations (default 200000)")
        ->envname("BORELKIT_BUDGET");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (script_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "error: cannot open '" << script_path << "'\n";
            return 1;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }

    try {
        borelkit::Script script = borelkit::parse_script(text);
        borelkit::run_script(script, options, std::cout);
        return 0;
    } catch (const borelkit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const borelkit::DegenerateIdealError& e) {
        std::cerr << "degenerate ideal: " << e.what() << "\n";
        return 3;
    } catch (const borelkit::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const borelkit::NotBorelTypeError& e) {
        std::cerr << "not Borel type: " << e.what() << "\n";
        return 5;
    } catch (const borelkit::StructureViolationError& e) {
        std::cerr << "not Borel type: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
