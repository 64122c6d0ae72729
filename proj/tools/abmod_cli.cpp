#include "abmod/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

int main(int argc, char** argv) {
    CLI::App app{"Formal (a,b)-module sessions"};
    std::string input;
    std::string output = "text";
    abmod::RunOptions opts;
    app.add_option("session", input, "session file (standard input when omitted or '-')");
    app.add_option("--precision", opts.precision, "default b-adic precision")->check(CLI::Range(2, 100000));
    app.add_option("--output", output, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-sat-iter", opts.max_sat_iter, "saturation step cap (default rank*prec)");
    app.add_option("--seed", opts.seed, "seed for generic choices in the embedding search");
    app.add_flag("--check", opts.check, "treat validation warnings as errors");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (input.empty() || input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "cannot read " << input << "\n";
            return 2;
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    const abmod::Report rep = abmod::run_text(text, opts);
    if (output == "json") {
        std::cout << abmod::report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << abmod::report_to_text(rep);
    }
    return rep.ok() ? 0 : 1;
}
