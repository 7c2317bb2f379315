#include <iostream>
#include <string>
#include <vector>

#include "diaglab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const diaglab::Outcome out = diaglab::execute(args);
    if (!out.help.empty()) std::cout << out.help;
    if (out.report) std::cout << diaglab::render(*out.report, out.format);
    if (!out.diagnostic.empty()) std::cerr << out.diagnostic;
    return out.exit_code;
}
