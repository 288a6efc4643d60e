// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ivrep/cli.hpp"

#include <exception>
#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return ivrep::run_cli(std::move(args), std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
