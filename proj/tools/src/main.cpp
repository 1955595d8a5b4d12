// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "trustlogic/cli.hpp"

int main(int argc, char** argv) { return tl::cli::run({argv, argv + argc}, std::cout, std::cerr); }
