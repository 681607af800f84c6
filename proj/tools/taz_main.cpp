// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/cli.hpp"

int main(int argc, char** argv) { return taz::run_main(argc, argv); }
