// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_PARSER_HPP
#define TAZ_PARSER_HPP

#include <string>

#include "taz/model.hpp"

namespace taz {

// Parse the textual model format (see README "Input format").
// Throws ParseError with 1-based line:col on bad input.
TimedAutomaton parse_model(const std::string& text);
TimedAutomaton parse_model_file(const std::string& path);

// Canonical text form; parse_model(print_model(a)) == a.
std::string print_model(const TimedAutomaton& a);

}  // namespace taz

#endif
