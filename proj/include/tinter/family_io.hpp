#pragma once

// Plain-text family files:
//
//   # optional comment lines
//   ground: 8,10
//   1,2,9,10
//   1,3,9,11
//
// One member per line as ascending comma-separated 1-based elements; an empty
// line is the empty set. Writers emit the header followed by the members in
// colex order, so a written file re-reads to an identical family and rewrites
// to identical bytes.

#include <iosfwd>
#include <string>
#include <vector>

#include "tinter/core.hpp"

namespace tinter {

Family read_family(std::istream& in);
Family read_family_file(const std::string& path);

void write_family(std::ostream& out, const Family& family);
void write_family_file(const std::string& path, const Family& family);
std::string format_family(const Family& family);

/// "8,10" -> {8, 10}. Throws InvalidParameters on malformed input.
std::vector<int> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<int>& values);

}  // namespace tinter
