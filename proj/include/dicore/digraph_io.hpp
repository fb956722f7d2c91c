#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dicore/digraph.hpp"

namespace dicore {

// Text format, 1-based vertices:
//
//   n m
//   u_1 v_1
//   ...
//   u_m v_m
//
// Blank lines are ignored. Loops, duplicate arcs, out-of-range vertices and a
// line count different from m raise ParseError carrying the offending line.
Digraph parse_digraph(std::string_view text);

Digraph read_digraph_file(const std::filesystem::path& path);

// Arcs are written in lexicographic order, so equal digraphs give equal text.
std::string format_digraph(const Digraph& d);

}  // namespace dicore
