#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "listobs/graph.hpp"

namespace listobs {

// graph6 encoding (McKay's format, 63-offset printable bytes). Orders up to
// 62 use one header byte; 63..128 use the 4-byte '~' form.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Newline-separated graph6 stream; blank lines are skipped.
std::vector<Graph> parse_graph6_stream(std::string_view text);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace listobs
