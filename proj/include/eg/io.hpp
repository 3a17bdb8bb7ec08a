#pragma once

#include <iosfwd>
#include <string>

#include "eg/striation.hpp"

namespace eg {

// Text formats.
//
//   graph:      line `p q`, then q lines `u v` (0-based endpoints, ascending
//               edge index)
//   labeling:   q lines `edge_index label` (1-based edge index)
//   striation:  the labeling lines, a separator line `---`, then q lines
//               `edge_index stria_index` (stria_index in 1..r)
//
// Readers ignore blank lines and lines whose first non-space character is
// '#'; labeling and striation readers accept the index lines in any order
// but require each edge index exactly once. Writers emit canonical output:
// ascending indices, single spaces, no comments, trailing newline, so a
// write/read/write round trip is bit-exact. All readers throw ParseError.

MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MultiGraph& g);
std::string graph_to_string(const MultiGraph& g);

EdgeLabeling read_labeling(std::istream& in, const MultiGraph& g);
EdgeLabeling read_labeling_file(const std::string& path, const MultiGraph& g);
void write_labeling(std::ostream& out, const EdgeLabeling& l);
std::string labeling_to_string(const EdgeLabeling& l);

Striation read_striation(std::istream& in, const MultiGraph& g);
Striation read_striation_file(const std::string& path, const MultiGraph& g);
void write_striation(std::ostream& out, const Striation& s);
std::string striation_to_string(const Striation& s);

}  // namespace eg
