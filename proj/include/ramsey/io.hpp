#pragma once

#include <iosfwd>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

// Text formats (UTF-8, LF). Lines starting '#' and blank lines are skipped.
//
//   graph file:    "graph <N>"     then "e <u> <v>" lines, 0 <= u < v < N, no dups
//   coloring file: "coloring <N>"  then exactly N(N-1)/2 lines "<u> <v> <R|B>",
//                  each pair exactly once, any order
//
// Readers throw ParseError with a 1-based line number; writers emit edges in
// lexicographic order so output is canonical.

SimpleGraph read_graph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const SimpleGraph& g);
void write_graph_file(const std::string& path, const SimpleGraph& g);

ColoredCompleteGraph read_coloring(std::istream& in);
ColoredCompleteGraph read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const ColoredCompleteGraph& c);
void write_coloring_file(const std::string& path, const ColoredCompleteGraph& c);

/// "# block <name>: <indices>" comment line, indices space-separated.
std::string block_comment(const std::string& name, const VertexSet& members);

}  // namespace ramsey
