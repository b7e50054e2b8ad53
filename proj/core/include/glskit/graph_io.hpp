#ifndef GLSKIT_GRAPH_IO_HPP
#define GLSKIT_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "glskit/graph.hpp"

namespace gls {

/// Raised on any defect in the text format; the message carries the line.
struct GraphParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plain text graph format:
///   - lines whose first non-blank character is '#' are comments
///   - blank lines are ignored
///   - first data line: the vertex count n
///   - every following data line: "u v", one 0-based edge per line
/// Both \n and \r\n line endings are accepted.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);
void save_graph_file(const std::string& path, const Graph& g);

}  // namespace gls

#endif  // GLSKIT_GRAPH_IO_HPP
