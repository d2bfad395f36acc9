#pragma once

#include <iosfwd>
#include <string>

#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/graph.hpp"
#include "hyperacyclic/hypergraph.hpp"
#include "hyperacyclic/subset_graph.hpp"

namespace hyperacyclic {

/// Malformed hypergraph text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One hyperedge per non-blank line, vertex names separated by ASCII
/// whitespace, '#' starts a comment. Hyperedge labels are the 1-based
/// hyperedge numbers. Throws ParseError on a repeated name within a line
/// or when no hyperedge is present.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_string(const std::string& text);
/// Throws ParseError (line 0) when the file cannot be opened.
Hypergraph read_hypergraph_file(const std::string& path);

/// Inverse of parse_hypergraph for names without whitespace or '#'.
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// `i -> j` per edge, 1-based, sorted.
void write_edge_list(std::ostream& out, const DirectedGraph& g);
/// `i j` per edge with i < j, 1-based, sorted.
void write_edge_list(std::ostream& out, const UndirectedGraph& g);

/// DOT with one node per hyperedge, labelled with its number and vertices.
void write_dot(std::ostream& out, const DirectedGraph& g, const Hypergraph& h);
void write_dot(std::ostream& out, const UndirectedGraph& g, const Hypergraph& h);

/// Text listing of a Bachman diagram: one `node` line per node with its
/// label and represented hyperedges, then one `edge` line per edge.
void write_bachman(std::ostream& out, const BachmanDiagram& b, const Hypergraph& h);
void write_bachman_dot(std::ostream& out, const BachmanDiagram& b, const Hypergraph& h);

}  // namespace hyperacyclic
