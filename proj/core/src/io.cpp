#include "hyperacyclic/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hyperacyclic {

Hypergraph parse_hypergraph(std::istream& in) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> names;
  std::vector<std::vector<VertexId>> edges;
  std::string line;
  std::size_t line_no = 0;
  std::unordered_set<VertexId> in_line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<VertexId> edge;
    in_line.clear();
    for (std::string name; tokens >> name;) {
      auto [it, inserted] = ids.try_emplace(name, static_cast<VertexId>(names.size()));
      if (inserted) names.push_back(name);
      if (!in_line.insert(it->second).second) throw ParseError(line_no, "vertex '" + name + "' repeated");
      edge.push_back(it->second);
    }
    if (!edge.empty()) edges.push_back(std::move(edge));
  }
  if (edges.empty()) throw ParseError(line_no, "no hyperedges");
  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (std::size_t e = 1; e <= edges.size(); ++e) labels.push_back(std::to_string(e));
  const std::size_t count = names.size();
  return Hypergraph(count, std::move(edges), std::move(names), std::move(labels));
}

Hypergraph parse_hypergraph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    bool first = true;
    for (VertexId v : h.edge(e)) {
      out << (first ? "" : " ") << h.vertex_name(v);
      first = false;
    }
    out << '\n';
  }
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (const auto& [a, b] : g.edges()) out << a + 1 << " -> " << b + 1 << '\n';
}

void write_edge_list(std::ostream& out, const UndirectedGraph& g) {
  for (const auto& [a, b] : g.edges()) out << a + 1 << ' ' << b + 1 << '\n';
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string vertex_set(const Hypergraph& h, std::span<const VertexId> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + h.vertex_name(vs[i]);
  return s + "}";
}

void dot_nodes(std::ostream& out, const Hypergraph& h) {
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    out << "  " << e + 1 << " [label=" << quoted(std::to_string(e + 1) + " " + vertex_set(h, h.edge(e)))
        << "];\n";
  }
}

}  // namespace

void write_dot(std::ostream& out, const DirectedGraph& g, const Hypergraph& h) {
  out << "digraph subset_graph {\n";
  dot_nodes(out, h);
  for (const auto& [a, b] : g.edges()) out << "  " << a + 1 << " -> " << b + 1 << ";\n";
  out << "}\n";
}

void write_dot(std::ostream& out, const UndirectedGraph& g, const Hypergraph& h) {
  out << "graph union_join {\n";
  dot_nodes(out, h);
  for (const auto& [a, b] : g.edges()) out << "  " << a + 1 << " -- " << b + 1 << ";\n";
  out << "}\n";
}

namespace {

std::string phi_list(const BachmanDiagram& b, std::uint32_t x) {
  std::string s = "[";
  for (std::size_t i = 0; i < b.Phi[x].size(); ++i) s += (i ? "," : "") + std::to_string(b.Phi[x][i] + 1);
  return s + "]";
}

}  // namespace

void write_bachman(std::ostream& out, const BachmanDiagram& b, const Hypergraph& h) {
  out << "nodes " << b.node_count() << '\n';
  for (std::uint32_t x = 0; x < b.node_count(); ++x) {
    out << "node " << x + 1 << ' ' << vertex_set(h, b.labels[x]) << " phi " << phi_list(b, x) << '\n';
  }
  out << "edges " << b.edges.size() << '\n';
  for (const auto& [from, to] : b.edges) out << "edge " << from + 1 << " -> " << to + 1 << '\n';
}

void write_bachman_dot(std::ostream& out, const BachmanDiagram& b, const Hypergraph& h) {
  out << "digraph bachman {\n";
  for (std::uint32_t x = 0; x < b.node_count(); ++x) {
    out << "  n" << x + 1 << " [label=" << quoted(vertex_set(h, b.labels[x]) + " " + phi_list(b, x)) << "];\n";
  }
  for (const auto& [from, to] : b.edges) out << "  n" << from + 1 << " -> n" << to + 1 << ";\n";
  out << "}\n";
}

}  // namespace hyperacyclic
