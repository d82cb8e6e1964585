#include "linkq/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace linkq {

LoadedGraph parse_edge_list(std::istream& in, const std::string& source) {
  LoadedGraph out;
  std::unordered_map<std::string, NodeId> ids;
  auto id_of = [&](const std::string& label) {
    const auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) {
      throw ParseError(source, line_no, "expected exactly two tokens, got '" + line + "'");
    }
    edges.push_back({id_of(a), id_of(b)});
  }
  out.graph = Graph::from_edges(out.labels.size(), edges, &out.self_loops, &out.duplicates);
  return out;
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list " + path.string());
  return parse_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>* labels) {
  for (const Edge& e : g.edges()) {
    if (labels) {
      out << (*labels)[e.u] << ' ' << (*labels)[e.v] << '\n';
    } else {
      out << e.u << ' ' << e.v << '\n';
    }
  }
}

void write_label_table(std::ostream& out, const std::vector<std::string>& labels) {
  out << "id,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << labels[i] << '\n';
}

}  // namespace linkq
