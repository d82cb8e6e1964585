#pragma once

// Plain-text edge lists: one "u v" pair per line, '#' starts a comment line.
// Labels are arbitrary tokens and are mapped to dense ids in order of first
// appearance.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkq/graph.hpp"

namespace linkq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[id] is the token from the file
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

LoadedGraph parse_edge_list(std::istream& in, const std::string& source = "<stream>");

/// Throws std::runtime_error if the file cannot be opened.
LoadedGraph load_edge_list(const std::filesystem::path& path);

/// Writes "u v" lines for u < v; with labels, tokens replace the ids.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>* labels = nullptr);

/// CSV "id,label" for the dense-id mapping.
void write_label_table(std::ostream& out, const std::vector<std::string>& labels);

}  // namespace linkq
