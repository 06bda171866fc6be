// Right-angled defining graph: named vertices with a fixed total order plus a
// symmetric, loop-free commutation edge set.  Every other component computes
// relative to one of these graphs and holds it by reference.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace raag {

using Vertex = std::uint32_t;

/// Error raised while parsing a graph file or a word; carries the 1-based
/// line number of the offending input line (0 when not line-oriented).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " +
                                           std::move(message)),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable presentation data.  Vertices are sorted by name (byte order) so
/// that the vertex index doubles as the total order used by normal forms.
/// Safe for concurrent shared reads after construction.
class DefiningGraph {
 public:
  /// Parses the line-oriented graph format:
  ///
  ///   # comment to end of line
  ///   vertices: a b c
  ///   edges: a-b b-c
  ///
  /// Exactly one `vertices:` line followed by exactly one `edges:` line
  /// (the edge list may be empty).  Names match [A-Za-z0-9_]+.
  /// Throws ParseError with a line number on malformed input, duplicate
  /// vertices, undeclared edge endpoints, or loop edges.
  static DefiningGraph parse(std::string_view text);

  /// Builds a graph from explicit parts; names are sorted internally and the
  /// same validation as parse() applies (no line numbers in errors).
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>>& edges);

  /// Synthetic n-vertex graph ("a", "b", ...) whose edges are the set bits of
  /// `edge_mask` over the pairs (0,1), (0,2), (1,2), (0,3), ... in that
  /// order.  Intended for exhaustive sweeps over all small edge patterns.
  static DefiningGraph from_edge_mask(std::size_t n, std::uint64_t edge_mask);

  std::size_t vertex_count() const noexcept { return names_.size(); }

  const std::string& name(Vertex v) const { return names_.at(v); }

  std::optional<Vertex> find(std::string_view name) const;

  /// Resolves a name or throws ParseError("unknown vertex ...").
  Vertex require(std::string_view name, std::size_t line = 0) const;

  /// True iff u != v and {u,v} is an edge.  Symmetric; false on loops.
  bool commutes(Vertex u, Vertex v) const {
    return u != v && adjacency_[u * names_.size() + v];
  }

  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Canonical text; parse(to_text()) reproduces the graph exactly.
  std::string to_text() const;

  bool operator==(const DefiningGraph& other) const = default;

 private:
  DefiningGraph() = default;
  void finish_edges(
      const std::vector<std::pair<std::string, std::string>>& edges,
      const std::vector<std::size_t>* edge_lines);

  std::vector<std::string> names_;   // sorted, unique
  std::vector<char> adjacency_;      // row-major vertex_count x vertex_count
  std::size_t edge_count_ = 0;
};

}  // namespace raag
