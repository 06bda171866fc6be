#include "raag/defining_graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace raag {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
      ++j;
    }
    if (j > i) {
      out.emplace_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

}  // namespace

std::optional<Vertex> DefiningGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it != names_.end() && *it == name) {
    return static_cast<Vertex>(it - names_.begin());
  }
  return std::nullopt;
}

Vertex DefiningGraph::require(std::string_view name, std::size_t line) const {
  if (auto v = find(name)) {
    return *v;
  }
  throw ParseError("unknown vertex '" + std::string(name) + "'", line);
}

void DefiningGraph::finish_edges(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::size_t>* edge_lines) {
  const std::size_t n = names_.size();
  adjacency_.assign(n * n, 0);
  edge_count_ = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t line = edge_lines ? (*edge_lines)[k] : 0;
    const auto& [a, b] = edges[k];
    auto u = find(a);
    if (!u) {
      throw ParseError("undeclared endpoint '" + a + "'", line);
    }
    auto v = find(b);
    if (!v) {
      throw ParseError("undeclared endpoint '" + b + "'", line);
    }
    if (*u == *v) {
      throw ParseError("loop edge '" + a + "-" + b + "'", line);
    }
    if (!adjacency_[*u * n + *v]) {
      adjacency_[*u * n + *v] = 1;
      adjacency_[*v * n + *u] = 1;
      ++edge_count_;
    }
  }
}

DefiningGraph::DefiningGraph(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  for (const auto& name : names) {
    if (!valid_name(name)) {
      throw ParseError("invalid vertex name '" + name + "'");
    }
  }
  std::sort(names.begin(), names.end());
  if (auto dup = std::adjacent_find(names.begin(), names.end());
      dup != names.end()) {
    throw ParseError("duplicate vertex '" + *dup + "'");
  }
  names_ = std::move(names);
  finish_edges(edges, nullptr);
}

DefiningGraph DefiningGraph::parse(std::string_view text) {
  DefiningGraph g;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> edge_lines;
  bool seen_vertices = false;
  bool seen_edges = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (eol == text.size()) {
        break;
      }
      continue;
    }

    if (tokens.front() == "vertices:") {
      if (seen_vertices) {
        throw ParseError("repeated 'vertices:' line", line_no);
      }
      seen_vertices = true;
      std::vector<std::string> names(tokens.begin() + 1, tokens.end());
      for (const auto& name : names) {
        if (!valid_name(name)) {
          throw ParseError("invalid vertex name '" + name + "'", line_no);
        }
      }
      std::sort(names.begin(), names.end());
      if (auto dup = std::adjacent_find(names.begin(), names.end());
          dup != names.end()) {
        throw ParseError("duplicate vertex '" + *dup + "'", line_no);
      }
      g.names_ = std::move(names);
    } else if (tokens.front() == "edges:") {
      if (!seen_vertices) {
        throw ParseError("'edges:' before 'vertices:'", line_no);
      }
      if (seen_edges) {
        throw ParseError("repeated 'edges:' line", line_no);
      }
      seen_edges = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& pair = tokens[i];
        auto dash = pair.find('-');
        if (dash == std::string::npos || dash == 0 ||
            dash + 1 == pair.size() ||
            pair.find('-', dash + 1) != std::string::npos) {
          throw ParseError("malformed edge '" + pair + "'", line_no);
        }
        edges.emplace_back(pair.substr(0, dash), pair.substr(dash + 1));
        edge_lines.push_back(line_no);
      }
    } else {
      throw ParseError("malformed line '" + tokens.front() + " ...'", line_no);
    }
    if (eol == text.size()) {
      break;
    }
  }

  if (!seen_vertices) {
    throw ParseError("missing 'vertices:' line");
  }
  if (!seen_edges) {
    throw ParseError("missing 'edges:' line");
  }
  g.finish_edges(edges, &edge_lines);
  return g;
}

DefiningGraph DefiningGraph::from_edge_mask(std::size_t n,
                                            std::uint64_t edge_mask) {
  if (n * (n - 1) / 2 > 64) {
    throw std::invalid_argument("from_edge_mask: more than 64 vertex pairs");
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // a, b, ..., z, then a1, b1, ... for larger sweeps
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26) {
      name += std::to_string(i / 26);
    }
    names.push_back(std::move(name));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (edge_mask >> bit & 1) {
        edges.emplace_back(names[i], names[j]);
      }
    }
  }
  return DefiningGraph(std::move(names), edges);
}

std::string DefiningGraph::to_text() const {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& name : names_) {
    out << ' ' << name;
  }
  out << "\nedges:";
  const std::size_t n = names_.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adjacency_[u * n + v]) {
        out << ' ' << names_[u] << '-' << names_[v];
      }
    }
  }
  out << '\n';
  return out.str();
}

}  // namespace raag
