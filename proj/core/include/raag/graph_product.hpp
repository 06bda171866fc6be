// Normal-form engine for graph products of abelian vertex groups/monoids
// along a defining graph.
//
// An expression is a sequence of syllables (vertex, nontrivial weight); two
// expressions represent the same element exactly when they are related by
// elementary operations:
//
//   type I   merge two adjacent syllables on the same vertex (dropping the
//            result if the weights cancel),
//   type II  swap two adjacent syllables on edge-commuting vertices.
//
// An expression is reduced when no sequence of such operations shortens it.
// Every element has a unique reduced expression whose support is
// lexicographically least for the fixed vertex order; that expression is the
// normal form, and equality of elements is identity of normal forms.
//
// All operations are pure; an engine only holds a reference to its graph and
// may be shared freely across threads.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/weights.hpp"

namespace raag {

template <VertexWeight W>
struct Syllable {
  Vertex vertex;
  W weight;

  int compare(const Syllable& other) const {
    if (vertex != other.vertex) {
      return vertex < other.vertex ? -1 : 1;
    }
    return weight.compare(other.weight);
  }
  bool operator==(const Syllable&) const = default;
};

template <VertexWeight W>
using Expression = std::vector<Syllable<W>>;

template <VertexWeight W>
int compare(const Expression<W>& a, const Expression<W>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = a[i].compare(b[i])) {
      return c;
    }
  }
  if (a.size() == b.size()) {
    return 0;
  }
  return a.size() < b.size() ? -1 : 1;
}

template <VertexWeight W>
bool is_valid_expression(const DefiningGraph& g, const Expression<W>& e) {
  return std::all_of(e.begin(), e.end(), [&](const Syllable<W>& s) {
    return s.vertex < g.vertex_count() && !s.weight.is_identity();
  });
}

template <VertexWeight W>
class GraphProduct;

/// A canonical syllable sequence.  Equality of normal forms is equality of
/// elements.  Only GraphProduct mints non-identity values.
template <VertexWeight W>
class NormalForm {
 public:
  NormalForm() = default;  // the identity element

  const Expression<W>& syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  bool operator==(const NormalForm&) const = default;

 private:
  explicit NormalForm(Expression<W> syllables)
      : syllables_(std::move(syllables)) {}

  Expression<W> syllables_;

  friend class GraphProduct<W>;
};

/// Shortlex order on normal forms: syllable count, then per syllable the
/// vertex index, then the weight (absolute value, positive first).  This is
/// the letter order used for trace alphabets and ring-term ordering.
template <VertexWeight W>
bool shortlex_less(const NormalForm<W>& a, const NormalForm<W>& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return compare(a.syllables(), b.syllables()) < 0;
}

struct ShortlexLess {
  template <VertexWeight W>
  bool operator()(const NormalForm<W>& a, const NormalForm<W>& b) const {
    return shortlex_less(a, b);
  }
};

class OrbitCapExceeded : public std::runtime_error {
 public:
  explicit OrbitCapExceeded(std::size_t cap)
      : std::runtime_error("operation orbit exceeds cap of " +
                           std::to_string(cap)) {}
};

template <VertexWeight W>
class GraphProduct {
 public:
  using expression_type = Expression<W>;
  using normal_form_type = NormalForm<W>;

  explicit GraphProduct(const DefiningGraph& graph) : graph_(&graph) {}

  const DefiningGraph& graph() const noexcept { return *graph_; }

  /// Merges every pair of same-vertex syllables separated only by syllables
  /// that edge-commute with that vertex, accumulating into the earlier
  /// position; repeats from the left until no merge applies.  The result
  /// cannot be shortened by any further sequence of elementary operations.
  Expression<W> reduce(Expression<W> e) const {
    assert(is_valid_expression(*graph_, e));
    bool merged = true;
    while (merged) {
      merged = false;
      for (std::size_t i = 0; i < e.size() && !merged; ++i) {
        const Vertex v = e[i].vertex;
        for (std::size_t j = i + 1; j < e.size(); ++j) {
          if (e[j].vertex == v) {
            e[i].weight.accumulate(e[j].weight);
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
            if (e[i].weight.is_identity()) {
              e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
            }
            merged = true;
            break;
          }
          if (!graph_->commutes(e[j].vertex, v)) {
            break;
          }
        }
      }
    }
    return e;
  }

  /// Reduce, then order greedily: repeatedly emit the least-vertex syllable
  /// among those whose earlier syllables all edge-commute with it.  Yields
  /// the reduced expression with lexicographically smallest support.
  NormalForm<W> normalize(Expression<W> e) const {
    e = reduce(std::move(e));
    Expression<W> out;
    out.reserve(e.size());
    while (!e.empty()) {
      std::size_t best = e.size();
      for (std::size_t j = 0; j < e.size(); ++j) {
        bool movable = true;
        for (std::size_t i = 0; i < j; ++i) {
          if (!graph_->commutes(e[i].vertex, e[j].vertex)) {
            movable = false;
            break;
          }
        }
        if (movable && (best == e.size() || e[j].vertex < e[best].vertex)) {
          best = j;
        }
      }
      out.push_back(std::move(e[best]));
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return NormalForm<W>(std::move(out));
  }

  NormalForm<W> multiply(const NormalForm<W>& x, const NormalForm<W>& y) const {
    Expression<W> joined = x.syllables();
    joined.insert(joined.end(), y.syllables().begin(), y.syllables().end());
    return normalize(std::move(joined));
  }

  NormalForm<W> inverse(const NormalForm<W>& x) const
    requires(W::invertible)
  {
    Expression<W> rev;
    rev.reserve(x.size());
    for (auto it = x.syllables().rbegin(); it != x.syllables().rend(); ++it) {
      rev.push_back({it->vertex, it->weight.inverse()});
    }
    return normalize(std::move(rev));
  }

  NormalForm<W> conjugate(const NormalForm<W>& g, const NormalForm<W>& x) const
    requires(W::invertible)
  {
    return multiply(multiply(g, x), inverse(g));
  }

  /// Closure of {e} under single elementary operations (types I and II),
  /// sorted; throws OrbitCapExceeded beyond `cap` members.  With
  /// `type2_only` the closure uses swaps alone, i.e. the shuffle class.
  std::vector<Expression<W>> orbit(const Expression<W>& e, std::size_t cap,
                                   bool type2_only = false) const {
    assert(is_valid_expression(*graph_, e));
    std::set<Expression<W>, ExpressionLess> seen;
    std::vector<const Expression<W>*> frontier;
    seen.insert(e);
    frontier.push_back(&*seen.begin());
    while (!frontier.empty()) {
      Expression<W> current = *frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i + 1 < current.size(); ++i) {
        if (!type2_only && current[i].vertex == current[i + 1].vertex) {
          Expression<W> next = current;
          next[i].weight.accumulate(next[i + 1].weight);
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i + 1));
          if (next[i].weight.is_identity()) {
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
          }
          insert(seen, frontier, std::move(next), cap);
        }
        if (graph_->commutes(current[i].vertex, current[i + 1].vertex)) {
          Expression<W> next = current;
          std::swap(next[i], next[i + 1]);
          insert(seen, frontier, std::move(next), cap);
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

 private:
  struct ExpressionLess {
    bool operator()(const Expression<W>& a, const Expression<W>& b) const {
      return compare(a, b) < 0;
    }
  };

  static void insert(std::set<Expression<W>, ExpressionLess>& seen,
                     std::vector<const Expression<W>*>& frontier,
                     Expression<W> next, std::size_t cap) {
    auto [it, fresh] = seen.insert(std::move(next));
    if (fresh) {
      if (seen.size() > cap) {
        throw OrbitCapExceeded(cap);
      }
      frontier.push_back(&*it);
    }
  }

  const DefiningGraph* graph_;
};

template <VertexWeight W>
std::string to_text(const DefiningGraph& g, const Expression<W>& e) {
  if (e.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += g.name(e[i].vertex);
    out += e[i].weight.text();
  }
  return out;
}

template <VertexWeight W>
std::string to_text(const DefiningGraph& g, const NormalForm<W>& nf) {
  return to_text(g, nf.syllables());
}

}  // namespace raag
