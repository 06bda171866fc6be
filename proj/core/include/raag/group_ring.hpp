// Integer group-ring arithmetic over the graph group: finite formal sums of
// group normal forms with nonzero arbitrary-precision coefficients, plus the
// desingularization map eta sending each singular letter with key k to
// [k] - [k^-1] and embedding the group part as a unit term.

#pragma once

#include <map>
#include <string>

#include "raag/defining_graph.hpp"
#include "raag/graph_product.hpp"
#include "raag/singular.hpp"
#include "raag/weights.hpp"

namespace raag {

/// Exponent-sum homomorphism to Z; the grading used by truncated series.
inline Int degree(const NormalForm<IntWeight>& g) {
  Int d = 0;
  for (const auto& syllable : g.syllables()) {
    d += syllable.weight.exponent;
  }
  return d;
}

class GroupRingElement {
 public:
  using term_map = std::map<NormalForm<IntWeight>, Int, ShortlexLess>;

  GroupRingElement() = default;  // zero

  static GroupRingElement term(NormalForm<IntWeight> g, Int coefficient) {
    GroupRingElement out;
    out.add(std::move(g), std::move(coefficient));
    return out;
  }

  static GroupRingElement unit(NormalForm<IntWeight> g = {}) {
    return term(std::move(g), 1);
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const term_map& terms() const noexcept { return terms_; }

  Int coefficient(const NormalForm<IntWeight>& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Accumulates c * [g]; zero coefficients are never stored.
  void add(NormalForm<IntWeight> g, Int c) {
    if (c == 0) {
      return;
    }
    auto [it, fresh] = terms_.try_emplace(std::move(g), std::move(c));
    if (!fresh) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& other) {
    for (const auto& [g, c] : other.terms_) {
      add(g, c);
    }
    return *this;
  }

  GroupRingElement& operator-=(const GroupRingElement& other) {
    for (const auto& [g, c] : other.terms_) {
      add(g, -c);
    }
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a,
                                    const GroupRingElement& b) {
    a += b;
    return a;
  }

  friend GroupRingElement operator-(GroupRingElement a,
                                    const GroupRingElement& b) {
    a -= b;
    return a;
  }

  bool operator==(const GroupRingElement&) const = default;

  /// Total order (term-by-term on the shortlex-sorted maps); used for
  /// deterministic collision maps in scans.
  int compare(const GroupRingElement& other) const;

 private:
  term_map terms_;

  friend struct RingLess;
};

struct RingLess {
  bool operator()(const GroupRingElement& a, const GroupRingElement& b) const {
    return a.compare(b) < 0;
  }
};

/// The group ring bound to a graph; owns the group engine used to multiply
/// term keys.
class GroupRing {
 public:
  explicit GroupRing(const DefiningGraph& graph)
      : graph_(&graph), engine_(graph) {}

  const DefiningGraph& graph() const noexcept { return *graph_; }
  const GraphProduct<IntWeight>& engine() const noexcept { return engine_; }

  /// Bilinear extension of the group multiplication.
  GroupRingElement multiply(const GroupRingElement& a,
                            const GroupRingElement& b) const;

  /// [k] - [k^-1] for a group element k.
  GroupRingElement generator_binomial(const NormalForm<IntWeight>& k) const;

  /// Desingularization: the ordered product of [key] - [key^-1] over the
  /// trace letters, times the group part.
  GroupRingElement eta(const SingularElement& x) const;

  /// Terms sorted, each printed `{+|-}k*[group-text]`, joined by spaces;
  /// zero prints `0`.
  std::string to_text(const GroupRingElement& p) const;

 private:
  const DefiningGraph* graph_;
  GraphProduct<IntWeight> engine_;
};

}  // namespace raag
