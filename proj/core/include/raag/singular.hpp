// The right-angled singular Artin monoid in its semidirect representation:
// an element is a trace over conjugated singular generators together with a
// group element, multiplied by letting the group act on trace letters by
// conjugation.  The word problem reduces to componentwise comparison, with
// trace letters keyed by group normal forms (conjugating a singular
// generator corresponds bijectively to conjugating the plain generator, and
// two letters commute exactly when their keys commute in the group).
//
// A second, independent representation of the same monoid is the Z x N
// graph product over the same graph; evaluate_direct computes it and
// word_equal is cross-checked against it in the test suites.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/graph_product.hpp"
#include "raag/words.hpp"

namespace raag {

/// A trace letter: the conjugate of a singular generator, identified by the
/// group element `key` = witness_alpha . sigma_{witness_s} . witness_alpha^-1.
/// Letters with equal keys are the same letter; witnesses are retained for
/// display only and do not take part in comparisons.
struct ConjugateVertex {
  NormalForm<IntWeight> key;
  NormalForm<IntWeight> witness_alpha;
  Vertex witness_s = 0;

  bool operator==(const ConjugateVertex& other) const {
    return key == other.key;
  }
};

/// Trace part in trace normal form, plus the group part.
struct SingularElement {
  std::vector<ConjugateVertex> trace;
  NormalForm<IntWeight> group;

  bool operator==(const SingularElement&) const = default;
};

enum class FrzFamily { sigma, tau };

class SingularMonoid {
 public:
  explicit SingularMonoid(const DefiningGraph& graph)
      : graph_(&graph), group_(graph), direct_(graph) {}

  const DefiningGraph& graph() const noexcept { return *graph_; }
  const GraphProduct<IntWeight>& group_engine() const noexcept {
    return group_;
  }
  const GraphProduct<IntNatWeight>& direct_engine() const noexcept {
    return direct_;
  }

  /// Left-to-right evaluation in the semidirect representation: sigma
  /// tokens multiply the group part, a tau token appends the conjugate of
  /// its generator by the group part accumulated so far.
  SingularElement evaluate(const Word& w) const;

  /// Evaluation in the Z x N graph product: +v -> (1,0), -v -> (-1,0),
  /// ~v -> (0,1) on vertex v.
  NormalForm<IntNatWeight> evaluate_direct(const Word& w) const;

  SingularElement multiply(const SingularElement& x,
                           const SingularElement& y) const;

  /// Word problem: equality of the two evaluations.
  bool word_equal(const Word& a, const Word& b) const {
    return evaluate(a) == evaluate(b);
  }

  /// Forgets singularity: trace letters map to their keys.
  NormalForm<IntWeight> theta(const SingularElement& x) const;

  /// Embeds a group element as an element with empty trace.
  SingularElement iota(NormalForm<IntWeight> g) const {
    return SingularElement{{}, std::move(g)};
  }

  /// Number of singular letters.
  static std::size_t ord(const SingularElement& x) noexcept {
    return x.trace.size();
  }

  /// Normal form of alpha . sigma_s . alpha^-1, the key of the trace letter
  /// alpha tau_s alpha^-1.
  NormalForm<IntWeight> vertex_key(const NormalForm<IntWeight>& alpha,
                                   Vertex s) const;

  ConjugateVertex make_letter(const NormalForm<IntWeight>& alpha,
                              Vertex s) const;

  /// Two trace letters commute iff their keys commute in the group.
  bool letters_commute(const ConjugateVertex& u,
                       const ConjugateVertex& v) const;

  /// Whether alpha conjugates sigma_s to sigma_t.
  bool is_ribbon(const NormalForm<IntWeight>& alpha, Vertex s, Vertex t) const;

  /// Decides alpha . g_s^k == g_t^k . alpha in the monoid, with g = sigma or
  /// tau per `family`.  Requires k != 0, and k >= 1 for the tau family
  /// (singular generators have no inverse here).
  bool frz_decide(FrzFamily family, const Word& alpha, Vertex s, Vertex t,
                  long long k) const;

  /// Prints `{key1 key2 ...}|group` with keys in trace order.
  std::string to_text(const SingularElement& x) const;

 private:
  std::vector<ConjugateVertex> trace_normalize(
      std::vector<ConjugateVertex> trace) const;

  NormalForm<IntWeight> sigma_power(Vertex v, long long k) const;

  const DefiningGraph* graph_;
  GraphProduct<IntWeight> group_;
  GraphProduct<IntNatWeight> direct_;
};

}  // namespace raag
