// Exhaustive desk-scale verification harnesses.  Each scan enumerates a
// bounded domain completely and reports violation counts; a clean run
// reports zeros.  All scans are deterministic.

#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/graph_product.hpp"
#include "raag/group_ring.hpp"
#include "raag/singular.hpp"
#include "raag/trace_monoid.hpp"

namespace raag {

/// Injectivity scan for the desingularization map: enumerate every word of
/// length <= max_len over the tokens {+v, -v, ~v}, dedupe words to distinct
/// monoid elements through the Z x N representation, then count how many
/// distinct elements share an eta image.
struct BirmanReport {
  std::uint64_t words = 0;
  std::uint64_t distinct_elements = 0;
  std::uint64_t collisions = 0;

  bool ok() const noexcept { return collisions == 0; }
};

BirmanReport birman_scan(const DefiningGraph& graph, unsigned max_len,
                         std::uint64_t element_cap = 5'000'000);

/// Normal-form/orbit verification for one weight kind: enumerates every
/// expression with at most `max_syll` syllables whose weight components are
/// bounded by `max_exp` in absolute value, explores its closure under single
/// elementary operations, and checks that
///   - the normal form is constant across the closure,
///   - the minimum length in the closure equals the normal-form length,
///   - every minimum-length member lies in the shuffle class (type-II
///     closure) of the normal form.
/// Expressions already seen inside an earlier closure are skipped: their
/// members were all checked there against the same normal form.
struct OrbitKindReport {
  std::string kind;
  std::uint64_t expressions = 0;  // enumerated, including skipped
  std::uint64_t orbits = 0;       // closures actually explored
  std::uint64_t nf_mismatches = 0;
  std::uint64_t min_length_mismatches = 0;
  std::uint64_t support_order_failures = 0;
  std::uint64_t connectivity_failures = 0;

  bool ok() const noexcept {
    return nf_mismatches == 0 && min_length_mismatches == 0 &&
           support_order_failures == 0 && connectivity_failures == 0;
  }
};

struct OrbitCheckReport {
  std::vector<OrbitKindReport> kinds;

  bool ok() const noexcept {
    for (const auto& k : kinds) {
      if (!k.ok()) {
        return false;
      }
    }
    return !kinds.empty();
  }
};

namespace detail {

template <VertexWeight W>
std::vector<W> bounded_weights(long max_exp);

template <>
inline std::vector<NatWeight> bounded_weights<NatWeight>(long max_exp) {
  std::vector<NatWeight> out;
  for (long p = 1; p <= max_exp; ++p) {
    out.push_back({p});
  }
  return out;
}

template <>
inline std::vector<IntWeight> bounded_weights<IntWeight>(long max_exp) {
  std::vector<IntWeight> out;
  for (long q = -max_exp; q <= max_exp; ++q) {
    if (q != 0) {
      out.push_back({q});
    }
  }
  return out;
}

template <>
inline std::vector<IntNatWeight> bounded_weights<IntNatWeight>(long max_exp) {
  std::vector<IntNatWeight> out;
  for (long q = -max_exp; q <= max_exp; ++q) {
    for (long p = 0; p <= max_exp; ++p) {
      if (q != 0 || p != 0) {
        out.push_back({q, p});
      }
    }
  }
  return out;
}

template <>
inline std::vector<IntIntWeight> bounded_weights<IntIntWeight>(long max_exp) {
  std::vector<IntIntWeight> out;
  for (long q = -max_exp; q <= max_exp; ++q) {
    for (long p = -max_exp; p <= max_exp; ++p) {
      if (q != 0 || p != 0) {
        out.push_back({q, p});
      }
    }
  }
  return out;
}

template <VertexWeight W>
const char* kind_name();
template <>
inline const char* kind_name<NatWeight>() {
  return "N";
}
template <>
inline const char* kind_name<IntWeight>() {
  return "Z";
}
template <>
inline const char* kind_name<IntNatWeight>() {
  return "ZxN";
}
template <>
inline const char* kind_name<IntIntWeight>() {
  return "ZxZ";
}

}  // namespace detail

template <VertexWeight W>
OrbitKindReport orbit_check_kind(const DefiningGraph& graph, unsigned max_syll,
                                 long max_exp,
                                 std::size_t orbit_cap = 200'000) {
  OrbitKindReport report;
  report.kind = detail::kind_name<W>();

  const GraphProduct<W> engine(graph);
  const std::vector<W> weights = detail::bounded_weights<W>(max_exp);
  const std::size_t nv = graph.vertex_count();

  struct Less {
    bool operator()(const Expression<W>& a, const Expression<W>& b) const {
      return compare(a, b) < 0;
    }
  };
  struct Hash {
    std::size_t operator()(const Expression<W>& e) const {
      std::size_t h = e.size();
      for (const auto& syllable : e) {
        h = detail::hash_mix(h, syllable.vertex);
        h = detail::hash_mix(h, syllable.weight.hash());
      }
      return h;
    }
  };
  std::unordered_set<Expression<W>, Hash> visited;

  Expression<W> current;
  auto check = [&](const Expression<W>& e) {
    ++report.expressions;
    if (visited.contains(e)) {
      return;
    }
    ++report.orbits;
    auto closure = engine.orbit(e, orbit_cap);
    const NormalForm<W> nf = engine.normalize(e);
    // shuffle class of the normal form, computed only when some other
    // minimum-length member exists
    std::vector<Expression<W>> shuffle;
    bool have_shuffle = false;

    std::size_t min_len = e.size();
    for (const auto& member : closure) {
      min_len = std::min(min_len, member.size());
    }
    if (min_len != nf.size()) {
      ++report.min_length_mismatches;
    }
    auto support_less = [](const Expression<W>& a, const Expression<W>& b) {
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].vertex != b[i].vertex) {
          return a[i].vertex < b[i].vertex;
        }
      }
      return a.size() < b.size();
    };
    for (auto& member : closure) {
      if (engine.normalize(member) != nf) {
        ++report.nf_mismatches;
      }
      if (member.size() == min_len && member != nf.syllables()) {
        // the normal form owns the least support among minimum-length
        // members, and is reachable from each by swaps alone
        if (support_less(member, nf.syllables())) {
          ++report.support_order_failures;
        }
        if (!have_shuffle) {
          shuffle = engine.orbit(nf.syllables(), orbit_cap, true);
          have_shuffle = true;
        }
        if (!std::binary_search(shuffle.begin(), shuffle.end(), member,
                                Less{})) {
          ++report.connectivity_failures;
        }
      }
      visited.insert(std::move(member));
    }
  };

  auto enumerate = [&](auto&& self, unsigned depth) -> void {
    check(current);
    if (depth == max_syll) {
      return;
    }
    for (std::size_t v = 0; v < nv; ++v) {
      for (const W& w : weights) {
        current.push_back({static_cast<Vertex>(v), w});
        self(self, depth + 1);
        current.pop_back();
      }
    }
  };
  enumerate(enumerate, 0);
  return report;
}

/// Runs the orbit check for all four weight kinds at the same bounds.
OrbitCheckReport orbit_check(const DefiningGraph& graph, unsigned max_syll,
                             long max_exp);

/// Exhaustive power-shuffle scan over abstract trace alphabets: for every
/// alphabet of up to `max_alphabet` letters, every symmetric commutation
/// pattern, every pair of letters (v, w), every letter sequence u with
/// |u| <= max_l, and every power 1 <= p <= max_p, verifies that whenever
/// v^p u == u w^p holds as traces, v == w and v commutes with every letter
/// of u.
struct PowerShuffleScanReport {
  std::uint64_t instances = 0;
  std::uint64_t hypotheses_held = 0;
  std::uint64_t violations = 0;

  bool ok() const noexcept { return violations == 0; }
};

PowerShuffleScanReport power_shuffle_scan(std::size_t max_alphabet,
                                          std::size_t max_l,
                                          std::size_t max_p);

}  // namespace raag
