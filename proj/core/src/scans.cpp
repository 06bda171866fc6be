#include "raag/scans.hpp"

#include <map>
#include <stdexcept>

namespace raag {

BirmanReport birman_scan(const DefiningGraph& graph, unsigned max_len,
                         std::uint64_t element_cap) {
  const SingularMonoid monoid(graph);
  const GroupRing ring(graph);
  const std::size_t nv = graph.vertex_count();
  const std::size_t ntokens = 3 * nv;

  static constexpr TokenKind kKinds[3] = {TokenKind::sigma,
                                          TokenKind::sigma_inv,
                                          TokenKind::tau};
  auto token_at = [&](std::size_t index) {
    return Token{kKinds[index / nv], static_cast<Vertex>(index % nv)};
  };

  BirmanReport report;
  std::map<NormalForm<IntNatWeight>, Word, ShortlexLess> elements;

  Word word;
  auto enumerate = [&](auto&& self, unsigned depth) -> void {
    ++report.words;
    auto key = monoid.evaluate_direct(word);
    if (auto [it, fresh] = elements.try_emplace(std::move(key), word); fresh) {
      if (elements.size() > element_cap) {
        throw std::runtime_error("birman_scan: element cap exceeded");
      }
    }
    if (depth == max_len) {
      return;
    }
    for (std::size_t i = 0; i < ntokens; ++i) {
      word.push_back(token_at(i));
      self(self, depth + 1);
      word.pop_back();
    }
  };
  enumerate(enumerate, 0);

  report.distinct_elements = elements.size();

  std::map<GroupRingElement, std::uint64_t, RingLess> images;
  for (const auto& [key, representative] : elements) {
    ++images[ring.eta(monoid.evaluate(representative))];
  }
  report.collisions = report.distinct_elements - images.size();
  return report;
}

OrbitCheckReport orbit_check(const DefiningGraph& graph, unsigned max_syll,
                             long max_exp) {
  OrbitCheckReport report;
  report.kinds.push_back(orbit_check_kind<NatWeight>(graph, max_syll, max_exp));
  report.kinds.push_back(orbit_check_kind<IntWeight>(graph, max_syll, max_exp));
  report.kinds.push_back(
      orbit_check_kind<IntNatWeight>(graph, max_syll, max_exp));
  report.kinds.push_back(
      orbit_check_kind<IntIntWeight>(graph, max_syll, max_exp));
  return report;
}

PowerShuffleScanReport power_shuffle_scan(std::size_t max_alphabet,
                                          std::size_t max_l,
                                          std::size_t max_p) {
  PowerShuffleScanReport report;
  using Letter = unsigned;

  for (std::size_t n = 1; n <= max_alphabet; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << pairs);
         ++pattern) {
      // pair (i, j), i < j, gets bit i + j*(j-1)/2
      auto commutes = [&](Letter a, Letter b) {
        if (a == b) {
          return true;
        }
        const Letter i = std::min(a, b);
        const Letter j = std::max(a, b);
        return (pattern >> (i + j * (j - 1) / 2) & 1) != 0;
      };
      auto less = std::less<Letter>{};

      std::vector<Letter> u;
      auto scan_u = [&](auto&& self, std::size_t depth) -> void {
        for (Letter v = 0; v < n; ++v) {
          for (Letter w = 0; w < n; ++w) {
            for (std::size_t p = 1; p <= max_p; ++p) {
              ++report.instances;
              const auto verdict =
                  power_shuffle_verify(v, p, u, w, less, commutes);
              if (verdict.hypothesis_holds) {
                ++report.hypotheses_held;
              }
              if (!verdict.contract_holds()) {
                ++report.violations;
              }
            }
          }
        }
        if (depth == max_l) {
          return;
        }
        for (Letter x = 0; x < n; ++x) {
          u.push_back(x);
          self(self, depth + 1);
          u.pop_back();
        }
      };
      scan_u(scan_u, 0);
    }
  }
  return report;
}

}  // namespace raag
