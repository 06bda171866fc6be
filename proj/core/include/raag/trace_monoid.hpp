// Trace monoid (free partially commutative monoid) computations over an
// abstract totally ordered alphabet with a caller-supplied commutation
// oracle.  Letters compare via a strict order `less`; equal letters are the
// same letter.  The oracle is queried on distinct letters only and must be
// symmetric and deterministic.
//
// The canonical representative of a trace is the lexicographically least
// word in its commutation class, produced greedily: repeatedly take the
// least letter among those that commute with everything before them.

#pragma once

#include <cstddef>
#include <vector>

namespace raag {

template <class L, class Less, class Commutes>
std::vector<L> trace_normal_form(std::vector<L> word, const Less& less,
                                 const Commutes& commutes) {
  std::vector<L> out;
  out.reserve(word.size());
  while (!word.empty()) {
    std::size_t best = word.size();
    for (std::size_t j = 0; j < word.size(); ++j) {
      bool available = true;
      for (std::size_t i = 0; i < j; ++i) {
        // an equal letter blocks: passing it would not change the trace
        if (!less(word[i], word[j]) && !less(word[j], word[i])) {
          available = false;
          break;
        }
        if (!commutes(word[i], word[j])) {
          available = false;
          break;
        }
      }
      if (available && (best == word.size() || less(word[j], word[best]))) {
        best = j;
      }
    }
    out.push_back(std::move(word[best]));
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

template <class L, class Less, class Commutes>
bool trace_equal(const std::vector<L>& u, const std::vector<L>& v,
                 const Less& less, const Commutes& commutes) {
  if (u.size() != v.size()) {
    return false;
  }
  const auto nu = trace_normal_form(u, less, commutes);
  const auto nv = trace_normal_form(v, less, commutes);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (less(nu[i], nv[i]) || less(nv[i], nu[i])) {
      return false;
    }
  }
  return true;
}

template <class L, class Less, class Commutes>
std::vector<L> trace_concat(std::vector<L> u, const std::vector<L>& v,
                            const Less& less, const Commutes& commutes) {
  u.insert(u.end(), v.begin(), v.end());
  return trace_normal_form(std::move(u), less, commutes);
}

/// Outcome of checking one instance of the power-shuffle law: whenever
/// v^p u_1 ... u_l equals u_1 ... u_l w^p as traces (p >= 1), the letters v
/// and w coincide and v commutes with every u_i.
struct PowerShuffleVerdict {
  bool hypothesis_holds;    // v^p u == u w^p as traces
  bool letters_equal;       // v == w
  bool commutes_with_all;   // every u_i equals v or commutes with v

  bool contract_holds() const {
    return !hypothesis_holds || (letters_equal && commutes_with_all);
  }
};

template <class L, class Less, class Commutes>
PowerShuffleVerdict power_shuffle_verify(const L& v, std::size_t p,
                                         const std::vector<L>& u, const L& w,
                                         const Less& less,
                                         const Commutes& commutes) {
  std::vector<L> lhs(p, v);
  lhs.insert(lhs.end(), u.begin(), u.end());
  std::vector<L> rhs = u;
  rhs.insert(rhs.end(), p, w);

  PowerShuffleVerdict verdict{};
  verdict.hypothesis_holds = trace_equal(lhs, rhs, less, commutes);
  verdict.letters_equal = !less(v, w) && !less(w, v);
  verdict.commutes_with_all = true;
  for (const L& x : u) {
    const bool same = !less(x, v) && !less(v, x);
    if (!same && !commutes(x, v)) {
      verdict.commutes_with_all = false;
      break;
    }
  }
  return verdict;
}

}  // namespace raag
