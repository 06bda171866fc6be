// Degree-stratified truncated series over the group ring, with exact
// windowed multiplication: because the degree map is a homomorphism, stratum
// d of a product only involves factor strata summing to d, all bounded below
// by the factors' lower bounds, so no stored stratum is ever approximate.
//
// This is where formal inverses of singular generators live: `!v` expands to
// the series -sum_{n>=0} sigma_v^(2n+1), which a finite cutoff makes
// computable.

#pragma once

#include <map>
#include <string>

#include "raag/group_ring.hpp"
#include "raag/words.hpp"

namespace raag {

class TruncatedSeries {
 public:
  /// Zero series known exactly on strata [lower, cutoff]; lower <= cutoff.
  TruncatedSeries(long lower, long cutoff);

  /// [1] at stratum 0, exact on [0, cutoff].
  static TruncatedSeries unit(long cutoff);

  long lower() const noexcept { return lower_; }
  long cutoff() const noexcept { return cutoff_; }

  /// Zero for strata without stored terms (including outside the window).
  const GroupRingElement& stratum(long d) const;

  /// Adds c * [g] to stratum degree(g); the degree must lie in the window.
  void add(NormalForm<IntWeight> g, Int c);

  bool is_zero() const noexcept { return strata_.empty(); }

  const std::map<long, GroupRingElement>& strata() const noexcept {
    return strata_;
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  long lower_;
  long cutoff_;
  std::map<long, GroupRingElement> strata_;  // nonzero strata only
};

/// Product of two windowed series, exact on the largest provable window:
/// lower = la + lb, cutoff = min(ca + lb, cb + la).
TruncatedSeries multiply(const GroupRing& ring, const TruncatedSeries& a,
                         const TruncatedSeries& b);

/// Evaluates an extended word (tokens +v, -v, ~v, !v) as a series exact on
/// [sum of token lower bounds, cutoff].  Throws std::invalid_argument when
/// the cutoff lies below the lower bound of the result.
TruncatedSeries eta_truncated(const GroupRing& ring, const Word& word,
                              long cutoff);

/// One line per stratum in [lower, cutoff]: `d: <ring-text>` (`0` for empty
/// strata), newline-terminated.
std::string to_text(const GroupRing& ring, const TruncatedSeries& s);

/// Coefficient of sigma^n in (sigma - sigma^-1)^p sigma^q over one vertex;
/// (p, q) != (0, 0).  For p >= 0 this expands the binomial; for p < 0 it
/// multiplies out |p| copies of the series -sum_{m>=0} sigma^(2m+1) up to
/// degree n, shifted by q.  Nonzero only when p+q = n (mod 2) and, for
/// p >= 0, q - p <= n <= q + p.
Int expansion_coefficient(long n, long p, long q);

}  // namespace raag
