#include "raag/series.hpp"

#include <stdexcept>
#include <vector>

namespace raag {

TruncatedSeries::TruncatedSeries(long lower, long cutoff)
    : lower_(lower), cutoff_(cutoff) {
  if (lower > cutoff) {
    throw std::invalid_argument("series window is empty: lower > cutoff");
  }
}

TruncatedSeries TruncatedSeries::unit(long cutoff) {
  TruncatedSeries s(0, cutoff);
  s.add({}, 1);
  return s;
}

const GroupRingElement& TruncatedSeries::stratum(long d) const {
  static const GroupRingElement zero;
  auto it = strata_.find(d);
  return it == strata_.end() ? zero : it->second;
}

void TruncatedSeries::add(NormalForm<IntWeight> g, Int c) {
  if (c == 0) {
    return;
  }
  const Int d = degree(g);
  if (d < lower_ || d > cutoff_) {
    throw std::out_of_range("stratum outside the series window");
  }
  const long key = static_cast<long>(d);
  GroupRingElement& stratum = strata_[key];
  stratum.add(std::move(g), std::move(c));
  if (stratum.is_zero()) {
    strata_.erase(key);
  }
}

TruncatedSeries multiply(const GroupRing& ring, const TruncatedSeries& a,
                         const TruncatedSeries& b) {
  TruncatedSeries out(a.lower() + b.lower(),
                      std::min(a.cutoff() + b.lower(),
                               b.cutoff() + a.lower()));
  for (const auto& [da, pa] : a.strata()) {
    for (const auto& [db, pb] : b.strata()) {
      if (da + db > out.cutoff()) {
        continue;
      }
      const GroupRingElement product = ring.multiply(pa, pb);
      for (const auto& [g, c] : product.terms()) {
        out.add(g, c);
      }
    }
  }
  return out;
}

namespace {

long token_lower(const Token& t) {
  switch (t.kind) {
    case TokenKind::sigma:
      return 1;
    case TokenKind::sigma_inv:
      return -1;
    case TokenKind::tau:
      return -1;
    case TokenKind::tau_inv:
      return 1;
  }
  return 0;
}

TruncatedSeries token_series(const GroupRing& ring, const Token& t,
                             long cutoff) {
  TruncatedSeries s(token_lower(t), cutoff);
  const auto& engine = ring.engine();
  auto sigma_power = [&](long k) {
    return engine.normalize({{t.vertex, IntWeight{k}}});
  };
  switch (t.kind) {
    case TokenKind::sigma:
      s.add(sigma_power(1), 1);
      break;
    case TokenKind::sigma_inv:
      s.add(sigma_power(-1), 1);
      break;
    case TokenKind::tau:
      if (cutoff >= 1) {
        s.add(sigma_power(1), 1);
      }
      s.add(sigma_power(-1), -1);
      break;
    case TokenKind::tau_inv:
      for (long d = 1; d <= cutoff; d += 2) {
        s.add(sigma_power(d), -1);
      }
      break;
  }
  return s;
}

}  // namespace

TruncatedSeries eta_truncated(const GroupRing& ring, const Word& word,
                              long cutoff) {
  long total_lower = 0;
  for (const Token& t : word) {
    total_lower += token_lower(t);
  }
  if (cutoff < total_lower) {
    throw std::invalid_argument(
        "cutoff " + std::to_string(cutoff) +
        " lies below the lower bound " + std::to_string(total_lower) +
        " of the result");
  }
  if (word.empty()) {
    return TruncatedSeries::unit(cutoff);
  }

  // Give each factor the cutoff that makes the final window reach `cutoff`.
  TruncatedSeries acc =
      token_series(ring, word.front(), cutoff - (total_lower - token_lower(word.front())));
  for (std::size_t i = 1; i < word.size(); ++i) {
    const long ci = cutoff - (total_lower - token_lower(word[i]));
    acc = multiply(ring, acc, token_series(ring, word[i], ci));
  }
  return acc;
}

std::string to_text(const GroupRing& ring, const TruncatedSeries& s) {
  std::string out;
  for (long d = s.lower(); d <= s.cutoff(); ++d) {
    out += std::to_string(d);
    out += ": ";
    out += ring.to_text(s.stratum(d));
    out += '\n';
  }
  return out;
}

namespace {

Int binomial(long n, long k) {
  if (k < 0 || k > n) {
    return 0;
  }
  Int out = 1;
  for (long i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace

Int expansion_coefficient(long n, long p, long q) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument("expansion_coefficient: (p, q) = (0, 0)");
  }
  if (p >= 0) {
    // (sigma - sigma^-1)^p sigma^q = sum_j (-1)^j C(p,j) sigma^(p - 2j + q)
    const long twice_j = p + q - n;
    if (twice_j < 0 || twice_j % 2 != 0) {
      return 0;
    }
    const long j = twice_j / 2;
    if (j > p) {
      return 0;
    }
    Int c = binomial(p, j);
    return j % 2 == 0 ? c : -c;
  }

  // |p| copies of -sum_{m>=0} sigma^(2m+1), then shift by q: dense
  // convolution on the degree window [|p| + q, n].
  const long copies = -p;
  const long base = copies + q;  // least possible degree
  if (n < base || (n - base) % 2 != 0) {
    return 0;
  }
  const long width = n - base + 1;
  std::vector<Int> acc(static_cast<std::size_t>(width), 0);
  acc[0] = 1;  // degree `base` offset, before applying any factor sign
  // Each factor contributes offsets 0, 2, 4, ... (relative to its forced
  // minimum degree 1) with coefficient -1.
  for (long f = 0; f < copies; ++f) {
    std::vector<Int> next(static_cast<std::size_t>(width), 0);
    for (long i = 0; i < width; ++i) {
      if (acc[static_cast<std::size_t>(i)] == 0) {
        continue;
      }
      for (long off = 0; i + off < width; off += 2) {
        next[static_cast<std::size_t>(i + off)] -=
            acc[static_cast<std::size_t>(i)];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(n - base)];
}

}  // namespace raag
