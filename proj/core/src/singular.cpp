#include "raag/singular.hpp"

#include <stdexcept>
#include <utility>

#include "raag/trace_monoid.hpp"

namespace raag {

namespace {

struct KeyLess {
  bool operator()(const ConjugateVertex& a, const ConjugateVertex& b) const {
    return shortlex_less(a.key, b.key);
  }
};

}  // namespace

std::vector<ConjugateVertex> SingularMonoid::trace_normalize(
    std::vector<ConjugateVertex> trace) const {
  auto commute = [this](const ConjugateVertex& a, const ConjugateVertex& b) {
    return letters_commute(a, b);
  };
  return trace_normal_form(std::move(trace), KeyLess{}, commute);
}

NormalForm<IntWeight> SingularMonoid::sigma_power(Vertex v,
                                                  long long k) const {
  if (k == 0) {
    return {};
  }
  return group_.normalize({{v, IntWeight{k}}});
}

NormalForm<IntWeight> SingularMonoid::vertex_key(
    const NormalForm<IntWeight>& alpha, Vertex s) const {
  return group_.conjugate(alpha, sigma_power(s, 1));
}

ConjugateVertex SingularMonoid::make_letter(const NormalForm<IntWeight>& alpha,
                                            Vertex s) const {
  return ConjugateVertex{vertex_key(alpha, s), alpha, s};
}

bool SingularMonoid::letters_commute(const ConjugateVertex& u,
                                     const ConjugateVertex& v) const {
  return group_.multiply(u.key, v.key) == group_.multiply(v.key, u.key);
}

SingularElement SingularMonoid::evaluate(const Word& w) const {
  SingularElement acc;
  for (const Token& t : w) {
    switch (t.kind) {
      case TokenKind::sigma:
        acc.group = group_.multiply(acc.group, sigma_power(t.vertex, 1));
        break;
      case TokenKind::sigma_inv:
        acc.group = group_.multiply(acc.group, sigma_power(t.vertex, -1));
        break;
      case TokenKind::tau:
        acc.trace.push_back(make_letter(acc.group, t.vertex));
        acc.trace = trace_normalize(std::move(acc.trace));
        break;
      case TokenKind::tau_inv:
        throw std::invalid_argument(
            "tau inverses do not exist in the singular monoid");
    }
  }
  return acc;
}

NormalForm<IntNatWeight> SingularMonoid::evaluate_direct(const Word& w) const {
  Expression<IntNatWeight> e;
  e.reserve(w.size());
  for (const Token& t : w) {
    switch (t.kind) {
      case TokenKind::sigma:
        e.push_back({t.vertex, IntNatWeight{1, 0}});
        break;
      case TokenKind::sigma_inv:
        e.push_back({t.vertex, IntNatWeight{-1, 0}});
        break;
      case TokenKind::tau:
        e.push_back({t.vertex, IntNatWeight{0, 1}});
        break;
      case TokenKind::tau_inv:
        throw std::invalid_argument(
            "tau inverses do not exist in the singular monoid");
    }
  }
  return direct_.normalize(std::move(e));
}

SingularElement SingularMonoid::multiply(const SingularElement& x,
                                         const SingularElement& y) const {
  SingularElement out;
  out.group = group_.multiply(x.group, y.group);
  out.trace = x.trace;
  out.trace.reserve(x.trace.size() + y.trace.size());
  for (const ConjugateVertex& letter : y.trace) {
    out.trace.push_back(ConjugateVertex{
        group_.conjugate(x.group, letter.key),
        group_.multiply(x.group, letter.witness_alpha), letter.witness_s});
  }
  out.trace = trace_normalize(std::move(out.trace));
  return out;
}

NormalForm<IntWeight> SingularMonoid::theta(const SingularElement& x) const {
  NormalForm<IntWeight> acc;
  for (const ConjugateVertex& letter : x.trace) {
    acc = group_.multiply(acc, letter.key);
  }
  return group_.multiply(acc, x.group);
}

bool SingularMonoid::is_ribbon(const NormalForm<IntWeight>& alpha, Vertex s,
                               Vertex t) const {
  return vertex_key(alpha, s) == sigma_power(t, 1);
}

bool SingularMonoid::frz_decide(FrzFamily family, const Word& alpha, Vertex s,
                                Vertex t, long long k) const {
  if (k == 0) {
    throw std::invalid_argument("frz_decide requires k != 0");
  }
  if (family == FrzFamily::tau && k < 0) {
    throw std::invalid_argument(
        "frz_decide: tau powers require k >= 1, singular generators are not "
        "invertible");
  }
  TokenKind kind;
  if (family == FrzFamily::sigma) {
    kind = k > 0 ? TokenKind::sigma : TokenKind::sigma_inv;
  } else {
    kind = TokenKind::tau;
  }
  const std::size_t reps =
      static_cast<std::size_t>(k > 0 ? k : -k);

  Word lhs = alpha;
  lhs.insert(lhs.end(), reps, Token{kind, s});
  Word rhs(reps, Token{kind, t});
  rhs.insert(rhs.end(), alpha.begin(), alpha.end());
  return word_equal(lhs, rhs);
}

std::string SingularMonoid::to_text(const SingularElement& x) const {
  std::string out = "{";
  for (std::size_t i = 0; i < x.trace.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += raag::to_text(*graph_, x.trace[i].key);
  }
  out += "}|";
  out += raag::to_text(*graph_, x.group);
  return out;
}

}  // namespace raag
