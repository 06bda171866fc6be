#include "raag/group_ring.hpp"

namespace raag {

int GroupRingElement::compare(const GroupRingElement& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end() && b != other.terms_.end(); ++a, ++b) {
    if (shortlex_less(a->first, b->first)) {
      return -1;
    }
    if (shortlex_less(b->first, a->first)) {
      return 1;
    }
    if (a->second != b->second) {
      return a->second < b->second ? -1 : 1;
    }
  }
  if (a != terms_.end()) {
    return 1;
  }
  if (b != other.terms_.end()) {
    return -1;
  }
  return 0;
}

GroupRingElement GroupRing::multiply(const GroupRingElement& a,
                                     const GroupRingElement& b) const {
  GroupRingElement out;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      out.add(engine_.multiply(ga, gb), ca * cb);
    }
  }
  return out;
}

GroupRingElement GroupRing::generator_binomial(
    const NormalForm<IntWeight>& k) const {
  GroupRingElement out = GroupRingElement::term(k, 1);
  out.add(engine_.inverse(k), -1);
  return out;
}

GroupRingElement GroupRing::eta(const SingularElement& x) const {
  GroupRingElement acc = GroupRingElement::unit();
  for (const ConjugateVertex& letter : x.trace) {
    acc = multiply(acc, generator_binomial(letter.key));
  }
  return multiply(acc, GroupRingElement::unit(x.group));
}

std::string GroupRing::to_text(const GroupRingElement& p) const {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [g, c] : p.terms()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += (c < 0 ? '-' : '+');
    out += Int(abs(c)).str();
    out += "*[";
    out += raag::to_text(*graph_, g);
    out += ']';
  }
  return out;
}

}  // namespace raag
