#include <doctest.h>

#include <algorithm>
#include <random>

#include "raag/graph_product.hpp"
#include "test_helpers.hpp"

using namespace raag;
using test::A;
using test::B;
using test::C;

namespace {

const GraphProduct<IntWeight>& group_engine() {
  static const GraphProduct<IntWeight> engine(test::graph_p());
  return engine;
}

const GraphProduct<NatWeight>& monoid_engine() {
  static const GraphProduct<NatWeight> engine(test::graph_p());
  return engine;
}

Expression<IntWeight> zexpr(
    std::initializer_list<std::pair<Vertex, long>> syllables) {
  Expression<IntWeight> e;
  for (const auto& [v, q] : syllables) {
    e.push_back({v, IntWeight{q}});
  }
  return e;
}

}  // namespace

TEST_CASE("reduce merges across commuting syllables") {
  const auto& eng = group_engine();
  CHECK(eng.reduce(zexpr({{A, 1}, {B, 1}, {A, -1}})) == zexpr({{B, 1}}));
  CHECK(eng.reduce(zexpr({{A, 1}, {C, 1}, {A, -1}})) ==
        zexpr({{A, 1}, {C, 1}, {A, -1}}));

  const auto& nat = monoid_engine();
  Expression<NatWeight> two_as = {{A, NatWeight{1}}, {A, NatWeight{1}}};
  Expression<NatWeight> merged = {{A, NatWeight{2}}};
  CHECK(nat.reduce(two_as) == merged);
}

TEST_CASE("normalize orders by least vertex where edges allow") {
  const auto& eng = group_engine();
  CHECK(eng.normalize(zexpr({{B, 1}, {A, 2}})).syllables() ==
        zexpr({{A, 2}, {B, 1}}));
  CHECK(eng.normalize(zexpr({{C, 1}, {A, 1}})).syllables() ==
        zexpr({{C, 1}, {A, 1}}));

  const GraphProduct<IntNatWeight> mixed(test::graph_p());
  Expression<IntNatWeight> one = {{A, IntNatWeight{1, 1}}};
  CHECK(mixed.normalize(one).syllables() == one);
}

TEST_CASE("multiply") {
  const auto& eng = group_engine();
  const auto a = eng.normalize(zexpr({{A, 1}}));
  const auto a_inv = eng.normalize(zexpr({{A, -1}}));
  const auto b = eng.normalize(zexpr({{B, 1}}));
  const auto c = eng.normalize(zexpr({{C, 1}}));

  CHECK(eng.multiply(a, a_inv).empty());
  CHECK(eng.multiply(b, a).syllables() == zexpr({{A, 1}, {B, 1}}));
  CHECK(eng.multiply(c, a).syllables() == zexpr({{C, 1}, {A, 1}}));
}

TEST_CASE("inverse reverses and negates") {
  const auto& eng = group_engine();

  const auto x = eng.normalize(zexpr({{A, 2}, {B, 1}}));
  CHECK(eng.inverse(x).syllables() == zexpr({{A, -2}, {B, -1}}));
  CHECK(eng.multiply(x, eng.inverse(x)).empty());
  CHECK(eng.multiply(eng.inverse(x), x).empty());

  CHECK(eng.inverse(NormalForm<IntWeight>{}).empty());

  const auto y = eng.normalize(zexpr({{A, 1}, {C, 1}}));
  CHECK(eng.inverse(y).syllables() == zexpr({{C, -1}, {A, -1}}));
}

TEST_CASE("equality is normal-form identity") {
  const auto& nat = monoid_engine();
  Expression<NatWeight> ab = {{A, NatWeight{1}}, {B, NatWeight{1}}};
  Expression<NatWeight> ba = {{B, NatWeight{1}}, {A, NatWeight{1}}};
  Expression<NatWeight> ac = {{A, NatWeight{1}}, {C, NatWeight{1}}};
  Expression<NatWeight> ca = {{C, NatWeight{1}}, {A, NatWeight{1}}};

  CHECK(nat.normalize(ab) == nat.normalize(ba));
  CHECK(nat.normalize(ac) != nat.normalize(ca));
  CHECK(nat.normalize(ac) == nat.normalize(ac));
}

TEST_CASE("syllable length") {
  const auto& eng = group_engine();
  CHECK(NormalForm<IntWeight>{}.size() == 0);
  CHECK(eng.normalize(zexpr({{A, 1}, {C, 1}, {A, -1}})).size() == 3);
  CHECK(eng.normalize(zexpr({{A, 1}, {B, 1}, {A, -1}})).size() == 1);
}

TEST_CASE("orbit explores single elementary operations") {
  const auto& eng = group_engine();

  const auto cancel = eng.orbit(zexpr({{A, 1}, {A, -1}}), 100);
  CHECK(std::find(cancel.begin(), cancel.end(), Expression<IntWeight>{}) !=
        cancel.end());

  const auto swap2 = eng.orbit(zexpr({{A, 1}, {B, 1}}), 100);
  CHECK(swap2.size() == 2);

  const auto frozen = eng.orbit(zexpr({{A, 1}, {C, 1}}), 100);
  CHECK(frozen.size() == 1);

  CHECK_THROWS_AS(eng.orbit(zexpr({{A, 1}, {B, 1}, {A, 1}, {B, 1}}), 2),
                  OrbitCapExceeded);
}

TEST_CASE("normal form is idempotent and orbit-invariant (random)") {
  const auto& eng = group_engine();
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 300; ++trial) {
    const auto e = test::random_group_expression(rng, 3, 6, 2);
    const auto nf = eng.normalize(e);
    CHECK(eng.normalize(nf.syllables()) == nf);
    // every single elementary operation preserves the normal form
    for (const auto& member : eng.orbit(e, 50'000)) {
      CHECK(eng.normalize(member) == nf);
    }
  }
}

TEST_CASE("monoid and group laws (random)") {
  const auto& eng = group_engine();
  std::mt19937_64 rng(7);
  const NormalForm<IntWeight> one;
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = eng.normalize(test::random_group_expression(rng, 3, 5, 2));
    const auto y = eng.normalize(test::random_group_expression(rng, 3, 5, 2));
    const auto z = eng.normalize(test::random_group_expression(rng, 3, 5, 2));
    CHECK(eng.multiply(eng.multiply(x, y), z) ==
          eng.multiply(x, eng.multiply(y, z)));
    CHECK(eng.multiply(x, one) == x);
    CHECK(eng.multiply(one, x) == x);
    CHECK(eng.multiply(x, eng.inverse(x)).empty());
  }
}

TEST_CASE("support of the normal form matches any orbit member with the "
          "same support") {
  // Normal-form-ness depends only on the support: an orbit member whose
  // support equals the normal form's support must be the normal form of its
  // own element, syllable for syllable in position.
  const auto& eng = group_engine();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = test::random_group_expression(rng, 3, 5, 2);
    const auto nf = eng.normalize(e);
    for (const auto& member : eng.orbit(e, 50'000)) {
      if (member.size() != nf.size()) {
        continue;
      }
      bool same_support = true;
      for (std::size_t i = 0; i < member.size(); ++i) {
        if (member[i].vertex != nf.syllables()[i].vertex) {
          same_support = false;
          break;
        }
      }
      if (same_support) {
        CHECK(eng.normalize(member).syllables() == member);
      }
    }
  }
}

TEST_CASE("text form") {
  const auto& g = test::graph_p();
  const auto& eng = group_engine();
  CHECK(to_text(g, NormalForm<IntWeight>{}) == "1");
  CHECK(to_text(g, eng.normalize(zexpr({{B, 1}, {A, -2}}))) == "a^-2.b^1");

  const GraphProduct<IntNatWeight> mixed(g);
  Expression<IntNatWeight> e = {{A, IntNatWeight{1, 1}},
                                {C, IntNatWeight{0, 2}}};
  CHECK(to_text(g, mixed.normalize(e)) == "a^(1,1).c^(0,2)");
}

TEST_CASE("shortlex order: count, vertex, then exponent by magnitude with "
          "positive first") {
  const auto& eng = group_engine();
  const auto nf = [&](std::initializer_list<std::pair<Vertex, long>> e) {
    return eng.normalize(zexpr(e));
  };
  CHECK(shortlex_less(nf({}), nf({{A, 1}})));
  CHECK(shortlex_less(nf({{C, 5}}), nf({{A, 1}, {C, 1}})));
  CHECK(shortlex_less(nf({{A, 1}}), nf({{B, 1}})));
  CHECK(shortlex_less(nf({{A, 1}}), nf({{A, -1}})));
  CHECK(shortlex_less(nf({{A, -1}}), nf({{A, 2}})));
  CHECK_FALSE(shortlex_less(nf({{A, 1}}), nf({{A, 1}})));
}
