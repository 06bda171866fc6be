// Vertex-group weights for the four abelian families a graph-product engine
// can be instantiated at: N (free monoid direction), Z (group), Z x N
// (sigma exponent plus a singular tau count), and Z x Z (both invertible).
// A weight is the exponent data of one nontrivial syllable; the identity
// element is representable transiently (during merges) but never stored in a
// valid expression.
//
// Weights use arbitrary-precision integers throughout: downstream ring
// coefficients are binomials, which overflow fixed width long before the
// group theory gets interesting.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>

namespace raag {

using Int = boost::multiprecision::cpp_int;

namespace detail {

inline std::size_t hash_int(const Int& v) {
  return std::hash<Int>{}(v);
}

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

/// Order used when several weights must be ranked deterministically:
/// absolute value first, then positive before negative.
inline int compare_abs_positive_first(const Int& a, const Int& b) {
  const Int aa = abs(a);
  const Int bb = abs(b);
  if (aa != bb) {
    return aa < bb ? -1 : 1;
  }
  if (a == b) {
    return 0;
  }
  return a > b ? -1 : 1;  // equal magnitude: the positive one first
}

}  // namespace detail

/// p >= 1 in a valid syllable.
struct NatWeight {
  static constexpr bool invertible = false;

  Int count;

  bool is_identity() const { return count == 0; }
  void accumulate(const NatWeight& other) { count += other.count; }
  int compare(const NatWeight& other) const {
    return detail::compare_abs_positive_first(count, other.count);
  }
  std::string text() const { return "^" + count.str(); }
  std::size_t hash() const { return detail::hash_int(count); }
  bool operator==(const NatWeight&) const = default;
};

/// q != 0 in a valid syllable.
struct IntWeight {
  static constexpr bool invertible = true;

  Int exponent;

  bool is_identity() const { return exponent == 0; }
  void accumulate(const IntWeight& other) { exponent += other.exponent; }
  IntWeight inverse() const { return {-exponent}; }
  int compare(const IntWeight& other) const {
    return detail::compare_abs_positive_first(exponent, other.exponent);
  }
  std::string text() const { return "^" + exponent.str(); }
  std::size_t hash() const { return detail::hash_int(exponent); }
  bool operator==(const IntWeight&) const = default;
};

/// sigma exponent in Z, tau count in N; (0,0) is the identity.
struct IntNatWeight {
  static constexpr bool invertible = false;

  Int sigma;
  Int tau;

  bool is_identity() const { return sigma == 0 && tau == 0; }
  void accumulate(const IntNatWeight& other) {
    sigma += other.sigma;
    tau += other.tau;
  }
  int compare(const IntNatWeight& other) const {
    if (int c = detail::compare_abs_positive_first(sigma, other.sigma)) {
      return c;
    }
    return detail::compare_abs_positive_first(tau, other.tau);
  }
  std::string text() const {
    return "^(" + sigma.str() + "," + tau.str() + ")";
  }
  std::size_t hash() const {
    return detail::hash_mix(detail::hash_int(sigma), detail::hash_int(tau));
  }
  bool operator==(const IntNatWeight&) const = default;
};

/// Both exponents in Z; (0,0) is the identity.
struct IntIntWeight {
  static constexpr bool invertible = true;

  Int sigma;
  Int tau;

  bool is_identity() const { return sigma == 0 && tau == 0; }
  void accumulate(const IntIntWeight& other) {
    sigma += other.sigma;
    tau += other.tau;
  }
  IntIntWeight inverse() const { return {-sigma, -tau}; }
  int compare(const IntIntWeight& other) const {
    if (int c = detail::compare_abs_positive_first(sigma, other.sigma)) {
      return c;
    }
    return detail::compare_abs_positive_first(tau, other.tau);
  }
  std::string text() const {
    return "^(" + sigma.str() + "," + tau.str() + ")";
  }
  std::size_t hash() const {
    return detail::hash_mix(detail::hash_int(sigma), detail::hash_int(tau));
  }
  bool operator==(const IntIntWeight&) const = default;
};

template <class W>
concept VertexWeight = requires(const W& a, W& m) {
  { W::invertible } -> std::convertible_to<bool>;
  { a.is_identity() } -> std::convertible_to<bool>;
  { m.accumulate(a) };
  { a.compare(a) } -> std::convertible_to<int>;
  { a.text() } -> std::convertible_to<std::string>;
  { a.hash() } -> std::convertible_to<std::size_t>;
  { a == a } -> std::convertible_to<bool>;
};

static_assert(VertexWeight<NatWeight>);
static_assert(VertexWeight<IntWeight>);
static_assert(VertexWeight<IntNatWeight>);
static_assert(VertexWeight<IntIntWeight>);

}  // namespace raag
