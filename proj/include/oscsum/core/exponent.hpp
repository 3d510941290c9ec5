#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oscsum/core/errors.hpp"

namespace oscsum {

/// A Lebesgue exponent in the extended interval [1, inf].
///
/// Infinity is carried as a tag rather than as a large float, so every norm
/// formula can branch on it explicitly.
class Exponent {
 public:
  /// Finite exponents must satisfy value >= 1. Passing +inf yields the
  /// infinite exponent.
  explicit Exponent(double value) {
    if (std::isnan(value) || value < 1.0)
      throw DomainError("exponent must lie in [1, inf], got " +
                        std::to_string(value));
    infinite_ = std::isinf(value);
    value_ = infinite_ ? 0.0 : value;
  }

  static Exponent infinity() { return Exponent(Tag{}); }

  /// Builds the exponent whose reciprocal is `r` (r = 0 gives infinity).
  static Exponent from_reciprocal(double r) {
    if (std::isnan(r) || r < 0.0 || r > 1.0)
      throw DomainError("reciprocal exponent must lie in [0, 1], got " +
                        std::to_string(r));
    if (r == 0.0) return infinity();
    return Exponent(1.0 / r);
  }

  /// Accepts decimal numbers as well as "inf" / "infinity".
  static Exponent parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF")
      return infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(std::string(text), &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse exponent '" + std::string(text) + "'");
    }
    if (used != text.size())
      throw DomainError("cannot parse exponent '" + std::string(text) + "'");
    return Exponent(v);
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_one() const noexcept { return !infinite_ && value_ == 1.0; }

  /// The exponent as a double; +inf for the infinite exponent.
  double value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  /// 1/p, with 1/inf = 0.
  double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

  /// Hoelder conjugate: 1/p + 1/p' = 1.
  Exponent dual() const {
    if (infinite_) return Exponent(1.0);
    if (value_ == 1.0) return infinity();
    return Exponent(value_ / (value_ - 1.0));
  }

  std::string to_string() const {
    if (infinite_) return "inf";
    std::string s = std::to_string(value_);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.infinite_ == b.infinite_ && a.value_ == b.value_;
  }

 private:
  struct Tag {};
  explicit Exponent(Tag) : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

inline Exponent holder_dual(const Exponent& p) { return p.dual(); }

/// A point (1/p, 1/q) of the unit square.
struct ExponentPair {
  double inv_p = 0.0;
  double inv_q = 0.0;

  ExponentPair() = default;
  ExponentPair(double inv_p_, double inv_q_) : inv_p(inv_p_), inv_q(inv_q_) {
    if (!(inv_p >= 0.0 && inv_p <= 1.0 && inv_q >= 0.0 && inv_q <= 1.0))
      throw DomainError("exponent pair must lie in the unit square");
  }

  static ExponentPair from_exponents(const Exponent& p, const Exponent& q) {
    return ExponentPair(p.reciprocal(), q.reciprocal());
  }

  Exponent p() const { return Exponent::from_reciprocal(inv_p); }
  Exponent q() const { return Exponent::from_reciprocal(inv_q); }
};

enum class Region : std::uint8_t { A = 1, B = 2, C = 4 };

/// Set of the closed regions A, B, C containing a point.
class RegionSet {
 public:
  constexpr RegionSet() = default;

  constexpr void insert(Region r) { bits_ |= static_cast<std::uint8_t>(r); }
  constexpr bool contains(Region r) const {
    return (bits_ & static_cast<std::uint8_t>(r)) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
  }

  /// Single label with priority A > B > C.
  constexpr Region primary() const {
    if (contains(Region::A)) return Region::A;
    if (contains(Region::B)) return Region::B;
    return Region::C;
  }

  friend constexpr bool operator==(RegionSet a, RegionSet b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr RegionSet region_set(std::initializer_list<Region> rs) {
  RegionSet s;
  for (Region r : rs) s.insert(r);
  return s;
}

inline const char* region_name(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
  }
  return "?";
}

/// Closed-region membership in the (1/p, 1/q) square:
///   A: 1/2 <= 1/p <= 1, 1 - 1/p <= 1/q <= 1
///   B: 0 <= 1/q <= 1/2, 0 <= 1/p <= 1 - 1/q
///   C: 0 <= 1/p <= 1/2, 1/2 <= 1/q <= 1
/// Boundary comparisons use a 1e-12 slack so lattice points that sit on a
/// boundary in exact arithmetic are reported in every region they touch.
inline RegionSet classify_region(const ExponentPair& pt) {
  constexpr double eps = 1e-12;
  const double x = pt.inv_p;
  const double y = pt.inv_q;
  RegionSet s;
  if (x >= 0.5 - eps && y >= 1.0 - x - eps) s.insert(Region::A);
  if (y <= 0.5 + eps && x <= 1.0 - y + eps) s.insert(Region::B);
  if (x <= 0.5 + eps && y >= 0.5 - eps) s.insert(Region::C);
  return s;
}

}  // namespace oscsum
