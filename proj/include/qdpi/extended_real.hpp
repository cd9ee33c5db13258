#pragma once

#include <string>
#include <variant>

#include "qdpi/errors.hpp"

namespace qdpi {

struct PositiveInfinity {
  bool operator==(const PositiveInfinity&) const = default;
};

/// A real number or +∞. Relative entropies take this type because the
/// support condition can fail; +∞ is a distinct alternative, not a float.
class ExtendedReal {
 public:
  constexpr ExtendedReal(double v) : repr_(v) {}  // NOLINT: implicit by intent
  constexpr ExtendedReal(PositiveInfinity) : repr_(PositiveInfinity{}) {}

  static constexpr ExtendedReal infinity() { return PositiveInfinity{}; }

  bool is_infinite() const { return std::holds_alternative<PositiveInfinity>(repr_); }
  bool is_finite() const { return !is_infinite(); }

  /// Throws if infinite.
  double value() const {
    if (is_infinite()) throw Error("ExtendedReal: value() on +inf");
    return std::get<double>(repr_);
  }

  bool operator==(const ExtendedReal&) const = default;

  /// c·x for c ≥ 0, with 0·∞ = 0.
  ExtendedReal scaled(double c) const {
    if (is_finite()) return c * value();
    return c == 0.0 ? ExtendedReal(0.0) : infinity();
  }

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return a.value() + b.value();
  }

 private:
  std::variant<double, PositiveInfinity> repr_;
};

}  // namespace qdpi
