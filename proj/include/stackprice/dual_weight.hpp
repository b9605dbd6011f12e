#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace stackprice {

/// Exact number `base + eps_coeff * ε` where ε is a positive infinitesimal.
///
/// Ordering is lexicographic on (base, eps_coeff). Arithmetic is checked:
/// any int64 overflow throws Error(Overflow) instead of wrapping.
class DualWeight {
 public:
  constexpr DualWeight() = default;
  constexpr DualWeight(std::int64_t base, std::int64_t eps_coeff = 0)  // NOLINT: implicit from integer is intended
      : base_(base), eps_(eps_coeff) {}

  constexpr std::int64_t base() const { return base_; }
  constexpr std::int64_t eps_coeff() const { return eps_; }

  static constexpr DualWeight epsilon() { return {0, 1}; }

  friend constexpr bool operator==(const DualWeight&, const DualWeight&) = default;
  friend constexpr std::strong_ordering operator<=>(const DualWeight& a, const DualWeight& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.eps_ <=> b.eps_;
  }

  friend DualWeight operator+(const DualWeight& a, const DualWeight& b);
  friend DualWeight operator-(const DualWeight& a, const DualWeight& b);
  friend DualWeight operator-(const DualWeight& a);
  friend DualWeight operator*(const DualWeight& a, std::int64_t k);
  friend DualWeight operator*(std::int64_t k, const DualWeight& a) { return a * k; }

  DualWeight& operator+=(const DualWeight& o) { return *this = *this + o; }
  DualWeight& operator-=(const DualWeight& o) { return *this = *this - o; }

  /// Product with the ε² term dropped. Exact whenever one factor is ε-free.
  friend DualWeight mul_truncated(const DualWeight& a, const DualWeight& b);

  std::string to_string() const;

 private:
  std::int64_t base_ = 0;
  std::int64_t eps_ = 0;
};

enum class Ordering { Less, Equal, Greater };

Ordering dual_compare(const DualWeight& a, const DualWeight& b);

std::ostream& operator<<(std::ostream& os, const DualWeight& w);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace stackprice
