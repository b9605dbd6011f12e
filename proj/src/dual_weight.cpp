#include "stackprice/dual_weight.hpp"

#include <ostream>
#include <sstream>

#include "stackprice/error.hpp"

namespace stackprice {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer addition overflows 64 bits");
  }
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer subtraction overflows 64 bits");
  }
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer multiplication overflows 64 bits");
  }
  return r;
}

}  // namespace checked

DualWeight operator+(const DualWeight& a, const DualWeight& b) {
  return {checked::add(a.base_, b.base_), checked::add(a.eps_, b.eps_)};
}

DualWeight operator-(const DualWeight& a, const DualWeight& b) {
  return {checked::sub(a.base_, b.base_), checked::sub(a.eps_, b.eps_)};
}

DualWeight operator-(const DualWeight& a) { return DualWeight{} - a; }

DualWeight operator*(const DualWeight& a, std::int64_t k) {
  return {checked::mul(a.base_, k), checked::mul(a.eps_, k)};
}

DualWeight mul_truncated(const DualWeight& a, const DualWeight& b) {
  // (a0 + a1 ε)(b0 + b1 ε) = a0 b0 + (a0 b1 + a1 b0) ε + O(ε²)
  return {checked::mul(a.base_, b.base_),
          checked::add(checked::mul(a.base_, b.eps_), checked::mul(a.eps_, b.base_))};
}

Ordering dual_compare(const DualWeight& a, const DualWeight& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

std::string DualWeight::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DualWeight& w) {
  os << w.base();
  if (w.eps_coeff() > 0) {
    os << "+" << w.eps_coeff() << "e";
  } else if (w.eps_coeff() < 0) {
    os << w.eps_coeff() << "e";
  }
  return os;
}

}  // namespace stackprice
