#include "artifact/int.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace artifact {

namespace {
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
} // namespace

Int Int::parse(const std::string &s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return Int(BigInt(s));
  } catch (const std::exception &) {
    throw std::invalid_argument("bad integer literal: " + s);
  }
}

void Int::assign(const BigInt &v) {
  if (v >= kMin && v <= kMax) {
    small_ = static_cast<std::int64_t>(v);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<BigInt>(v);
  }
}

void Int::normalize() {
  if (big_ && *big_ >= kMin && *big_ <= kMax) {
    small_ = static_cast<std::int64_t>(*big_);
    big_.reset();
  }
}

int Int::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

std::string Int::str() const { return big_ ? big_->str() : std::to_string(small_); }

Int &Int::operator+=(const Int &o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(big() + o.big());
  return *this;
}

Int &Int::operator-=(const Int &o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(big() - o.big());
  return *this;
}

Int &Int::operator*=(const Int &o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(big() * o.big());
  return *this;
}

Int &Int::operator/=(const Int &o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_ && !(small_ == kMin && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  assign(big() / o.big());
  return *this;
}

Int &Int::operator%=(const Int &o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
    return *this;
  }
  assign(big() % o.big());
  return *this;
}

Int Int::operator-() const {
  if (!big_ && small_ != kMin) return Int(-small_);
  return Int(BigInt(-big()));
}

bool operator==(const Int &a, const Int &b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false; // normalized: a big value never fits in int64
}

std::strong_ordering operator<=>(const Int &a, const Int &b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = a.big().compare(b.big());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Int abs(const Int &a) { return a.sign() < 0 ? -a : a; }

Int gcd(const Int &a, const Int &b) {
  if (a.is_small() && b.is_small() && a.small() != kMin && b.small() != kMin) {
    std::int64_t x = a.small() < 0 ? -a.small() : a.small();
    std::int64_t y = b.small() < 0 ? -b.small() : b.small();
    while (y) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Int(x);
  }
  return Int(BigInt(boost::multiprecision::gcd(a.big(), b.big())));
}

Int lcm(const Int &a, const Int &b) {
  if (a.is_zero() || b.is_zero()) return Int(0);
  return abs(a / gcd(a, b) * b);
}

Int floor_div(const Int &a, const Int &b) {
  Int q = a / b;
  Int r = a - q * b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= Int(1);
  return q;
}

Int mod(const Int &a, const Int &m) {
  Int r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

Int sym_mod(const Int &a, const Int &m) {
  Int r = mod(a, m);
  if (r * Int(2) > m) r -= m;
  return r;
}

std::ostream &operator<<(std::ostream &os, const Int &a) { return os << a.str(); }

} // namespace artifact
