#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace artifact {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision integer. Values that fit in int64 are stored inline;
// anything larger lives in a heap-allocated cpp_int. Arithmetic on two small
// values uses overflow-checked builtins and promotes on overflow.
class Int {
public:
  Int() = default;
  Int(int v) : small_(v) {}
  Int(long v) : small_(v) {}
  Int(long long v) : small_(v) {}
  Int(const BigInt &v) { assign(v); }
  Int(const Int &o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<BigInt>(*o.big_);
  }
  Int(Int &&) noexcept = default;
  Int &operator=(const Int &o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr;
    }
    return *this;
  }
  Int &operator=(Int &&) noexcept = default;

  static Int parse(const std::string &s);

  bool is_small() const { return !big_; }
  std::int64_t small() const { return small_; }
  BigInt big() const { return big_ ? *big_ : BigInt(small_); }
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  int sign() const;
  std::string str() const;

  Int &operator+=(const Int &o);
  Int &operator-=(const Int &o);
  Int &operator*=(const Int &o);
  // truncating division and remainder, as for built-in integers
  Int &operator/=(const Int &o);
  Int &operator%=(const Int &o);

  Int operator-() const;
  friend Int operator+(Int a, const Int &b) { return a += b; }
  friend Int operator-(Int a, const Int &b) { return a -= b; }
  friend Int operator*(Int a, const Int &b) { return a *= b; }
  friend Int operator/(Int a, const Int &b) { return a /= b; }
  friend Int operator%(Int a, const Int &b) { return a %= b; }

  friend bool operator==(const Int &a, const Int &b);
  friend std::strong_ordering operator<=>(const Int &a, const Int &b);

private:
  void assign(const BigInt &v);
  void normalize();

  std::int64_t small_ = 0;
  std::unique_ptr<BigInt> big_;
};

Int abs(const Int &a);
Int gcd(const Int &a, const Int &b);
Int lcm(const Int &a, const Int &b);
// floor division and non-negative remainder for positive m
Int floor_div(const Int &a, const Int &b);
Int mod(const Int &a, const Int &m);
// representative of a mod m in (-m/2, m/2]
Int sym_mod(const Int &a, const Int &m);
std::ostream &operator<<(std::ostream &os, const Int &a);

} // namespace artifact
