#pragma once

// Exact rational arithmetic on 64-bit integers.  Every spectral parameter in
// this library is a half-integer of tiny magnitude, so no overflow hardening
// beyond reduction is needed.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twc {

struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Rat {
public:
  Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  // True for elements of (1/2)Z.
  bool is_half_integer() const { return den_ == 1 || den_ == 2; }
  bool is_zero() const { return num_ == 0; }

  Rat operator-() const { return Rat(-num_, den_); }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw input_error("rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  // "3", "-3/2"; no decimal forms.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  static Rat parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        long long n = std::stoll(text, &used);
        if (used != text.size()) throw input_error("bad rational: " + text);
        return Rat(n);
      }
      long long n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw input_error("bad rational: " + text);
      long long d = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1 || d <= 0)
        throw input_error("bad rational: " + text);
      return Rat(n, d);
    } catch (const std::logic_error&) {
      throw input_error("bad rational: " + text);
    }
  }

private:
  void reduce() {
    if (den_ == 0) throw input_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rat half(long long n) { return Rat(n, 2); }

}  // namespace twc
