// Copyright 2026 The wsmp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact dyadic rationals: numbers of the form mantissa / 2^exponent.
//
// Every time quantity that arises when scheduling divisible jobs on shared
// processors (start times, overlaps, shifts) is obtained from the input data
// by sums, differences, products and halvings, so this type is closed over
// everything the library computes. No rounding happens anywhere.

#ifndef WSMP_DYADIC_H_
#define WSMP_DYADIC_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wsmp {

using BigInt = boost::multiprecision::cpp_int;

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value) : mantissa_(value) {}  // NOLINT: implicit
  explicit Dyadic(BigInt value) : mantissa_(std::move(value)) {}

  // mantissa / 2^exponent, normalized.
  static Dyadic FromParts(BigInt mantissa, std::uint32_t exponent);

  // Parses "n", "n/2^k" or "n/d" where d is a power of two. Throws
  // std::invalid_argument on anything else.
  static Dyadic Parse(std::string_view text);

  const BigInt& mantissa() const { return mantissa_; }
  std::uint32_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0; }
  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return mantissa_.sign(); }

  // "n" when integral, "n/q" with q = 2^exponent otherwise.
  std::string ToString() const;

  Dyadic Halve() const { return Shift(-1); }
  // Multiplies by 2^bits (bits may be negative).
  Dyadic Shift(std::int64_t bits) const;
  Dyadic Abs() const;

  // floor(*this * numerator / denominator) for positive denominator. Used
  // to map exact times onto character columns.
  BigInt FloorScaled(const BigInt& numerator, const Dyadic& denominator) const;

  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(const Dyadic& other);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend Dyadic operator-(const Dyadic& a) {
    return FromParts(-a.mantissa_, a.exponent_);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.ToString();
  }

 private:
  void Normalize();

  // Invariant: mantissa_ odd, or mantissa_ == 0 and exponent_ == 0.
  BigInt mantissa_ = 0;
  std::uint32_t exponent_ = 0;
};

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

inline Dyadic Min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline Dyadic Max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace wsmp

#endif  // WSMP_DYADIC_H_
