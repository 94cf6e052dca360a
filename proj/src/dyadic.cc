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

#include "wsmp/dyadic.h"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace wsmp {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseDigits(std::string_view s) { return BigInt(std::string(s)); }

// Floor division for a positive divisor.
BigInt FloorDiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a.sign() < 0) q -= 1;
  return q;
}

}  // namespace

Dyadic Dyadic::FromParts(BigInt mantissa, std::uint32_t exponent) {
  Dyadic d;
  d.mantissa_ = std::move(mantissa);
  d.exponent_ = exponent;
  d.Normalize();
  return d;
}

void Dyadic::Normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const BigInt magnitude = abs(mantissa_);
  const auto trailing = static_cast<std::uint32_t>(lsb(magnitude));
  const std::uint32_t drop = trailing < exponent_ ? trailing : exponent_;
  if (drop > 0) {
    mantissa_ >>= drop;  // exact: the low bits are zero
    exponent_ -= drop;
  }
}

Dyadic Dyadic::Parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view numerator = text.substr(0, slash);
  if (!AllDigits(numerator)) {
    throw std::invalid_argument("not a dyadic literal: \"" + original + "\"");
  }
  BigInt mantissa = ParseDigits(numerator);
  if (negative) mantissa = -mantissa;
  if (slash == std::string_view::npos) return Dyadic(std::move(mantissa));

  std::string_view denominator = text.substr(slash + 1);
  std::uint32_t exponent = 0;
  if (denominator.starts_with("2^")) {
    denominator.remove_prefix(2);
    if (!AllDigits(denominator) || denominator.size() > 9) {
      throw std::invalid_argument("bad power of two in \"" + original + "\"");
    }
    exponent = static_cast<std::uint32_t>(std::stoul(std::string(denominator)));
  } else {
    if (!AllDigits(denominator)) {
      throw std::invalid_argument("not a dyadic literal: \"" + original + "\"");
    }
    const BigInt d = ParseDigits(denominator);
    if (d == 0 || (d & (d - 1)) != 0) {
      throw std::invalid_argument("denominator is not a power of two in \"" +
                                  original + "\"");
    }
    exponent = static_cast<std::uint32_t>(msb(d));
  }
  return FromParts(std::move(mantissa), exponent);
}

std::string Dyadic::ToString() const {
  std::string out = mantissa_.str();
  if (exponent_ > 0) {
    out += '/';
    out += (BigInt(1) << exponent_).str();
  }
  return out;
}

Dyadic Dyadic::Shift(std::int64_t bits) const {
  if (mantissa_ == 0 || bits == 0) return *this;
  Dyadic out = *this;
  if (bits < 0) {
    const std::int64_t e = static_cast<std::int64_t>(exponent_) - bits;
    if (e > std::numeric_limits<std::uint32_t>::max()) {
      throw std::overflow_error("dyadic exponent overflow");
    }
    out.exponent_ = static_cast<std::uint32_t>(e);
    out.Normalize();
    return out;
  }
  const auto up = static_cast<std::uint64_t>(bits);
  if (up <= exponent_) {
    out.exponent_ = exponent_ - static_cast<std::uint32_t>(up);
  } else {
    out.mantissa_ <<= static_cast<unsigned>(up - exponent_);
    out.exponent_ = 0;
  }
  return out;
}

Dyadic Dyadic::Abs() const {
  Dyadic out = *this;
  if (out.mantissa_.sign() < 0) out.mantissa_ = -out.mantissa_;
  return out;
}

BigInt Dyadic::FloorScaled(const BigInt& numerator,
                           const Dyadic& denominator) const {
  if (denominator.sign() <= 0) {
    throw std::invalid_argument("FloorScaled: denominator must be positive");
  }
  BigInt top = mantissa_ * numerator;
  top <<= denominator.exponent_;
  BigInt bottom = denominator.mantissa_;
  bottom <<= exponent_;
  return FloorDiv(top, bottom);
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (exponent_ == other.exponent_) {
    mantissa_ += other.mantissa_;
  } else if (exponent_ > other.exponent_) {
    mantissa_ += other.mantissa_ << (exponent_ - other.exponent_);
  } else {
    mantissa_ <<= (other.exponent_ - exponent_);
    mantissa_ += other.mantissa_;
    exponent_ = other.exponent_;
  }
  Normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(const Dyadic& other) {
  mantissa_ *= other.mantissa_;
  exponent_ += other.exponent_;
  Normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c = 0;
  if (a.exponent_ == b.exponent_) {
    c = a.mantissa_.compare(b.mantissa_);
  } else if (a.exponent_ > b.exponent_) {
    c = a.mantissa_.compare(BigInt(b.mantissa_ << (a.exponent_ - b.exponent_)));
  } else {
    c = BigInt(a.mantissa_ << (b.exponent_ - a.exponent_)).compare(b.mantissa_);
  }
  return c <=> 0;
}

}  // namespace wsmp
