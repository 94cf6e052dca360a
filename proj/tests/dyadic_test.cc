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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_support.h"
#include "wsmp/dyadic.h"

namespace wsmp {
namespace {

Dyadic D(const char* text) { return Dyadic::Parse(text); }

TEST_CASE("dyadic arithmetic is exact and canonical") {
  CHECK(D("1/2") + D("1/4") == D("3/4"));
  CHECK(Dyadic(5).Halve() == D("5/2"));
  CHECK(D("3/8") * Dyadic(4) == D("3/2"));
  CHECK((D("3/8") * Dyadic(4)).ToString() == "3/2");
  CHECK(Dyadic(6).Halve().ToString() == "3");
  CHECK(Dyadic(6).Halve().exponent() == 0);
  CHECK((D("1/2") - D("1/2")).ToString() == "0");
  CHECK((D("1/2") - D("1/2")).exponent() == 0);
  CHECK(D("-3/4").ToString() == "-3/4");
  CHECK(D("12/8") == D("3/2"));
  CHECK(D("5/2^3") == D("5/8"));
  CHECK(D("-7") < D("-13/2"));
}

TEST_CASE("dyadic parsing rejects non-dyadic literals") {
  CHECK_THROWS_AS(D("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(D("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(D("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(D(""), std::invalid_argument);
  CHECK_THROWS_AS(D("abc"), std::invalid_argument);
  CHECK_THROWS_AS(D("1/2^"), std::invalid_argument);
}

TEST_CASE("dyadic shifts") {
  CHECK(D("3/4").Shift(2) == Dyadic(3));
  CHECK(D("3/4").Shift(3) == Dyadic(6));
  CHECK(Dyadic(12).Shift(-3) == D("3/2"));
  CHECK(Dyadic(0).Shift(-5).exponent() == 0);
  CHECK(D("-5/2").Abs() == D("5/2"));
}

TEST_CASE("floor scaling maps times to columns") {
  // 3/4 of a span of 3 at width 40: floor(3/4 * 40 / 3) = 10.
  CHECK(D("3/4").FloorScaled(40, Dyadic(3)) == 10);
  CHECK(Dyadic(3).FloorScaled(40, Dyadic(3)) == 40);
  CHECK(D("-1/2").FloorScaled(3, Dyadic(1)) == -2);
  CHECK_THROWS(Dyadic(1).FloorScaled(1, Dyadic(0)));
}

TEST_CASE("ring identities hold on random dyadics") {
  testing::Rng rng(17);
  auto random = [&] {
    return Dyadic::FromParts(testing::Uniform(rng, -1'000'000, 1'000'000),
                             static_cast<std::uint32_t>(testing::Uniform(rng, 0, 40)));
  };
  for (int it = 0; it < 2000; ++it) {
    const Dyadic a = random(), b = random(), c = random();
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.Halve().Shift(1) == a);
    CHECK(Dyadic::Parse(a.ToString()) == a);
    CHECK((a < b) == ((a - b).sign() < 0));
    // Canonical form.
    if (a.is_zero()) {
      CHECK(a.exponent() == 0);
    } else if (a.exponent() > 0) {
      CHECK(a.mantissa() % 2 != 0);
    }
  }
}

TEST_CASE("large values stay exact") {
  Dyadic big(1);
  for (int i = 0; i < 200; ++i) big = big * Dyadic(3);
  const Dyadic tiny = Dyadic(1).Shift(-300);
  CHECK((big + tiny) - big == tiny);
  CHECK(((big + tiny) - tiny) == big);
}

}  // namespace
}  // namespace wsmp
