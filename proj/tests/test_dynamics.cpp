#include "unicrit/dynamics.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>

using namespace unicrit;

namespace {

Integer apply(unsigned d, const Integer& c, const Integer& x) { return ipow(x, d) + c; }

// Every integer fixed point has |x| <= |c| + 1 (|x^d - x| > |c| otherwise).
std::vector<Integer> scan_fixed(unsigned d, long c) {
  std::vector<Integer> out;
  const long bound = std::labs(c) + 2;
  for (long x = -bound; x <= bound; ++x)
    if (apply(d, c, x) == x) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("evaluate and iterate examples") {
  CHECK(evaluate({2, -460}, 22) == 24);
  CHECK(evaluate({7, 13}, 0) == 13);
  CHECK(evaluate({5, -33554400}, 32) == 32);
  CHECK(iterate({2, -460}, 22, 3) == 12996);
  CHECK(iterate({3, 5}, 17, 0) == 17);
  CHECK(iterate({2, -1}, 0, 4) == 0);
}

TEST_CASE("iterate size guard") {
  CHECK_THROWS_AS(iterate({2, 1}, 3, 40, 256), ResourceError);
  CHECK_NOTHROW(iterate({2, 1}, 3, 5, 256));
}

TEST_CASE("constructor rejects d < 2") { CHECK_THROWS_AS(UnicriticalPoly(1, 3), std::invalid_argument); }

TEST_CASE("orbit_classify examples") {
  auto r = orbit_classify({2, -460}, 22);
  CHECK(r.kind == OrbitReport::Kind::Escaping);
  CHECK(r.prefix == std::vector<Integer>{22, 24, 116, 12996});

  r = orbit_classify({2, -1}, 0);
  CHECK(r.preperiodic());
  CHECK(r.tail == 0);
  CHECK(r.period == 2);

  r = orbit_classify({2, -2}, 2);
  CHECK(r.periodic());
  CHECK(r.period == 1);

  CHECK(orbit_classify({3, 0}, 2).kind == OrbitReport::Kind::Escaping);
  CHECK(orbit_classify({3, 0}, 1).periodic());

  r = orbit_classify({2, -2}, -2);  // -2 -> 2 -> 2
  CHECK(r.preperiodic());
  CHECK(r.tail == 1);
  CHECK(r.period == 1);
}

TEST_CASE("orbit reports are minimal and escapes are sound") {
  for (unsigned d = 2; d <= 5; ++d)
    for (long c = -40; c <= 40; ++c) {
      const UnicriticalPoly f(d, c);
      const long bound = 2 * std::labs(c) + 10;
      for (long a = -bound; a <= bound; ++a) {
        const auto r = orbit_classify(f, a);
        CAPTURE(d);
        CAPTURE(c);
        CAPTURE(a);
        REQUIRE(!r.prefix.empty());
        CHECK(r.prefix.front() == a);
        if (r.preperiodic()) {
          REQUIRE(r.period >= 1);
          const Integer start = iterate(f, a, r.tail);
          CHECK(iterate(f, start, r.period) == start);
          for (std::size_t q = 1; q < r.period; ++q) CHECK(iterate(f, start, q) != start);
          if (r.tail > 0) {
            // f^(tail-1)(a) is not periodic: it never comes back.
            const Integer before = iterate(f, a, r.tail - 1);
            Integer x = evaluate(f, before);
            bool back = false;
            for (std::size_t k = 0; k < r.period + 1 && !back; ++k, x = evaluate(f, x)) back = x == before;
            CHECK_FALSE(back);
          }
          CHECK(r.prefix.size() == r.tail + r.period);
        } else {
          CHECK(r.prefix.size() == r.escape_index + 1);
          Integer x = iterate(f, a, r.escape_index);
          CHECK(x == r.prefix.back());
          CHECK(abs(x) >= escape_threshold(f));
          for (int k = 0; k <= 20; ++k) {
            const Integer y = evaluate(f, x);
            CHECK(abs(y) > abs(x));
            x = y;
            if (mpz_sizeinbase(x.get_mpz_t(), 2) > 4000) break;
          }
        }
      }
    }
}

TEST_CASE("integer_fixed_points examples") {
  CHECK(integer_fixed_points({2, -2}) == std::vector<Integer>{-1, 2});
  CHECK(integer_fixed_points({2, 1}).empty());
  CHECK(integer_fixed_points({4, -252}) == std::vector<Integer>{4});
}

TEST_CASE("integer_fixed_points matches a direct scan") {
  for (unsigned d = 2; d <= 7; ++d)
    for (long c = -1500; c <= 1500; ++c) {
      const auto fps = integer_fixed_points({d, c});
      CAPTURE(d);
      CAPTURE(c);
      CHECK(fps == scan_fixed(d, c));
      if (d >= 3 && c != 0) CHECK(fps.size() <= 1);
    }
}

TEST_CASE("powered_fixed_points examples") {
  auto w = powered_fixed_points({4, -252});
  REQUIRE(w.size() == 1);
  CHECK(w[0] == PowerWitness{1, 2, 2});
  w = powered_fixed_points({5, -33554400});
  REQUIRE(w.size() == 1);
  CHECK(w[0] == PowerWitness{1, 2, 5});
  CHECK(powered_fixed_points({2, 1}).empty());
}

TEST_CASE("powered_fixed_points are fixed points that are exact powers") {
  for (unsigned d = 2; d <= 6; ++d)
    for (long c = -800; c <= 800; ++c) {
      const UnicriticalPoly f(d, c);
      std::map<Integer, bool> expected;
      for (const auto& x : scan_fixed(d, c))
        for (unsigned p : prime_divisors(d))
          if (exact_pth_power(x, p)) expected[x] = true;
      const auto got = powered_fixed_points(f);
      CAPTURE(d);
      CAPTURE(c);
      CHECK(got.size() == expected.size());
      for (const auto& w : got) {
        CHECK(w.epsilon == 1);
        CHECK(d % w.p == 0);
        CHECK(evaluate(f, w.value()) == w.value());
        CHECK(expected.count(w.value()) == 1);
      }
    }
}

TEST_CASE("powered_two_cycles examples and scan") {
  CHECK(powered_two_cycles({2, -1}) == std::vector<Integer>{0});
  CHECK(powered_two_cycles({2, -3}) == std::vector<Integer>{1});
  CHECK(powered_two_cycles({2, 1}).empty());
  CHECK_THROWS_AS(powered_two_cycles({3, -1}), std::invalid_argument);

  for (long c = -2000; c <= 2000; ++c) {
    std::vector<Integer> expected;
    const long bound = std::labs(c) + 2;
    for (long x = 0; x * x <= bound; ++x) {
      const Integer sq = x * x;
      const Integer fx = apply(2, c, sq);
      if (fx != sq && apply(2, c, fx) == sq) expected.push_back(sq);
    }
    CAPTURE(c);
    CHECK(powered_two_cycles({2, c}) == expected);
  }
}

TEST_CASE("power_iterate_threshold") {
  CHECK(power_iterate_threshold(2) == 4);
  for (unsigned d = 3; d <= 10; ++d) CHECK(power_iterate_threshold(d) == 3);
}

TEST_CASE("classify_pth_power_iterate examples") {
  auto r = classify_pth_power_iterate({2, -460}, 22, 3);
  CHECK(r.kind == IterateClassification::Kind::BelowThreshold);
  REQUIRE(r.witness);
  CHECK(*r.witness == PowerWitness{1, 114, 2});

  r = classify_pth_power_iterate({2, -2}, 1, 4);
  REQUIRE(r.kind == IterateClassification::Kind::Classified);
  CHECK(r.statement == 1);
  CHECK(r.witness->value() == -1);
  CHECK(r.shape_holds);

  r = classify_pth_power_iterate({3, -504}, 8, 3);
  REQUIRE(r.kind == IterateClassification::Kind::Classified);
  CHECK(r.statement == 2);
  CHECK(r.witness->value() == 8);
  CHECK(*r.witness == PowerWitness{1, 2, 3});
  CHECK(r.shape_holds);

  r = classify_pth_power_iterate({2, 1}, 0, 4);  // 0,1,2,5,26: not a square
  CHECK(r.kind == IterateClassification::Kind::NoPower);

  CHECK_THROWS_AS(classify_pth_power_iterate({2, 0}, 3, 4), std::invalid_argument);
}

TEST_CASE("statements 3 and 4") {
  // d = 4, c = -252: 4 = 2^2 is fixed, -4 maps onto it.
  auto r = classify_pth_power_iterate({4, -252}, -4, 3);
  REQUIRE(r.kind == IterateClassification::Kind::Classified);
  CHECK(r.statement == 3);
  CHECK(r.shape_holds);

  r = classify_pth_power_iterate({4, -1}, 0, 3);
  REQUIRE(r.kind == IterateClassification::Kind::Classified);
  CHECK(r.statement == 4);
  CHECK(r.shape_holds);
}

TEST_CASE("classified iterates have preperiodic alpha and periodic value") {
  for (unsigned d = 2; d <= 4; ++d) {
    const std::size_t N = power_iterate_threshold(d);
    for (long c = -60; c <= 60; ++c) {
      if (c == 0) continue;
      const UnicriticalPoly f(d, c);
      const long bound = 2 * std::labs(c) + 10;
      for (long a = -bound; a <= bound; ++a) {
        const auto r = classify_pth_power_iterate(f, a, N);
        if (r.kind != IterateClassification::Kind::Classified) continue;
        CAPTURE(d);
        CAPTURE(c);
        CAPTURE(a);
        CHECK(orbit_classify(f, a).preperiodic());
        CHECK(orbit_classify(f, r.witness->value()).periodic());
        CHECK(r.shape_holds);
        CHECK(statement_shape_holds(f, r));
      }
    }
  }
}
