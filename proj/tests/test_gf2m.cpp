#include <doctest.h>

#include <random>

#include "fourfold/error.hpp"
#include "fourfold/gf2m.hpp"
#include "fourfold/poly_io.hpp"

using namespace fourfold;
using namespace fourfold::gf2;

TEST_CASE("table product matches polynomial-basis product") {
  for (int m : {1, 2, 3, 4, 8}) {
    const FieldCtx& f = field(m);
    for (uint32_t a = 0; a < f.q; ++a)
      for (uint32_t b = 0; b < f.q; ++b)
        CHECK(f.mul(a, b) == mul_polybasis(a, b, f.modulus, m));
  }
  std::mt19937_64 rng(3);
  for (int m : {9, 10, 11, 12}) {
    const FieldCtx& f = field(m);
    for (int trial = 0; trial < 2000; ++trial) {
      uint32_t a = static_cast<uint32_t>(rng() % f.q), b = static_cast<uint32_t>(rng() % f.q);
      CHECK(f.mul(a, b) == mul_polybasis(a, b, f.modulus, m));
    }
  }
}

TEST_CASE("field axioms on samples") {
  const FieldCtx& f = field(11);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    uint32_t a = static_cast<uint32_t>(rng() % f.q);
    uint32_t b = 1 + static_cast<uint32_t>(rng() % (f.q - 1));
    CHECK(f.mul(a, f.inv(b)) == f.div(a, b));
    CHECK(f.mul(b, f.inv(b)) == 1);
    CHECK(f.sq(f.sqrt(a)) == a);
    CHECK(f.pow(b, f.q - 1) == 1);
  }
}

TEST_CASE("trace is additive and F2-valued with the right fiber sizes") {
  for (int m : {1, 2, 3, 6, 11}) {
    const FieldCtx& f = field(m);
    uint32_t zeros = 0;
    for (uint32_t a = 0; a < f.q; ++a)
      if (f.trace(a) == 0) ++zeros;
    CHECK(zeros == f.q / 2);  // trace is a surjective F2-linear form
    std::mt19937_64 rng(m);
    for (int trial = 0; trial < 200; ++trial) {
      uint32_t a = static_cast<uint32_t>(rng() % f.q), b = static_cast<uint32_t>(rng() % f.q);
      CHECK((f.trace(a) ^ f.trace(b)) == f.trace(a ^ b));
    }
  }
}

TEST_CASE("artin-schreier solver classifies all quadratics") {
  for (int m : {2, 3, 4, 7}) {
    const FieldCtx& f = field(m);
    for (uint32_t b = 0; b < f.q; ++b)
      for (uint32_t c = 0; c < f.q; ++c) {
        // oracle: exhaustive root count of z^2 + b z + c
        std::vector<uint32_t> roots;
        for (uint32_t z = 0; z < f.q; ++z)
          if ((f.sq(z) ^ f.mul(b, z) ^ c) == 0) roots.push_back(z);
        ASRoots sol = solve_artin_schreier(f, b, c);
        if (b == 0) {
          REQUIRE(roots.size() == 1);
          CHECK(sol.kind == ASRoots::DoubleRoot);
          CHECK(sol.r0 == roots[0]);
        } else if (roots.empty()) {
          CHECK(sol.kind == ASRoots::NoRoot);
        } else {
          REQUIRE(roots.size() == 2);
          CHECK(sol.kind == ASRoots::TwoRoots);
          CHECK(((sol.r0 == roots[0] && sol.r1 == roots[1]) ||
                 (sol.r0 == roots[1] && sol.r1 == roots[0])));
        }
      }
  }
}

TEST_CASE("f2 polynomial evaluation in extension fields") {
  // x0^2 + x0 x1 over F4: formal exponents, no Frobenius folding
  F2Poly f = reduce_mod2(parse_poly("x0^2 + x0x1", 2));
  const FieldCtx& f4 = field(2);
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = 0; b < 4; ++b)
      CHECK(eval_f2poly(f, f4, {a, b}) == (f4.sq(a) ^ f4.mul(a, b)));
}
