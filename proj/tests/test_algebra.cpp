#include <doctest.h>

#include <random>

#include "fourfold/error.hpp"
#include "fourfold/linalg.hpp"
#include "fourfold/poly.hpp"
#include "fourfold/poly_io.hpp"
#include "fourfold/rat.hpp"
#include "fourfold/unipoly.hpp"

using namespace fourfold;

TEST_CASE("rationals stay reduced with positive denominator") {
  Rat r = rat(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(rat_str(r) == "-3/2");
  CHECK(*rat_parse("-3/2") == r);
  CHECK(!rat_parse("1/0").has_value());
  CHECK(rat_sqrt_exact(rat(9, 4)).value() == rat(3, 2));
  CHECK(!rat_sqrt_exact(rat(2)).has_value());
}

TEST_CASE("mod_p reduces rationals") {
  uint32_t p = 1000003;
  Rat r = rat(-3, 2);
  uint64_t v = mod_p(r, p);
  CHECK((2 * v) % p == p - 3);
}

TEST_CASE("grevlex orders by degree then reverse lex") {
  GrevlexLess less;
  Mono x0 = Mono::var(0), x1 = Mono::var(1);
  CHECK(less(x1, x0));                         // x0 > x1
  CHECK(less(x0, Mono::var(5, 2)));            // degree dominates
  CHECK(less(Mono::of({0, 1, 1}), Mono::of({1, 0, 1})));
  CHECK(!less(x0, x0));
}

TEST_CASE("poly product difference of squares") {
  QPoly a = parse_poly("x0 + x1", 6);
  QPoly b = parse_poly("x0 - x1", 6);
  CHECK(a * b == parse_poly("x0^2 - x1^2", 6));
}

TEST_CASE("freshman dream over F2") {
  F2Poly s = reduce_mod2(parse_poly("x0 + x1", 6));
  CHECK(f2_mul(s, s) == reduce_mod2(parse_poly("x0^2 + x1^2", 6)));
}

TEST_CASE("reduction mod 2 rejects even denominators") {
  QPoly f = parse_poly("1/2x0^3", 6);
  CHECK_THROWS_WITH_AS(reduce_mod2(f), doctest::Contains("EvenDenominator"), Error);
  CHECK(reduce_mod2(parse_poly("1/3x0^3 + 2x1^3", 6)) == reduce_mod2(parse_poly("x0^3", 6)));
}

TEST_CASE("parser handles the documented grammar") {
  QPoly f = parse_poly(" -x0^2*x1 + 3/4 x2 x3 - 2x4^2x5 ", 6);
  CHECK(f.coeff(Mono::of({2, 1})) == -1);
  CHECK(f.coeff(Mono::of({0, 0, 1, 1})) == rat(3, 4));
  CHECK(f.coeff(Mono::of({0, 0, 0, 0, 2, 1})) == -2);
  CHECK_THROWS_AS(parse_poly("x6", 6), Error);
  CHECK_THROWS_AS(parse_poly("x0 + + ", 6), Error);
  CHECK_THROWS_AS(parse_poly("3//4x0", 6), Error);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-50, 50), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    QPoly f(6);
    auto monos = monomials_of_degree(6, 3);
    for (auto& m : monos)
      if (rng() % 3 == 0) f.add_term(m, rat(coeff(rng), den(rng)));
    QPoly g = parse_poly(poly_str(f), 6);
    CHECK(g == f);
  }
}

TEST_CASE("partial derivative is linear over substitution") {
  QPoly f = parse_poly("x0^2x1 - 3x1x2^2 + x0x1x2", 6);
  QPoly sum = QPoly(6);
  for (int i = 0; i < 6; ++i) sum += QPoly::variable(6, i) * partial(f, i);
  CHECK(sum == rat(3) * f);  // Euler relation for cubics
}

TEST_CASE("set_var drops the variable") {
  QPoly f = parse_poly("x0x1x2 + x5^3 - 2x0x5^2", 6);
  QPoly g = set_var(f, 5, Rat(0));
  CHECK(g.n == 5);
  CHECK(g == parse_poly("x0x1x2", 5));
}

TEST_CASE("monomial enumeration counts") {
  CHECK(monomials_of_degree(6, 3).size() == 56);
  CHECK(monomials_of_degree(5, 3).size() == 35);
  CHECK(monomials_below(4, 7).size() == 210);
}

TEST_CASE("cyclotomic polynomials match known values") {
  CHECK(cyclotomic(1) == UPoly({Rat(-1), Rat(1)}));
  CHECK(cyclotomic(2) == UPoly({Rat(1), Rat(1)}));
  CHECK(cyclotomic(6) == UPoly({Rat(1), Rat(-1), Rat(1)}));
  CHECK(cyclotomic(12) == UPoly({Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}));
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 22, 33, 46, 966}) {
    CHECK(cyclotomic(n).deg() == euler_phi(n));
    // phi_n divides t^n - 1
    UPoly tn = UPoly::monomial(n, Rat(1)) - UPoly::constant(Rat(1));
    CHECK(divides(cyclotomic(n), tn));
  }
}

TEST_CASE("divmod and gcd basics") {
  UPoly a({Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)});  // t^4 - 1
  UPoly b({Rat(-1), Rat(1)});                          // t - 1
  auto [q, r] = divmod(a, b);
  CHECK(r.zero());
  CHECK(q * b == a);
  UPoly c = UPoly({Rat(1), Rat(1)}) * UPoly({Rat(1), Rat(1)}) * UPoly({Rat(-2), Rat(1)});
  CHECK(squarefree_part(c) == UPoly({Rat(-2), Rat(-1), Rat(1)}));
  CHECK(gcd(c, derivative(c)) == UPoly({Rat(1), Rat(1)}));
}

TEST_CASE("primitive_integer clears denominators and content") {
  UPoly a({rat(1, 2), rat(3, 4), rat(-5, 2)});
  auto ic = primitive_integer(a);
  REQUIRE(ic.size() == 3);
  CHECK(ic[0] == -2);
  CHECK(ic[1] == -3);
  CHECK(ic[2] == 10);
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 2 + static_cast<int>(rng() % 5), c = 2 + static_cast<int>(rng() % 5);
    QMat m(r, c), mt(c, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        Rat v(entry(rng));
        m.at(i, j) = v;
        mt.at(j, i) = v;
      }
    CHECK(rank_of(m) == rank_of(mt));
  }
}

TEST_CASE("modular rank agrees with exact rank on integer matrices") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-9, 9);
  auto primes = random_primes31(2, 99);
  for (int trial = 0; trial < 20; ++trial) {
    int r = 3 + static_cast<int>(rng() % 4), c = 3 + static_cast<int>(rng() % 4);
    QMat m(r, c);
    ZpMat z1(primes[0], r, c), z2(primes[1], r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        int v = entry(rng);
        m.at(i, j) = Rat(v);
        z1.at(i, j) = static_cast<uint32_t>((v % static_cast<int64_t>(primes[0]) + primes[0]) % primes[0]);
        z2.at(i, j) = static_cast<uint32_t>((v % static_cast<int64_t>(primes[1]) + primes[1]) % primes[1]);
      }
    int exact = rank_of(m);
    CHECK(rank_of(z1) == exact);
    CHECK(rank_of(z2) == exact);
  }
}

TEST_CASE("bit matrix rank over F2") {
  BitMat m(3, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  m.set(2, 0);
  m.set(2, 2);  // row3 = row1 + row2
  CHECK(rank_of(m) == 2);
}

TEST_CASE("reduce_against kills pivot coordinates") {
  QMat m(2, 4);
  m.at(0, 0) = 1;
  m.at(0, 2) = 2;
  m.at(1, 1) = 3;
  m.at(1, 3) = -1;
  QMat copy = m;
  Rref r = rref(copy);
  std::vector<Rat> v{Rat(5), Rat(6), Rat(7), Rat(8)};
  auto red = reduce_against(copy, r, v);
  for (int i = 0; i < r.rank; ++i) CHECK(red[r.pivots[i]] == 0);
}

TEST_CASE("prime generator is deterministic and prime") {
  auto a = random_primes31(4, 2024);
  auto b = random_primes31(4, 2024);
  CHECK(a == b);
  for (auto p : a) {
    CHECK(is_prime_u64(p));
    CHECK(p >= (1u << 30));
  }
  CHECK(is_prime_u64(2147483647ull));
  CHECK(!is_prime_u64(2147483647ull * 3));
}
