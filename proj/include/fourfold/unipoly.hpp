#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourfold/rat.hpp"

namespace fourfold {

// dense univariate polynomial over Q, coefficients ascending
struct UPoly {
  std::vector<Rat> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rat& v);
  static UPoly monomial(int k, const Rat& v);

  void trim();
  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool zero() const { return c.empty(); }
  Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : Rat(0); }
  Rat eval(const Rat& x) const;
  bool operator==(const UPoly& o) const { return c == o.c; }
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Rat& s, UPoly a);

struct UDivMod {
  UPoly quot, rem;
};
UDivMod divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic
UPoly derivative(const UPoly& a);
UPoly squarefree_part(const UPoly& a);
bool divides(const UPoly& d, const UPoly& a);

int euler_phi(int n);
const UPoly& cyclotomic(int n);  // memoized, integer coefficients

// clears denominators and content; returns primitive integer polynomial with
// positive leading coefficient
std::vector<Int> primitive_integer(const UPoly& a);

// all rational roots, each listed once; exact (p-adic lifting with exact
// verification for degree >= 3)
std::vector<Rat> rational_roots(const UPoly& a);
// x with x = n/d mod m, |n| <= bound, 0 < d <= bound
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m, const Int& bound);

// dense univariate over F_p, p < 2^31
struct ZpUPoly {
  uint32_t p = 0;
  std::vector<uint32_t> c;

  void trim();
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

ZpUPoly zp_reduce(const std::vector<Int>& ic, uint32_t p);
ZpUPoly zp_mulmod(const ZpUPoly& a, const ZpUPoly& b, const ZpUPoly& mod);
ZpUPoly zp_rem(const ZpUPoly& a, const ZpUPoly& mod);
ZpUPoly zp_gcd(ZpUPoly a, ZpUPoly b);
// t^e mod m, e arbitrary precision
ZpUPoly zp_pow_t(const Int& e, const ZpUPoly& mod);
ZpUPoly zp_derivative(const ZpUPoly& a);

}  // namespace fourfold
