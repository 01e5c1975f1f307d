#pragma once
#include <cstdint>
#include <vector>

#include "fourfold/poly.hpp"

namespace fourfold {
namespace gf2 {

inline constexpr int kMaxM = 12;

// log/exp table field context for F_{2^m}; elements are bit-coded polynomials
struct FieldCtx {
  int m = 0;
  uint32_t q = 0;        // 2^m
  uint32_t modulus = 0;  // bit-coded primitive polynomial, degree m
  std::vector<uint16_t> logt;   // index by element, valid for x != 0
  std::vector<uint16_t> expt;   // doubled: expt[i] = g^i for i in [0, 2(q-1))
  std::vector<uint8_t> trace_;  // per element
  std::vector<uint16_t> asol;   // asol[u] = w with w^2 + w = u, valid when trace_[u] == 0

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (!a || !b) return 0;
    return expt[logt[a] + logt[b]];
  }
  uint32_t sq(uint32_t a) const { return mul(a, a); }
  uint32_t inv(uint32_t a) const { return expt[q - 1 - logt[a]]; }
  uint32_t div(uint32_t a, uint32_t b) const {
    if (!a) return 0;
    return expt[logt[a] + q - 1 - logt[b]];
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t sqrt(uint32_t a) const;  // squaring is a bijection in char 2
  int trace(uint32_t a) const { return trace_[a]; }
};

// lazily built, self-tested contexts for m = 1..12
const FieldCtx& field(int m);

// carry-less product reduced by the bit-coded modulus; independent of tables
uint32_t mul_polybasis(uint32_t a, uint32_t b, uint32_t modulus, int m);

struct ASRoots {
  enum Kind { NoRoot, DoubleRoot, TwoRoots } kind;
  uint32_t r0 = 0, r1 = 0;
};

// roots of z^2 + b z + c
ASRoots solve_artin_schreier(const FieldCtx& f, uint32_t b, uint32_t c);

// evaluate an F2 polynomial at a point with coordinates in F_{2^m}
uint32_t eval_f2poly(const F2Poly& f, const FieldCtx& fld, const std::vector<uint32_t>& x);

}  // namespace gf2
}  // namespace fourfold
