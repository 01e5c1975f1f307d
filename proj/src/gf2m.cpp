#include "fourfold/gf2m.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "fourfold/error.hpp"

namespace fourfold {
namespace gf2 {

namespace {

// primitive polynomials, degree 1..12
constexpr std::array<uint32_t, kMaxM + 1> kModuli = {
    0,      0x3,   0x7,   0xB,   0x13,  0x25,   0x43,
    0x83,   0x11D, 0x211, 0x409, 0x805, 0x1053,
};

}  // namespace

uint32_t mul_polybasis(uint32_t a, uint32_t b, uint32_t modulus, int m) {
  uint64_t acc = 0;
  uint64_t aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int bit = 2 * m - 2; bit >= m; --bit)
    if (acc >> bit & 1) acc ^= static_cast<uint64_t>(modulus) << (bit - m);
  return static_cast<uint32_t>(acc);
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t FieldCtx::sqrt(uint32_t a) const { return pow(a, q / 2); }

namespace {

std::unique_ptr<FieldCtx> build_field(int m) {
  check(m >= 1 && m <= kMaxM, Err::Usage, "field: m out of range 1..12");
  auto f = std::make_unique<FieldCtx>();
  f->m = m;
  f->q = 1u << m;
  f->modulus = kModuli[m];
  uint32_t q = f->q;

  f->logt.assign(q, 0);
  f->expt.assign(2 * (q - 1) + 1, 0);
  uint32_t gen = m == 1 ? 1 : 2;  // class of t generates for a primitive modulus
  uint32_t x = 1;
  for (uint32_t i = 0; i < q - 1; ++i) {
    check(!(i > 0 && x == 1), Err::Internal,
          "field self-test failed: modulus not primitive for m=" + std::to_string(m));
    f->expt[i] = static_cast<uint16_t>(x);
    f->expt[i + (q - 1)] = static_cast<uint16_t>(x);
    f->logt[x] = static_cast<uint16_t>(i);
    x = mul_polybasis(x, gen, f->modulus, m);
  }
  check(x == 1, Err::Internal,
        "field self-test failed: x^(q-1) != 1 for m=" + std::to_string(m));

  // trace via repeated squaring in the polynomial basis
  f->trace_.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    uint32_t s = 0, t = a;
    for (int i = 0; i < m; ++i) {
      s ^= t;
      t = mul_polybasis(t, t, f->modulus, m);
    }
    check(s == 0 || s == 1, Err::Internal, "field self-test failed: trace not in F2");
    f->trace_[a] = static_cast<uint8_t>(s);
  }

  // solution table for w^2 + w = u
  f->asol.assign(q, 0);
  std::vector<uint8_t> seen(q, 0);
  for (uint32_t w = 0; w < q; ++w) {
    uint32_t u = mul_polybasis(w, w, f->modulus, m) ^ w;
    if (!seen[u]) {
      f->asol[u] = static_cast<uint16_t>(w);
      seen[u] = 1;
    }
  }
  for (uint32_t u = 0; u < q; ++u)
    check(seen[u] == (f->trace_[u] == 0), Err::Internal,
          "field self-test failed: Artin-Schreier image mismatch");
  return f;
}

}  // namespace

const FieldCtx& field(int m) {
  static std::array<std::unique_ptr<FieldCtx>, kMaxM + 1> cache;
  static std::mutex mu;
  check(m >= 1 && m <= kMaxM, Err::Usage, "field: m out of range 1..12");
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[m]) cache[m] = build_field(m);
  return *cache[m];
}

ASRoots solve_artin_schreier(const FieldCtx& f, uint32_t b, uint32_t c) {
  if (b == 0) return {ASRoots::DoubleRoot, f.sqrt(c), f.sqrt(c)};
  uint32_t binv2 = f.sq(f.inv(b));
  uint32_t u = f.mul(c, binv2);
  if (f.trace(u)) return {ASRoots::NoRoot};
  uint32_t w = f.asol[u];
  uint32_t r0 = f.mul(b, w), r1 = f.mul(b, w ^ 1);
  return {ASRoots::TwoRoots, r0, r1};
}

uint32_t eval_f2poly(const F2Poly& f, const FieldCtx& fld, const std::vector<uint32_t>& x) {
  check(static_cast<int>(x.size()) == f.n, Err::Internal, "eval_f2poly: point size");
  uint32_t acc = 0;
  for (auto& m : f.t) {
    uint32_t v = 1;
    for (int i = 0; i < f.n && v; ++i)
      for (int k = 0; k < m.e[i]; ++k) v = fld.mul(v, x[i]);
    acc ^= v;
  }
  return acc;
}

}  // namespace gf2
}  // namespace fourfold
