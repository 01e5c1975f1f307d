#include "fourfold/unipoly.hpp"

#include <map>

#include "fourfold/error.hpp"
#include "fourfold/linalg.hpp"

namespace fourfold {

UPoly UPoly::constant(const Rat& v) { return UPoly(std::vector<Rat>{v}); }

UPoly UPoly::monomial(int k, const Rat& v) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = v;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat UPoly::eval(const Rat& x) const {
  Rat v(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.zero() || b.zero()) return UPoly();
  std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rat& s, UPoly a) {
  for (auto& v : a.c) v *= s;
  a.trim();
  return a;
}

UDivMod divmod(const UPoly& a, const UPoly& b) {
  check(!b.zero(), Err::Internal, "divmod by zero polynomial");
  UPoly r = a;
  std::vector<Rat> q(a.c.size() > b.c.size() - 1 ? a.c.size() - b.c.size() + 1 : 0, Rat(0));
  Rat lead = b.c.back();
  while (!r.zero() && r.deg() >= b.deg()) {
    int k = r.deg() - b.deg();
    Rat f = r.c.back() / lead;
    q[k] = f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[k + i] -= f * b.c[i];
    r.trim();
  }
  return {UPoly(std::move(q)), std::move(r)};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.zero()) {
    UPoly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.zero()) a = Rat(1) / a.c.back() * a;
  return a;
}

UPoly derivative(const UPoly& a) {
  if (a.deg() <= 0) return UPoly();
  std::vector<Rat> c(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * a.c[i];
  return UPoly(std::move(c));
}

UPoly squarefree_part(const UPoly& a) {
  if (a.deg() <= 0) return a;
  UPoly g = gcd(a, derivative(a));
  return divmod(a, g).quot;
}

bool divides(const UPoly& d, const UPoly& a) {
  if (d.zero()) return a.zero();
  return divmod(a, d).rem.zero();
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const UPoly& cyclotomic(int n) {
  static std::map<int, UPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // t^n - 1 divided by all proper cyclotomic factors
  std::vector<Rat> tn(n + 1, Rat(0));
  tn[0] = -1;
  tn[n] = 1;
  UPoly f(std::move(tn));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = divmod(f, cyclotomic(d)).quot;
  return cache.emplace(n, std::move(f)).first->second;
}

std::vector<Int> primitive_integer(const UPoly& a) {
  Int lcm_den(1);
  for (auto& v : a.c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Int> ic(a.c.size());
  Int content(0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    Rat scaled = a.c[i] * Rat(lcm_den);
    check(scaled.get_den() == 1, Err::Internal, "primitive_integer: scaling failed");
    ic[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic[i].get_mpz_t());
  }
  if (content == 0) return ic;
  if (!ic.empty() && ic.back() < 0) content = -content;
  for (auto& v : ic) v /= content;
  return ic;
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m, const Int& bound) {
  Int r0 = m, r1 = ((a % m) + m) % m;
  Int s0 = 0, s1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Rat res = rat(r1, s1);
  return res;
}

namespace {

Int eval_int_mod(const std::vector<Int>& ic, const Int& x, const Int& mod) {
  Int v = 0;
  for (auto it = ic.rbegin(); it != ic.rend(); ++it) v = (v * x + *it) % mod;
  return v;
}

// rational roots of a squarefree primitive integer polynomial of degree >= 3
void padic_roots(const std::vector<Int>& ic, const UPoly& f, std::vector<Rat>& out) {
  std::vector<Int> dc(ic.size() - 1);
  for (size_t i = 1; i < ic.size(); ++i) dc[i - 1] = ic[i] * static_cast<long>(i);

  // prime keeping the reduction squarefree of full degree
  uint32_t p = 0;
  for (uint32_t cand = 1009;; cand += 2) {
    if (!is_prime_u64(cand)) continue;
    ZpUPoly fp = zp_reduce(ic, cand);
    if (fp.deg() != f.deg()) continue;
    ZpUPoly g = zp_gcd(fp, zp_derivative(fp));
    if (g.deg() == 0) {
      p = cand;
      break;
    }
    check(cand < 100000, Err::Internal, "rational_roots: no good prime found");
  }

  // roots are n/d with n | ic[0] and d | lead, so both bounded
  Int bound = abs(ic.back());
  if (ic[0] != 0 && abs(ic[0]) > bound) bound = abs(ic[0]);
  Int target = 2 * bound * bound + 1;

  ZpUPoly fp = zp_reduce(ic, p);
  for (uint32_t r = 0; r < p; ++r) {
    // evaluate mod p
    uint64_t v = 0;
    for (auto it = fp.c.rbegin(); it != fp.c.rend(); ++it) v = (v * r + *it) % p;
    if (v) continue;
    // Newton lift r to a root mod p^(2^k) >= target
    Int M = p, root = r;
    Int deriv = eval_int_mod(dc, root, M);
    check(deriv % p != 0, Err::Internal, "rational_roots: derivative vanished");
    Int w;  // inverse of f'(root) mod M, lifted alongside
    {
      Int d0 = ((deriv % Int(p)) + p) % p;
      mpz_class inv;
      check(mpz_invert(inv.get_mpz_t(), d0.get_mpz_t(), Int(p).get_mpz_t()) != 0, Err::Internal,
            "rational_roots: no inverse");
      w = inv;
    }
    while (M < target) {
      M = M * M;
      // w <- w (2 - f'(root) w) mod M
      w = (w * (2 - eval_int_mod(dc, root, M) * w % M)) % M;
      w = ((w % M) + M) % M;
      root = (root - eval_int_mod(ic, root, M) * w) % M;
      root = ((root % M) + M) % M;
    }
    auto cand = rational_reconstruct(root, M, bound);
    if (!cand) continue;
    if (f.eval(*cand) == 0) out.push_back(*cand);
  }
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& a) {
  std::vector<Rat> out;
  if (a.deg() <= 0) return out;
  UPoly f = squarefree_part(a);
  if (f.coeff(0) == 0) {
    out.push_back(Rat(0));
    std::vector<Rat> shifted(f.c.begin() + 1, f.c.end());
    f = UPoly(std::move(shifted));
  }
  if (f.deg() == 1) {
    out.push_back(-f.c[0] / f.c[1]);
  } else if (f.deg() == 2) {
    Rat disc = f.c[1] * f.c[1] - 4 * f.c[2] * f.c[0];
    auto s = rat_sqrt_exact(disc);
    if (s) {
      out.push_back((-f.c[1] + *s) / (2 * f.c[2]));
      if (*s != 0) out.push_back((-f.c[1] - *s) / (2 * f.c[2]));
    }
  } else if (f.deg() >= 3) {
    padic_roots(primitive_integer(f), f, out);
  }
  return out;
}

void ZpUPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZpUPoly zp_reduce(const std::vector<Int>& ic, uint32_t p) {
  ZpUPoly r;
  r.p = p;
  r.c.resize(ic.size());
  for (size_t i = 0; i < ic.size(); ++i) r.c[i] = mod_p(ic[i], p);
  r.trim();
  return r;
}

ZpUPoly zp_rem(const ZpUPoly& a, const ZpUPoly& mod) {
  check(!mod.c.empty(), Err::Internal, "zp_rem by zero");
  ZpUPoly r = a;
  uint64_t p = mod.p;
  // make divisor monic on the fly
  uint64_t lead = mod.c.back(), inv = 1, base = lead, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  while (!r.c.empty() && r.c.size() >= mod.c.size()) {
    uint64_t f = r.c.back() * inv % p;
    size_t k = r.c.size() - mod.c.size();
    if (f)
      for (size_t i = 0; i < mod.c.size(); ++i) {
        uint64_t sub = f * mod.c[i] % p;
        uint64_t cur = r.c[k + i];
        r.c[k + i] = static_cast<uint32_t>((cur + p - sub) % p);
      }
    r.c.pop_back();
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
  }
  return r;
}

ZpUPoly zp_mulmod(const ZpUPoly& a, const ZpUPoly& b, const ZpUPoly& mod) {
  ZpUPoly prod;
  prod.p = a.p;
  if (a.c.empty() || b.c.empty()) return prod;
  prod.c.assign(a.c.size() + b.c.size() - 1, 0);
  uint64_t p = a.p;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    uint64_t ai = a.c[i];
    for (size_t j = 0; j < b.c.size(); ++j)
      prod.c[i + j] = static_cast<uint32_t>((prod.c[i + j] + ai * b.c[j]) % p);
  }
  prod.trim();
  return zp_rem(prod, mod);
}

ZpUPoly zp_gcd(ZpUPoly a, ZpUPoly b) {
  while (!b.c.empty()) {
    ZpUPoly r = zp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ZpUPoly zp_pow_t(const Int& e, const ZpUPoly& mod) {
  ZpUPoly result;
  result.p = mod.p;
  result.c = {1};
  ZpUPoly base;
  base.p = mod.p;
  base.c = {0, 1};
  base = zp_rem(base, mod);
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = zp_mulmod(result, base, mod);
    base = zp_mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

ZpUPoly zp_derivative(const ZpUPoly& a) {
  ZpUPoly r;
  r.p = a.p;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = static_cast<uint32_t>(static_cast<uint64_t>(a.c[i]) * (i % a.p) % a.p);
  r.trim();
  return r;
}

}  // namespace fourfold
