#include "fourfold/poly.hpp"

#include "fourfold/error.hpp"

namespace fourfold {

Mono Mono::var(int i, int k) {
  check(i >= 0 && i < kMaxVars, Err::Internal, "Mono::var index");
  Mono m;
  m.e[i] = static_cast<uint8_t>(k);
  return m;
}

Mono Mono::of(std::initializer_list<int> exps) {
  Mono m;
  int i = 0;
  for (int x : exps) {
    check(i < kMaxVars, Err::Internal, "Mono::of too many exponents");
    m.e[i++] = static_cast<uint8_t>(x);
  }
  return m;
}

Mono Mono::times(const Mono& o) const {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = e[i] + o.e[i];
    check(s < 256, Err::Internal, "Mono::times exponent overflow");
    m.e[i] = static_cast<uint8_t>(s);
  }
  return m;
}

bool Mono::divisible_by(const Mono& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] < o.e[i]) return false;
  return true;
}

Mono Mono::divide(const Mono& o) const {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
  return m;
}

int QPoly::deg() const {
  int d = -1;
  for (auto& [m, c] : t) d = std::max(d, m.deg());
  return d;
}

Rat QPoly::coeff(const Mono& m) const {
  auto it = t.find(m);
  return it == t.end() ? Rat(0) : it->second;
}

void QPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = t.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

QPoly QPoly::constant(int nvars, const Rat& c) {
  QPoly f(nvars);
  f.add_term(Mono::one(), c);
  return f;
}

QPoly QPoly::variable(int nvars, int i) {
  QPoly f(nvars);
  f.add_term(Mono::var(i), Rat(1));
  return f;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  check(n == o.n, Err::Internal, "QPoly: variable count mismatch");
  for (auto& [m, c] : o.t) add_term(m, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  check(n == o.n, Err::Internal, "QPoly: variable count mismatch");
  for (auto& [m, c] : o.t) add_term(m, -c);
  return *this;
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  check(a.n == b.n, Err::Internal, "QPoly: variable count mismatch");
  QPoly r(a.n);
  for (auto& [ma, ca] : a.t)
    for (auto& [mb, cb] : b.t) r.add_term(ma.times(mb), ca * cb);
  return r;
}

QPoly operator*(const Rat& c, QPoly a) {
  if (c == 0) return QPoly(a.n);
  for (auto& [m, v] : a.t) v *= c;
  return a;
}

QPoly operator-(QPoly a) {
  for (auto& [m, v] : a.t) v = -v;
  return a;
}

QPoly partial(const QPoly& f, int i) {
  QPoly r(f.n);
  for (auto& [m, c] : f.t) {
    if (m.e[i] == 0) continue;
    Mono d = m;
    d.e[i] -= 1;
    r.add_term(d, c * m.e[i]);
  }
  return r;
}

QPoly pow_small(const QPoly& f, int k) {
  QPoly r = QPoly::constant(f.n, Rat(1));
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

QPoly substitute(const QPoly& f, const std::vector<QPoly>& images) {
  check(static_cast<int>(images.size()) == f.n, Err::Internal, "substitute: image count");
  int nn = f.n ? images[0].n : 0;
  QPoly r(nn);
  for (auto& [m, c] : f.t) {
    QPoly term = QPoly::constant(nn, c);
    for (int i = 0; i < f.n; ++i)
      if (m.e[i]) term = term * pow_small(images[i], m.e[i]);
    r += term;
  }
  return r;
}

Rat eval_at(const QPoly& f, const std::vector<Rat>& x) {
  check(static_cast<int>(x.size()) == f.n, Err::Internal, "eval_at: point size");
  Rat total(0);
  for (auto& [m, c] : f.t) {
    Rat v = c;
    for (int i = 0; i < f.n; ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= x[i];
    total += v;
  }
  return total;
}

QPoly graded_part(const QPoly& f, int d) {
  QPoly r(f.n);
  for (auto& [m, c] : f.t)
    if (m.deg() == d) r.add_term(m, c);
  return r;
}

QPoly truncate_deg(const QPoly& f, int maxdeg) {
  QPoly r(f.n);
  for (auto& [m, c] : f.t)
    if (m.deg() <= maxdeg) r.add_term(m, c);
  return r;
}

QPoly set_var(const QPoly& f, int k, const Rat& value) {
  check(k >= 0 && k < f.n, Err::Internal, "set_var index");
  QPoly r(f.n - 1);
  for (auto& [m, c] : f.t) {
    Rat v = c;
    for (int j = 0; j < m.e[k]; ++j) v *= value;
    if (v == 0) continue;
    Mono mm;
    for (int i = 0, o = 0; i < f.n; ++i)
      if (i != k) mm.e[o++] = m.e[i];
    r.add_term(mm, v);
  }
  return r;
}

QPoly widen(const QPoly& f, int nvars) {
  check(nvars >= f.n, Err::Internal, "widen: shrinking");
  QPoly r = f;
  r.n = nvars;
  return r;
}

int F2Poly::deg() const {
  int d = -1;
  for (auto& m : t) d = std::max(d, m.deg());
  return d;
}

void F2Poly::flip(const Mono& m) {
  auto it = t.find(m);
  if (it == t.end())
    t.insert(m);
  else
    t.erase(it);
}

F2Poly reduce_mod2(const QPoly& f) {
  F2Poly r(f.n);
  for (auto& [m, c] : f.t) {
    check(mpz_odd_p(c.get_den().get_mpz_t()), Err::Math,
          "EvenDenominator: coefficient has even denominator, no reduction mod 2");
    bool numodd = mpz_odd_p(c.get_num().get_mpz_t());
    if (numodd) r.flip(m);
  }
  return r;
}

F2Poly f2_add(const F2Poly& a, const F2Poly& b) {
  check(a.n == b.n, Err::Internal, "F2Poly: variable count mismatch");
  F2Poly r = a;
  for (auto& m : b.t) r.flip(m);
  return r;
}

F2Poly f2_mul(const F2Poly& a, const F2Poly& b) {
  check(a.n == b.n, Err::Internal, "F2Poly: variable count mismatch");
  F2Poly r(a.n);
  for (auto& ma : a.t)
    for (auto& mb : b.t) r.flip(ma.times(mb));
  return r;
}

F2Poly f2_partial(const F2Poly& f, int i) {
  F2Poly r(f.n);
  for (auto& m : f.t) {
    if (m.e[i] % 2 == 0) continue;
    Mono d = m;
    d.e[i] -= 1;
    r.flip(d);
  }
  return r;
}

F2Poly f2_substitute(const F2Poly& f, const std::vector<F2Poly>& images) {
  check(static_cast<int>(images.size()) == f.n, Err::Internal, "f2_substitute: image count");
  int nn = f.n ? images[0].n : 0;
  F2Poly r(nn);
  for (auto& m : f.t) {
    F2Poly term(nn);
    term.flip(Mono::one());
    for (int i = 0; i < f.n; ++i)
      for (int k = 0; k < m.e[i]; ++k) term = f2_mul(term, images[i]);
    r = f2_add(r, term);
  }
  return r;
}

static void mono_rec(int nvars, int pos, int left, Mono cur, std::vector<Mono>& out) {
  if (pos == nvars) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur.e[pos] = static_cast<uint8_t>(k);
    mono_rec(nvars, pos + 1, left - k, cur, out);
  }
  cur.e[pos] = 0;
}

std::vector<Mono> monomials_of_degree(int nvars, int d) {
  std::vector<Mono> out;
  mono_rec(nvars, 0, d, Mono::one(), out);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

std::vector<Mono> monomials_below(int nvars, int degbound) {
  std::vector<Mono> out;
  for (int d = 0; d < degbound; ++d) {
    auto v = monomials_of_degree(nvars, d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace fourfold
