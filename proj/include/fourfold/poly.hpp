#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fourfold/rat.hpp"

namespace fourfold {

inline constexpr int kMaxVars = 6;

struct Mono {
  std::array<uint8_t, kMaxVars> e{};

  int deg() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
  bool is_one() const { return deg() == 0; }

  static Mono one() { return Mono{}; }
  static Mono var(int i, int k = 1);
  static Mono of(std::initializer_list<int> exps);

  Mono times(const Mono& o) const;
  bool divisible_by(const Mono& o) const;
  Mono divide(const Mono& o) const;  // requires divisibility
};

// graded reverse lexicographic with x0 > x1 > ... > x5
struct GrevlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

// plain lexicographic with x0 > x1 > ... > x5
struct LexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

// sparse multivariate polynomial over Q
struct QPoly {
  int n = 0;  // variables x0..x(n-1)
  std::map<Mono, Rat, GrevlexLess> t;

  explicit QPoly(int nvars = 0) : n(nvars) {}

  bool zero() const { return t.empty(); }
  int deg() const;
  size_t terms() const { return t.size(); }
  Rat coeff(const Mono& m) const;
  void add_term(const Mono& m, const Rat& c);

  static QPoly constant(int nvars, const Rat& c);
  static QPoly variable(int nvars, int i);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  bool operator==(const QPoly& o) const { return n == o.n && t == o.t; }
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rat& c, QPoly a);
QPoly operator-(QPoly a);

QPoly partial(const QPoly& f, int i);
QPoly pow_small(const QPoly& f, int k);
// x_i -> images[i]; images live in a common variable count
QPoly substitute(const QPoly& f, const std::vector<QPoly>& images);
Rat eval_at(const QPoly& f, const std::vector<Rat>& x);
// keep only terms of total degree d / of degree <= d
QPoly graded_part(const QPoly& f, int d);
QPoly truncate_deg(const QPoly& f, int maxdeg);
// substitute x_k = value and drop the variable (indices above k shift down)
QPoly set_var(const QPoly& f, int k, const Rat& value);
// reinterpret in a larger variable count
QPoly widen(const QPoly& f, int nvars);

// sparse multivariate polynomial over F2 (monomial set, xor semantics)
struct F2Poly {
  int n = 0;
  std::set<Mono, GrevlexLess> t;

  explicit F2Poly(int nvars = 0) : n(nvars) {}
  bool zero() const { return t.empty(); }
  int deg() const;
  void flip(const Mono& m);
  bool operator==(const F2Poly& o) const { return n == o.n && t == o.t; }
};

// error if any denominator is even
F2Poly reduce_mod2(const QPoly& f);
F2Poly f2_add(const F2Poly& a, const F2Poly& b);
F2Poly f2_mul(const F2Poly& a, const F2Poly& b);
F2Poly f2_partial(const F2Poly& f, int i);
// x_i -> images[i] over F2
F2Poly f2_substitute(const F2Poly& f, const std::vector<F2Poly>& images);

// monomials of given degree / of degree < bound, in increasing GrevlexLess order
std::vector<Mono> monomials_of_degree(int nvars, int d);
std::vector<Mono> monomials_below(int nvars, int degbound);

}  // namespace fourfold
