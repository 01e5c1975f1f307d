#include "fourfold/groebner.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "fourfold/error.hpp"

namespace fourfold {

Mono leading_mono(const QPoly& f) {
  check(!f.zero(), Err::Internal, "leading_mono of zero");
  return f.t.rbegin()->first;
}

namespace {

Rat leading_coeff(const QPoly& f) { return f.t.rbegin()->second; }

// integer primitive with positive leading coefficient
QPoly normalize(QPoly f) {
  if (f.zero()) return f;
  Int lcm_den(1);
  for (auto& [m, c] : f.t) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  Int content(0);
  for (auto& [m, c] : f.t) {
    Int ic = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic.get_mpz_t());
  }
  Rat scale = rat(lcm_den, content);
  if (leading_coeff(f) < 0) scale = -scale;
  return scale * f;
}

Mono lcm_mono(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

bool coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

QPoly spoly(const QPoly& f, const QPoly& g) {
  Mono l = lcm_mono(leading_mono(f), leading_mono(g));
  QPoly mf(f.n), mg(g.n);
  mf.add_term(l.divide(leading_mono(f)), Rat(1) / leading_coeff(f));
  mg.add_term(l.divide(leading_mono(g)), Rat(1) / leading_coeff(g));
  return mf * f - mg * g;
}

}  // namespace

QPoly normal_form(const QPoly& f, const std::vector<QPoly>& gens) {
  QPoly r = f;
  bool reduced = true;
  while (reduced && !r.zero()) {
    reduced = false;
    for (auto it = r.t.rbegin(); it != r.t.rend() && !reduced; ++it) {
      for (auto& g : gens) {
        if (g.zero()) continue;
        Mono lg = leading_mono(g);
        if (!it->first.divisible_by(lg)) continue;
        QPoly mult(r.n);
        mult.add_term(it->first.divide(lg), it->second / leading_coeff(g));
        r -= mult * g;
        reduced = true;
        break;
      }
    }
  }
  return r;
}

GB buchberger(std::vector<QPoly> gens) {
  GB gb;
  check(!gens.empty(), Err::Internal, "buchberger: no generators");
  gb.n = gens[0].n;
  for (auto& f : gens) {
    check(f.n == gb.n, Err::Internal, "buchberger: variable count mismatch");
    if (!f.zero()) gb.g.push_back(normalize(f));
  }
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < gb.g.size(); ++i)
    for (size_t j = i + 1; j < gb.g.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(leading_mono(gb.g[i]), leading_mono(gb.g[j]))) continue;
    QPoly r = normal_form(spoly(gb.g[i], gb.g[j]), gb.g);
    if (r.zero()) continue;
    r = normalize(r);
    for (size_t k = 0; k < gb.g.size(); ++k) pairs.emplace_back(k, gb.g.size());
    gb.g.push_back(r);
  }
  // interreduce
  for (size_t i = 0; i < gb.g.size(); ++i) {
    std::vector<QPoly> others;
    for (size_t j = 0; j < gb.g.size(); ++j)
      if (j != i && !gb.g[j].zero()) others.push_back(gb.g[j]);
    if (others.empty()) break;
    gb.g[i] = normal_form(gb.g[i], others);
    if (!gb.g[i].zero()) gb.g[i] = normalize(gb.g[i]);
  }
  std::erase_if(gb.g, [](const QPoly& f) { return f.zero(); });
  std::sort(gb.g.begin(), gb.g.end(),
            [](const QPoly& a, const QPoly& b) { return GrevlexLess{}(leading_mono(a), leading_mono(b)); });
  return gb;
}

bool zero_dimensional(const GB& gb) {
  for (int v = 0; v < gb.n; ++v) {
    bool pure_power = false;
    for (auto& g : gb.g) {
      Mono l = leading_mono(g);
      bool only_v = l.e[v] > 0;
      for (int i = 0; i < kMaxVars && only_v; ++i)
        if (i != v && l.e[i]) only_v = false;
      if (only_v) {
        pure_power = true;
        break;
      }
    }
    if (!pure_power) return false;
  }
  return true;
}

std::vector<Mono> quotient_basis(const GB& gb) {
  check(zero_dimensional(gb), Err::Math,
        "NotZeroDimensional: singular locus has positive dimension");
  // bound on each exponent from the pure-power leading monomials
  std::array<int, kMaxVars> cap{};
  for (int v = 0; v < gb.n; ++v) {
    for (auto& g : gb.g) {
      Mono l = leading_mono(g);
      bool only_v = l.e[v] > 0;
      for (int i = 0; i < kMaxVars && only_v; ++i)
        if (i != v && l.e[i]) only_v = false;
      if (only_v) {
        cap[v] = l.e[v];
        break;
      }
    }
  }
  std::vector<Mono> basis;
  std::vector<Mono> leads;
  for (auto& g : gb.g) leads.push_back(leading_mono(g));
  // enumerate the box under the caps, keep monomials outside the staircase
  Mono cur;
  int maxdeg = 0;
  for (int v = 0; v < gb.n; ++v) maxdeg += cap[v];
  for (int d = 0; d <= maxdeg; ++d)
    for (auto& m : monomials_of_degree(gb.n, d)) {
      bool in_box = true;
      for (int v = 0; v < gb.n; ++v)
        if (m.e[v] >= cap[v] + 1) in_box = false;
      if (!in_box) continue;
      bool standard = true;
      for (auto& l : leads)
        if (m.divisible_by(l)) {
          standard = false;
          break;
        }
      if (standard) basis.push_back(m);
    }
  return basis;
}

QMat mult_matrix(const GB& gb, const std::vector<Mono>& basis, const QPoly& h) {
  int d = static_cast<int>(basis.size());
  QMat m(d, d);
  for (int j = 0; j < d; ++j) {
    QPoly bj(gb.n);
    bj.add_term(basis[j], Rat(1));
    QPoly r = normal_form(h * bj, gb.g);
    for (auto& [mono, c] : r.t) {
      auto it = std::find_if(basis.begin(), basis.end(), [&](const Mono& b) { return b == mono; });
      check(it != basis.end(), Err::Internal, "mult_matrix: normal form outside basis");
      m.at(static_cast<int>(it - basis.begin()), j) = c;
    }
  }
  return m;
}

namespace {

std::optional<std::vector<Rat>> solve_linear(QMat a, std::vector<Rat> b) {
  int extra = a.cols;
  QMat aug(a.rows, a.cols + 1);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, extra) = b[r];
  }
  Rref rr = rref(aug);
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivots[i] == extra) return std::nullopt;  // inconsistent
  std::vector<Rat> x(a.cols, Rat(0));
  for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = aug.at(i, extra);
  return x;
}

}  // namespace

UPoly minimal_polynomial(const QMat& m) {
  check(m.rows == m.cols, Err::Internal, "minimal_polynomial: square matrix required");
  int d = m.rows;
  int nn = d * d;
  // powers of m flattened as columns of a nn x (k+1) system
  std::vector<std::vector<Rat>> pows;
  QMat cur(d, d);
  for (int i = 0; i < d; ++i) cur.at(i, i) = 1;
  for (int k = 0; k <= d; ++k) {
    pows.push_back(cur.a);
    // next power
    QMat nxt(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rat s(0);
        for (int l = 0; l < d; ++l) s += cur.at(i, l) * m.at(l, j);
        nxt.at(i, j) = s;
      }
    cur = std::move(nxt);
  }
  for (int k = 1; k <= d; ++k) {
    QMat sys(nn, k);
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < k; ++c) sys.at(r, c) = pows[c][r];
    auto sol = solve_linear(std::move(sys), pows[k]);
    if (!sol) continue;
    std::vector<Rat> coeffs = *sol;
    coeffs.resize(k + 1, Rat(0));
    for (int i = 0; i < k; ++i) coeffs[i] = -coeffs[i];
    coeffs[k] = 1;
    return UPoly(std::move(coeffs));
  }
  fail(Err::Internal, "minimal_polynomial: no relation found");
}

int count_geometric_points(const GB& gb, uint64_t seed) {
  auto basis = quotient_basis(gb);
  if (basis.empty()) return 0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-20, 20);
  int best = 0;
  for (int trial = 0; trial < 6; ++trial) {
    QPoly l(gb.n);
    for (int v = 0; v < gb.n; ++v) l.add_term(Mono::var(v), Rat(coeff(rng)));
    UPoly mp = minimal_polynomial(mult_matrix(gb, basis, l));
    best = std::max(best, squarefree_part(mp).deg());
  }
  return best;
}

std::vector<std::vector<Rat>> rational_points(const GB& gb) {
  auto basis = quotient_basis(gb);
  std::vector<std::vector<Rat>> out;
  if (basis.empty()) return out;
  std::vector<std::vector<Rat>> coord_roots(gb.n);
  for (int v = 0; v < gb.n; ++v) {
    UPoly mp = minimal_polynomial(mult_matrix(gb, basis, QPoly::variable(gb.n, v)));
    coord_roots[v] = rational_roots(mp);
    if (coord_roots[v].empty()) return out;  // no rational value for this coordinate
  }
  // cartesian product, verified against the basis generators
  std::vector<size_t> idx(gb.n, 0);
  while (true) {
    std::vector<Rat> pt(gb.n);
    for (int v = 0; v < gb.n; ++v) pt[v] = coord_roots[v][idx[v]];
    bool ok = true;
    for (auto& g : gb.g)
      if (eval_at(g, pt) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(pt);
    int v = 0;
    while (v < gb.n && ++idx[v] == coord_roots[v].size()) idx[v++] = 0;
    if (v == gb.n) break;
  }
  return out;
}

}  // namespace fourfold
