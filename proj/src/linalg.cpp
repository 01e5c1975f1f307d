#include "fourfold/linalg.hpp"

#include <algorithm>
#include <random>

#include "fourfold/error.hpp"

namespace fourfold {

Rref rref(QMat& m) {
  Rref res;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    Rat inv = Rat(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      Rat f = m.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

int rank_of(QMat m) { return rref(m).rank; }

std::vector<Rat> reduce_against(const QMat& m, const Rref& r, std::vector<Rat> v) {
  check(static_cast<int>(v.size()) == m.cols, Err::Internal, "reduce_against: size");
  for (int i = 0; i < r.rank; ++i) {
    int col = r.pivots[i];
    Rat f = v[col];
    if (f == 0) continue;
    for (int c = col; c < m.cols; ++c) v[c] -= f * m.at(i, c);
  }
  return v;
}

uint64_t inv_mod(uint64_t x, uint64_t p) {
  uint64_t r = 1, b = x % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<uint64_t>(static_cast<unsigned __int128>(r) * b % p);
    b = static_cast<uint64_t>(static_cast<unsigned __int128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

Rref rref(ZpMat& m) {
  Rref res;
  uint64_t p = m.p;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    uint64_t inv = inv_mod(m.at(row, col), p);
    for (int c = col; c < m.cols; ++c)
      m.at(row, c) = static_cast<uint32_t>(m.at(row, c) * inv % p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      uint64_t f = m.at(r, col);
      if (!f) continue;
      uint64_t fneg = p - f;
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = static_cast<uint32_t>((m.at(r, c) + fneg * m.at(row, c)) % p);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

int rank_of(ZpMat m) { return rref(m).rank; }

int rank_of(BitMat m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int w = col / 64;
    uint64_t bit = 1ull << (col % 64);
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.a[static_cast<size_t>(r) * m.words + w] & bit) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < m.words; ++k)
        std::swap(m.a[static_cast<size_t>(piv) * m.words + k],
                  m.a[static_cast<size_t>(rank) * m.words + k]);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      if (m.a[static_cast<size_t>(r) * m.words + w] & bit)
        for (int k = 0; k < m.words; ++k)
          m.a[static_cast<size_t>(r) * m.words + k] ^= m.a[static_cast<size_t>(rank) * m.words + k];
    }
    ++rank;
  }
  return rank;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  // deterministic for 64-bit inputs
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<uint32_t> random_primes31(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> dist(1u << 30, (1u << 31) - 1);
  std::vector<uint32_t> out;
  while (static_cast<int>(out.size()) < count) {
    uint32_t cand = dist(rng) | 1u;
    if (!is_prime_u64(cand)) continue;
    if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
    out.push_back(cand);
  }
  return out;
}

}  // namespace fourfold
