#pragma once
#include <cstdint>
#include <vector>

#include "fourfold/rat.hpp"

namespace fourfold {

// dense exact rational matrix
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct Rref {
  int rank = 0;
  std::vector<int> pivots;  // pivot column per pivot row, increasing
};

// in-place reduced row echelon form; pivots chosen in column order
Rref rref(QMat& m);
int rank_of(QMat m);
// reduce v against an rref matrix; returns the fully reduced row
std::vector<Rat> reduce_against(const QMat& m, const Rref& r, std::vector<Rat> v);

// dense matrix over F_p, p < 2^31
struct ZpMat {
  uint32_t p = 0;
  int rows = 0, cols = 0;
  std::vector<uint32_t> a;

  ZpMat() = default;
  ZpMat(uint32_t prime, int r, int c)
      : p(prime), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const uint32_t& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

Rref rref(ZpMat& m);
int rank_of(ZpMat m);
uint64_t inv_mod(uint64_t x, uint64_t p);

// row-at-a-time echelon accumulator over F_p; keeps only independent rows
struct EchelonZp {
  uint32_t p = 0;
  int cols = 0;
  std::vector<std::vector<uint32_t>> rows;  // normalized, leading cols increasing on sort
  std::vector<int> lead;
  std::vector<int> pivot_row_ids;  // ids of inserted rows that grew the rank

  EchelonZp() = default;
  EchelonZp(uint32_t prime, int c) : p(prime), cols(c) {}
  bool insert(std::vector<uint32_t> row, int row_id = -1);
  int rank() const { return static_cast<int>(rows.size()); }
  std::vector<int> pivot_cols() const;
};

// basis of the right kernel
std::vector<std::vector<Rat>> kernel_basis(QMat m);

// bit-packed matrix over F2
struct BitMat {
  int rows = 0, cols = 0, words = 0;
  std::vector<uint64_t> a;

  BitMat() = default;
  BitMat(int r, int c)
      : rows(r), cols(c), words((c + 63) / 64), a(static_cast<size_t>(r) * words, 0) {}
  void set(int r, int c) { a[static_cast<size_t>(r) * words + c / 64] |= 1ull << (c % 64); }
  bool get(int r, int c) const {
    return (a[static_cast<size_t>(r) * words + c / 64] >> (c % 64)) & 1;
  }
};

int rank_of(BitMat m);

bool is_prime_u64(uint64_t n);
// deterministic list of distinct primes in [2^30, 2^31)
std::vector<uint32_t> random_primes31(int count, uint64_t seed);

}  // namespace fourfold
