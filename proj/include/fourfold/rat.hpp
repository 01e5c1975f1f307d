#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace fourfold {

using Int = mpz_class;
using Rat = mpq_class;  // GMP keeps these reduced with positive denominator

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "a" or "a/b", b > 0 after canonicalization
std::string rat_str(const Rat& r);
std::optional<Rat> rat_parse(const std::string& s);

bool is_integer(const Rat& r);
// exact square root of a nonnegative integer if it exists
std::optional<Int> int_sqrt_exact(const Int& n);
// rational square root if the value is a perfect square
std::optional<Rat> rat_sqrt_exact(const Rat& r);

uint32_t mod_p(const Int& n, uint32_t p);
// reduces num/den mod p; requires p odd prime not dividing den
uint32_t mod_p(const Rat& r, uint32_t p);

}  // namespace fourfold
