#include "fourfold/rat.hpp"

#include "fourfold/error.hpp"

namespace fourfold {

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, s.c_str(), 10) != 0) {
    mpq_clear(q);
    return std::nullopt;
  }
  Rat r(q);
  mpq_clear(q);
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::optional<Int> int_sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto num = int_sqrt_exact(r.get_num());
  if (!num) return std::nullopt;
  auto den = int_sqrt_exact(r.get_den());
  if (!den) return std::nullopt;
  return rat(*num, *den);
}

uint32_t mod_p(const Int& n, uint32_t p) {
  return static_cast<uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p));
}

uint32_t mod_p(const Rat& r, uint32_t p) {
  uint32_t den = mod_p(r.get_den(), p);
  check(den != 0, Err::Internal, "mod_p: denominator divisible by modulus");
  uint64_t inv = 1, base = den, e = p - 2;  // p prime
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(mod_p(r.get_num(), p) * inv % p);
}

}  // namespace fourfold
