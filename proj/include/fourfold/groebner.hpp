#pragma once
#include <vector>

#include "fourfold/linalg.hpp"
#include "fourfold/poly.hpp"
#include "fourfold/unipoly.hpp"

namespace fourfold {

// reduced Groebner basis, grevlex, primitive integer coefficients
struct GB {
  int n = 0;
  std::vector<QPoly> g;
};

Mono leading_mono(const QPoly& f);
QPoly normal_form(const QPoly& f, const std::vector<QPoly>& gens);
GB buchberger(std::vector<QPoly> gens);
bool zero_dimensional(const GB& gb);
// monomial basis of the quotient; errors NotZeroDimensional
std::vector<Mono> quotient_basis(const GB& gb);
// matrix of multiplication by h on the quotient basis
QMat mult_matrix(const GB& gb, const std::vector<Mono>& basis, const QPoly& h);
UPoly minimal_polynomial(const QMat& m);
// number of distinct solutions over the algebraic closure
int count_geometric_points(const GB& gb, uint64_t seed);
// all solutions with every coordinate rational
std::vector<std::vector<Rat>> rational_points(const GB& gb);

}  // namespace fourfold
