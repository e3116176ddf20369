#pragma once

#include <optional>
#include <vector>

#include "occert/laurent.hpp"

namespace occ {

// Rectangular matrix over Lambda = Q[t, t^-1].
class LaurentMat {
 public:
  LaurentMat() = default;
  LaurentMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static LaurentMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  LaurentMat operator*(const LaurentMat& o) const;
  bool operator==(const LaurentMat& o) const = default;

  LaurentPoly determinant() const;
  // Rank of the matrix evaluated at t = c, over Q.
  std::size_t rank_at(const BigRational& c) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> e_;
};

// U*A*V = D with U, V unimodular (unit determinant) and D diagonal with
// d_i | d_{i+1}, each d_i in canonical form. U*A*V = D is re-verified by
// exact multiplication before returning.
struct SNFResult {
  LaurentMat U, D, V;
  std::vector<LaurentPoly> invariant_factors;  // nonzero diagonal entries, in order
};

SNFResult smith_normal_form(const LaurentMat& A);

// Solves A x = b over Lambda exactly (x a column vector), if solvable.
std::optional<std::vector<LaurentPoly>> solve_linear(const LaurentMat& A,
                                                     const std::vector<LaurentPoly>& b);

// gcd of all k x k minors for k = min(rows, cols); zero when they all vanish.
LaurentPoly gcd_of_maximal_minors(const LaurentMat& A);

}  // namespace occ
