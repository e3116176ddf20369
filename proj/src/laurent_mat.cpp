#include "occert/laurent_mat.hpp"

#include <algorithm>
#include <functional>

#include "occert/errors.hpp"

namespace occ {

LaurentMat LaurentMat::identity(std::size_t n) {
  LaurentMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(BigRational(1));
  return m;
}

LaurentMat LaurentMat::operator*(const LaurentMat& o) const {
  if (cols_ != o.rows_) throw domain_error("matrix dimension mismatch");
  LaurentMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

LaurentPoly LaurentMat::determinant() const {
  if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
  // Laplace expansion; matrices here stay small (<= 4x4 plus tests).
  if (rows_ == 0) return LaurentPoly(BigRational(1));
  if (rows_ == 1) return at(0, 0);
  LaurentPoly acc;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    LaurentMat minor(rows_ - 1, cols_ - 1);
    for (std::size_t i = 1; i < rows_; ++i) {
      std::size_t jj = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        if (k == j) continue;
        minor.at(i - 1, jj++) = at(i, k);
      }
    }
    LaurentPoly term = at(0, j) * minor.determinant();
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::size_t LaurentMat::rank_at(const BigRational& c) const {
  std::vector<std::vector<BigRational>> m(rows_, std::vector<BigRational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j).evaluate(c);
  std::size_t rank = 0;
  std::size_t col = 0;
  for (std::size_t row = 0; row < rows_ && col < cols_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && m[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m[i][col] == 0) continue;
      BigRational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols_; ++j) m[i][j] -= f * m[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

std::string LaurentMat::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string();
    }
    out += "\n";
  }
  return out;
}

namespace {

struct SNFWorker {
  LaurentMat A, U, V;

  explicit SNFWorker(const LaurentMat& a)
      : A(a), U(LaurentMat::identity(a.rows())), V(LaurentMat::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < A.cols(); ++k) std::swap(A.at(i, k), A.at(j, k));
    for (std::size_t k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < A.rows(); ++k) std::swap(A.at(k, i), A.at(k, j));
    for (std::size_t k = 0; k < V.rows(); ++k) std::swap(V.at(k, i), V.at(k, j));
  }
  // row i -= f * row j
  void row_sub(std::size_t i, std::size_t j, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t k = 0; k < A.cols(); ++k) A.at(i, k) = A.at(i, k) - f * A.at(j, k);
    for (std::size_t k = 0; k < U.cols(); ++k) U.at(i, k) = U.at(i, k) - f * U.at(j, k);
  }
  void col_sub(std::size_t i, std::size_t j, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t k = 0; k < A.rows(); ++k) A.at(k, i) = A.at(k, i) - f * A.at(k, j);
    for (std::size_t k = 0; k < V.rows(); ++k) V.at(k, i) = V.at(k, i) - f * V.at(k, j);
  }
  // row i *= unit (c * t^k)
  void row_scale(std::size_t i, const LaurentPoly& unit) {
    for (std::size_t k = 0; k < A.cols(); ++k) A.at(i, k) = A.at(i, k) * unit;
    for (std::size_t k = 0; k < U.cols(); ++k) U.at(i, k) = U.at(i, k) * unit;
  }

  // Smallest canonical degree among nonzero entries of [s,rend)x[s,cend),
  // ties broken row-major.
  bool find_pivot(std::size_t s, std::size_t rend, std::size_t cend, std::size_t* pi,
                  std::size_t* pj) {
    bool found = false;
    long best = 0;
    for (std::size_t i = s; i < rend; ++i)
      for (std::size_t j = s; j < cend; ++j) {
        if (A.at(i, j).is_zero()) continue;
        long d = A.at(i, j).degree();
        if (!found || d < best) {
          found = true;
          best = d;
          *pi = i;
          *pj = j;
        }
      }
    return found;
  }

  // Clears row and column s within the window [s,rend)x[s,cend); entries
  // outside the window are untouched. The minimal pivot degree strictly
  // drops on every dirty pass, so this terminates.
  void reduce_block(std::size_t s, std::size_t rend, std::size_t cend) {
    for (;;) {
      std::size_t pi = s, pj = s;
      if (!find_pivot(s, rend, cend, &pi, &pj)) return;
      swap_rows(s, pi);
      swap_cols(s, pj);
      bool dirty = false;
      for (std::size_t i = s + 1; i < rend; ++i) {
        if (A.at(i, s).is_zero()) continue;
        LaurentPoly q;
        lp_divmod(A.at(i, s), A.at(s, s), &q, nullptr);
        row_sub(i, s, q);
        if (!A.at(i, s).is_zero()) dirty = true;
      }
      for (std::size_t j = s + 1; j < cend; ++j) {
        if (A.at(s, j).is_zero()) continue;
        LaurentPoly q;
        lp_divmod(A.at(s, j), A.at(s, s), &q, nullptr);
        col_sub(j, s, q);
        if (!A.at(s, j).is_zero()) dirty = true;
      }
      if (!dirty) return;
    }
  }

  void canonicalize_pivot(std::size_t s) {
    LaurentPoly& d = A.at(s, s);
    if (d.is_zero()) return;
    LaurentPoly unit = LaurentPoly::t_power(-d.lowest_exp(), 1 / d.leading_coeff());
    row_scale(s, unit);
  }

  SNFResult run() {
    std::size_t n = std::min(A.rows(), A.cols());
    for (std::size_t s = 0; s < n; ++s) reduce_block(s, A.rows(), A.cols());
    for (std::size_t s = 0; s < n; ++s) canonicalize_pivot(s);
    // Enforce the divisibility chain by confined 2x2 fixes: fold d_{i+1}
    // into column i and rediagonalize only the 2x2 block, which replaces
    // (d_i, d_{i+1}) by (gcd, lcm) up to units.
    for (;;) {
      bool fixed = true;
      for (std::size_t s = 0; s + 1 < n; ++s) {
        LaurentPoly a = A.at(s, s), b = A.at(s + 1, s + 1);
        if (a.is_zero() && !b.is_zero()) {
          swap_rows(s, s + 1);
          swap_cols(s, s + 1);
          fixed = false;
          break;
        }
        if (a.is_zero() || b.is_zero()) continue;
        if (lp_divides(a, b)) continue;
        col_sub(s, s + 1, LaurentPoly(BigRational(-1)));  // col_s += col_{s+1}
        reduce_block(s, s + 2, s + 2);
        canonicalize_pivot(s);
        canonicalize_pivot(s + 1);
        fixed = false;
        break;
      }
      if (fixed) break;
    }
    SNFResult out;
    out.U = U;
    out.V = V;
    out.D = A;
    for (std::size_t s = 0; s < n; ++s)
      if (!A.at(s, s).is_zero()) out.invariant_factors.push_back(A.at(s, s));
    return out;
  }
};

}  // namespace

SNFResult smith_normal_form(const LaurentMat& A) {
  SNFWorker worker(A);
  SNFResult r = worker.run();
  // Exactness and unimodularity checks on every call.
  if (!(r.U * A * r.V == r.D)) throw internal_error("SNF: U*A*V != D");
  if (!r.U.determinant().is_unit() || !r.V.determinant().is_unit())
    throw internal_error("SNF: transformation not unimodular");
  for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i)
    if (!lp_divides(r.invariant_factors[i], r.invariant_factors[i + 1]))
      throw internal_error("SNF: divisibility chain violated");
  return r;
}

std::optional<std::vector<LaurentPoly>> solve_linear(const LaurentMat& A,
                                                     const std::vector<LaurentPoly>& b) {
  if (b.size() != A.rows()) throw domain_error("solve_linear: dimension mismatch");
  SNFResult snf = smith_normal_form(A);
  // A = U^-1 D V^-1, so A x = b  <=>  D (V^-1 x) = U b; set z = V^-1 x.
  std::vector<LaurentPoly> ub(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    LaurentPoly acc;
    for (std::size_t j = 0; j < A.rows(); ++j) acc = acc + snf.U.at(i, j) * b[j];
    ub[i] = acc;
  }
  std::size_t n = std::min(A.rows(), A.cols());
  std::vector<LaurentPoly> z(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const LaurentPoly& d = i < n ? snf.D.at(i, i) : LaurentPoly();
    if (d.is_zero()) {
      if (!ub[i].is_zero()) return std::nullopt;
    } else {
      if (!lp_divides(d, ub[i])) return std::nullopt;
      z[i] = lp_div_exact(ub[i], d);
    }
  }
  std::vector<LaurentPoly> x(A.cols());
  for (std::size_t i = 0; i < A.cols(); ++i) {
    LaurentPoly acc;
    for (std::size_t j = 0; j < A.cols(); ++j) acc = acc + snf.V.at(i, j) * z[j];
    x[i] = acc;
  }
  // Exact check.
  for (std::size_t i = 0; i < A.rows(); ++i) {
    LaurentPoly acc;
    for (std::size_t j = 0; j < A.cols(); ++j) acc = acc + A.at(i, j) * x[j];
    if (acc != b[i]) throw internal_error("solve_linear: verification failed");
  }
  return x;
}

namespace {

void enumerate_minors(const LaurentMat& A, std::size_t k, LaurentPoly* acc) {
  std::vector<std::size_t> rows(k), cols(k);
  std::vector<std::size_t> rsel, csel;
  // choose k rows and k cols
  std::function<void(std::size_t, std::size_t)> choose_cols = [&](std::size_t start,
                                                                  std::size_t depth) {
    if (depth == k) {
      LaurentMat sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = A.at(rsel[i], csel[j]);
      LaurentPoly det = sub.determinant();
      if (!det.is_zero()) *acc = lp_gcd(*acc, det);
      return;
    }
    for (std::size_t c = start; c + (k - depth) <= A.cols(); ++c) {
      csel.push_back(c);
      choose_cols(c + 1, depth + 1);
      csel.pop_back();
    }
  };
  std::function<void(std::size_t, std::size_t)> choose_rows = [&](std::size_t start,
                                                                  std::size_t depth) {
    if (depth == k) {
      choose_cols(0, 0);
      return;
    }
    for (std::size_t r = start; r + (k - depth) <= A.rows(); ++r) {
      rsel.push_back(r);
      choose_rows(r + 1, depth + 1);
      rsel.pop_back();
    }
  };
  choose_rows(0, 0);
}

}  // namespace

LaurentPoly gcd_of_maximal_minors(const LaurentMat& A) {
  std::size_t k = std::min(A.rows(), A.cols());
  if (k == 0) return LaurentPoly(BigRational(1));
  LaurentPoly acc;
  enumerate_minors(A, k, &acc);
  return acc.is_zero() ? acc : acc.canonical();
}

}  // namespace occ
