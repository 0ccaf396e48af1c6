#include "sgmtopo/zlinalg.hpp"

#include <algorithm>
#include <optional>

#include "sgmtopo/errors.hpp"

namespace sgmtopo {

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d(std::min(S.rows(), S.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = S(i, i);
  return d;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

struct Position {
  std::size_t row, col;
};

std::optional<Position> min_abs_entry(const IntMatrix& a, std::size_t from) {
  std::optional<Position> best;
  for (std::size_t i = from; i < a.rows(); ++i)
    for (std::size_t j = from; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || abs(a(i, j)) < abs(a(best->row, best->col))) best = Position{i, j};
    }
  return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    auto pivot = min_abs_entry(a, t);
    if (!pivot) break;
    a.swap_rows(t, pivot->row);
    u.swap_rows(t, pivot->row);
    a.swap_cols(t, pivot->col);
    v.swap_cols(t, pivot->col);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived in row or column t.
        std::optional<Position> best;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && (!best || abs(a(i, t)) < abs(a(best->row, best->col))))
            best = Position{i, t};
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && (!best || abs(a(t, j)) < abs(a(best->row, best->col))))
            best = Position{t, j};
        a.swap_rows(t, best->row);
        u.swap_rows(t, best->row);
        a.swap_cols(t, best->col);
        v.swap_cols(t, best->col);
        continue;
      }
      // Row and column are clear; enforce divisibility of the block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (mod_floor(a(i, j), a(t, t)) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      a.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (a(t, t) < 0) {
      a.negate_col(t);
      v.negate_col(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

HnfResult hermite_normal_form(const IntMatrix& input) {
  IntMatrix h = input;
  IntMatrix u = IntMatrix::identity(h.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < h.rows(); ++i)
        if (h(i, col) != 0 && (!best || abs(h(i, col)) < abs(h(*best, col)))) best = i;
      if (!best) break;
      h.swap_rows(pivot_row, *best);
      u.swap_rows(pivot_row, *best);
      bool clear = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = floor_div(h(i, col), h(pivot_row, col));
        h.add_row_multiple(i, pivot_row, -q);
        u.add_row_multiple(i, pivot_row, -q);
        if (h(i, col) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = floor_div(h(i, col), h(pivot_row, col));
      h.add_row_multiple(i, pivot_row, -q);
      u.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

FinAbGroup cokernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  auto diag = snf.diagonal();
  return FinAbGroup::from_diagonal(a.rows() - diag.size(), diag);
}

std::size_t image_rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

std::size_t kernel_rank(const IntMatrix& a) { return a.cols() - image_rank(a); }

namespace {

// Bareiss elimination on a copy; returns the rank and, for square input,
// leaves the determinant in `det`.
std::size_t bareiss(IntMatrix a, Integer* det) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det) {
    *det = (rows == cols && r == rows) ? Integer(sign * prev) : Integer(0);
    if (rows == 0 && cols == 0) *det = 1;
  }
  return r;
}

}  // namespace

std::size_t rank_over_rationals(const IntMatrix& a) { return bareiss(a, nullptr); }

std::size_t rank_mod_prime(const IntMatrix& input, const Integer& p) {
  IntMatrix a = input;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j), p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a(r, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer f = mod_floor(a(i, c) * inv, p);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j) - f * a(r, j), p);
    }
    ++r;
  }
  return r;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  Integer det;
  bareiss(a, &det);
  return det;
}

bool is_unimodular(const IntMatrix& a) {
  return a.rows() == a.cols() && abs(determinant(a)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  auto hnf = hermite_normal_form(u);
  if (!(hnf.H == IntMatrix::identity(u.rows()))) throw InvalidInput("matrix is not unimodular");
  return hnf.U;
}

PresentedGroup present_cokernel(const IntMatrix& relations) {
  const std::size_t g = relations.rows();
  auto snf = smith_normal_form(relations);
  auto diag = snf.diagonal();
  std::vector<std::size_t> torsion_rows, free_rows;
  for (std::size_t i = 0; i < g; ++i) {
    Integer s = i < diag.size() ? diag[i] : Integer(0);
    if (s == 0) {
      free_rows.push_back(i);
    } else if (s != 1) {
      torsion_rows.push_back(i);
    }
  }
  std::vector<std::size_t> kept = torsion_rows;
  kept.insert(kept.end(), free_rows.begin(), free_rows.end());

  IntMatrix u_inv = unimodular_inverse(snf.U);
  IntMatrix to(kept.size(), g), from(g, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < g; ++j) {
      to(k, j) = snf.U(kept[k], j);
      from(j, k) = u_inv(j, kept[k]);
    }
  std::vector<Integer> torsion;
  for (auto i : torsion_rows) torsion.push_back(diag[i]);
  // SNF diagonal is already a divisibility chain, so canonicalize keeps the
  // order of the torsion rows.
  auto group = FinAbGroup::canonicalize(free_rows.size(), std::move(torsion));
  for (std::size_t k = 0; k < group.torsion_generator_count(); ++k)
    for (std::size_t j = 0; j < g; ++j) to(k, j) = mod_floor(to(k, j), group.invariant_factors()[k]);
  return {std::move(group), std::move(to), std::move(from)};
}

IntMatrix kernel_basis(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntMatrix basis(a.cols(), a.cols() - r);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = r; k < a.cols(); ++k) basis(i, k - r) = snf.V(i, k);
  return basis;
}

IntMatrix lattice_hermite_basis(const IntMatrix& generators) {
  auto h = hermite_normal_form(generators.transpose()).H;
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::vector<Integer> row(h.cols());
    bool nonzero = false;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      row[j] = h(i, j);
      if (row[j] != 0) nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, generators.rows());
}

}  // namespace sgmtopo
