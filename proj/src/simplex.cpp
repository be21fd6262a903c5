#include "gramrank/simplex.hpp"

namespace gramrank {

std::optional<std::vector<Rational>> FeasibilitySolver::solve(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  size_t rows = A.size();
  size_t cols = rows == 0 ? 0 : A[0].size();
  invariant(b.size() == rows, "rhs length mismatch");
  if (rows == 0) return std::vector<Rational>(cols, Rational(0));

  // Tableau [A | I | b] with artificial basis; phase 1 minimizes the sum of
  // artificials. Rows are flipped so the rhs starts nonnegative.
  size_t width = cols + rows + 1;
  T.assign(rows, {});
  for (size_t i = 0; i < rows; i++) {
    invariant(A[i].size() == cols, "ragged constraint matrix");
    T[i].assign(width, Rational(0));
    bool flip = b[i] < 0;
    for (size_t j = 0; j < cols; j++) T[i][j] = flip ? -A[i][j] : A[i][j];
    T[i][cols + i] = 1;
    T[i][width - 1] = flip ? -b[i] : b[i];
  }
  basis.resize(rows);
  for (size_t i = 0; i < rows; i++) basis[i] = static_cast<int>(cols + i);

  // Reduced costs of the phase-1 objective under the artificial basis:
  // structural column j gets -(column sum), artificials 0, and the objective
  // cell carries -(sum of rhs).
  obj.assign(width, Rational(0));
  for (size_t j = 0; j < cols; j++)
    for (size_t i = 0; i < rows; i++) obj[j] -= T[i][j];
  for (size_t i = 0; i < rows; i++) obj[width - 1] -= T[i][width - 1];

  for (;;) {
    size_t enter = width;
    for (size_t j = 0; j + 1 < width; j++) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    size_t leave = rows;
    Rational best;
    for (size_t i = 0; i < rows; i++) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][width - 1] / T[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase-1 objective is bounded below by zero, so a pivot row exists.
    invariant(leave < rows, "phase-1 simplex claims unboundedness");

    Rational piv = T[leave][enter];
    for (size_t j = 0; j < width; j++) T[leave][j] /= piv;
    for (size_t i = 0; i < rows; i++) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational factor = T[i][enter];
      for (size_t j = 0; j < width; j++) T[i][j] -= factor * T[leave][j];
    }
    if (obj[enter] != 0) {
      Rational factor = obj[enter];
      for (size_t j = 0; j < width; j++) obj[j] -= factor * T[leave][j];
    }
    basis[leave] = static_cast<int>(enter);
  }

  // obj[width-1] holds minus the remaining artificial mass.
  if (obj[width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (size_t i = 0; i < rows; i++)
    if (basis[i] < static_cast<int>(cols)) x[static_cast<size_t>(basis[i])] = T[i][width - 1];
  return x;
}

}  // namespace gramrank
