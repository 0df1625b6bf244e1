#include "kakeya/linsolve.hpp"

#include <algorithm>

#include "kakeya/valuation.hpp"

namespace kakeya {

namespace {

// v_L lower bound used in trust propagation: stored-zero counts as the
// horizon (its digits contribute nothing below it).
int vlow(const ExtField& L, const ExtElem& a) {
  int v = L.v_L_stored(a);
  return v == val_inf ? L.horizon() : v;
}

struct TE {
  ExtElem x;
  int kb;
};

TE te_mul(const ExtField& L, const TE& a, const TE& b) {
  int kb = std::min({a.kb + vlow(L, b.x), b.kb + vlow(L, a.x), a.kb + b.kb});
  kb = std::min(kb, L.horizon());
  return TE{L.mul(a.x, b.x), kb};
}

TE te_sub(const ExtField& L, const TE& a, const TE& b) {
  return TE{L.sub(a.x, b.x), std::min(a.kb, b.kb)};
}

// Exact division with trust accounting: quotient digits are determined
// only modulo v_L >= eN - v_L(divisor).
TE te_div(const ExtField& L, const TE& a, const TE& b) {
  int vb = L.v_L_stored(b.x);
  if (vb == val_inf) throw PrecisionError("nullspace_ext: division by stored zero");
  ExtElem q = L.div_exact(a.x, b.x);
  int kb = std::min(a.kb, b.kb) - vb;
  return TE{q, std::min(kb, L.horizon() - vb)};
}

}  // namespace

std::vector<TrackedExt> nullspace_ext(const ExtField& L,
                                      std::vector<std::vector<ExtElem>> M,
                                      int cols) {
  const int rows = int(M.size());
  for (const auto& r : M)
    if (int(r.size()) != cols) throw DomainError("nullspace_ext: ragged matrix");
  std::vector<std::vector<TE>> A(rows, std::vector<TE>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A[i][j] = TE{M[i][j], L.horizon()};

  std::vector<int> pivot_row_of_col(cols, -1);
  std::vector<int> pivot_cols;
  int next_row = 0;
  for (int c = 0; c < cols && next_row < rows; ++c) {
    int best = -1, bestv = val_inf;
    for (int i = next_row; i < rows; ++i) {
      int v = L.v_L_stored(A[i][c].x);
      if (v < bestv) {
        bestv = v;
        best = i;
      }
    }
    if (best < 0 || bestv == val_inf) continue;  // free column
    std::swap(A[next_row], A[best]);
    const TE piv = A[next_row][c];
    for (int i = next_row + 1; i < rows; ++i) {
      if (L.is_zero(A[i][c].x)) continue;
      TE m = te_div(L, A[i][c], piv);
      for (int j = c; j < cols; ++j)
        A[i][j] = te_sub(L, A[i][j], te_mul(L, m, A[next_row][j]));
      // The stored leading entry cancels exactly (te_div mult-back checked).
      if (!L.is_zero(A[i][c].x))
        throw ConsistencyError("nullspace_ext: pivot column did not clear");
    }
    pivot_row_of_col[c] = next_row;
    pivot_cols.push_back(c);
    ++next_row;
  }

  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] < 0) {
      free_col = c;
      break;
    }
  if (free_col < 0)
    throw DomainError("nullspace_ext: matrix has full column rank");

  // x[free] = product of pivots; every pivot variable then solves to a
  // cofactor-style value that stays in O_L, so each division is exact.
  std::vector<TE> x(cols, TE{L.zero(), L.horizon()});
  TE prod{L.one(), L.horizon()};
  for (int c : pivot_cols) prod = te_mul(L, prod, A[pivot_row_of_col[c]][c]);
  x[free_col] = prod;
  for (int idx = int(pivot_cols.size()) - 1; idx >= 0; --idx) {
    int c = pivot_cols[idx];
    int r = pivot_row_of_col[c];
    TE acc{L.zero(), L.horizon()};
    for (int j = c + 1; j < cols; ++j) {
      if (L.is_zero(x[j].x) && L.is_zero(A[r][j].x)) continue;
      acc = te_sub(L, acc, te_mul(L, A[r][j], x[j]));
    }
    x[c] = te_div(L, acc, A[r][c]);
  }

  bool visible = false;
  for (const auto& e : x) {
    int v = L.v_L_stored(e.x);
    if (v != val_inf && v < e.kb) visible = true;
  }
  if (!visible)
    throw PrecisionError(
        "nullspace_ext: no entry is distinguishable from accumulated error");

  std::vector<TrackedExt> out(cols);
  for (int j = 0; j < cols; ++j) out[j] = TrackedExt{x[j].x, x[j].kb};
  return out;
}

std::vector<FqElem> nullspace_fq(const Fq& F,
                                 std::vector<std::vector<FqElem>> M,
                                 int cols) {
  const int rows = int(M.size());
  for (const auto& r : M)
    if (int(r.size()) != cols) throw DomainError("nullspace_fq: ragged matrix");
  std::vector<int> pivot_row_of_col(cols, -1);
  std::vector<int> pivot_cols;
  int next_row = 0;
  for (int c = 0; c < cols && next_row < rows; ++c) {
    int best = -1;
    for (int i = next_row; i < rows; ++i)
      if (M[i][c].v != 0) {
        best = i;
        break;
      }
    if (best < 0) continue;
    std::swap(M[next_row], M[best]);
    FqElem ip = F.inv(M[next_row][c]);
    for (int j = c; j < cols; ++j) M[next_row][j] = F.mul(M[next_row][j], ip);
    for (int i = 0; i < rows; ++i) {
      if (i == next_row || M[i][c].v == 0) continue;
      FqElem f = M[i][c];
      for (int j = c; j < cols; ++j)
        M[i][j] = F.sub(M[i][j], F.mul(f, M[next_row][j]));
    }
    pivot_row_of_col[c] = next_row;
    pivot_cols.push_back(c);
    ++next_row;
  }
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] < 0) {
      free_col = c;
      break;
    }
  if (free_col < 0) return {};
  std::vector<FqElem> x(cols, F.zero());
  x[free_col] = F.one();
  for (int c : pivot_cols)
    x[c] = F.neg(M[pivot_row_of_col[c]][free_col]);  // reduced echelon form
  return x;
}

}  // namespace kakeya
