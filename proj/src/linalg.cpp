#include "spinverify/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spinv {

namespace {

// In-place row echelon; returns rank. Works for any field element with
// arithmetic and exact zero test.
template <typename F>
size_t echelon(std::vector<std::vector<F>>& m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = rows;
    for (size_t k = r; k < rows; ++k)
      if (!(m[k][c] == F(0))) {
        pivot = k;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    F inv = F(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t k = 0; k < rows; ++k) {
      if (k == r) continue;
      if (m[k][c] == F(0)) continue;
      F f = m[k][c];
      for (size_t j = c; j < cols; ++j) m[k][j] = m[k][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

size_t rank_q(QMat m) { return echelon(m); }
size_t rank_g(GMat m) { return echelon(m); }

std::vector<GVec> nullspace_g(const GMat& a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  GMat m = a;
  echelon(m);
  // Identify pivot columns.
  std::vector<long> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t row = 0; row < m.size(); ++row) {
    size_t c = 0;
    while (c < cols && m[row][c] == GaussRat(0)) ++c;
    if (c == cols) break;
    pivot_of_col[c] = static_cast<long>(row);
    ++r;
  }
  std::vector<GVec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    GVec x(cols, GaussRat(0));
    x[c] = GaussRat(1);
    for (size_t cc = 0; cc < cols; ++cc) {
      long pr = pivot_of_col[cc];
      if (pr >= 0) x[cc] = -m[static_cast<size_t>(pr)][c];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<GVec> solve_g(const GMat& a, const GVec& b) {
  if (a.empty()) {
    for (const auto& v : b)
      if (!v.is_zero()) return std::nullopt;
    return GVec{};
  }
  size_t cols = a[0].size();
  GMat m = a;
  for (size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  echelon(m);
  GVec x(cols, GaussRat(0));
  for (size_t row = 0; row < m.size(); ++row) {
    size_t c = 0;
    while (c < cols && m[row][c] == GaussRat(0)) ++c;
    if (c == cols) {
      if (!m[row][cols].is_zero()) return std::nullopt;  // inconsistent: 0 = nonzero
      continue;
    }
    // Reduced form: pivot entry 1; free variables set to zero.
    x[c] = m[row][cols];
  }
  return x;
}

std::optional<GVec> solve_affine(const LinearSystem& sys) {
  GVec rhs = sys.b;
  for (auto& v : rhs) v = -v;
  return solve_g(sys.a, rhs);
}

QMat realify(const GMat& m) {
  QMat out;
  out.reserve(m.size());
  for (const auto& row : m) {
    QVec r;
    r.reserve(2 * row.size());
    for (const auto& v : row) r.push_back(v.re);
    for (const auto& v : row) r.push_back(v.im);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<size_t> independent_subset(const GMat& rows, bool over_reals) {
  std::vector<size_t> kept;
  if (rows.empty()) return kept;
  if (over_reals) {
    QMat basis;
    QMat rr = realify(rows);
    for (size_t k = 0; k < rr.size(); ++k) {
      QMat trial = basis;
      trial.push_back(rr[k]);
      if (rank_q(trial) > basis.size()) {
        basis.push_back(rr[k]);
        kept.push_back(k);
      }
    }
  } else {
    GMat basis;
    for (size_t k = 0; k < rows.size(); ++k) {
      GMat trial = basis;
      trial.push_back(rows[k]);
      if (rank_g(trial) > basis.size()) {
        basis.push_back(rows[k]);
        kept.push_back(k);
      }
    }
  }
  return kept;
}

LinearSystem extract_linear_system(const std::vector<const PolyExpr*>& exprs,
                                   const std::vector<uint32_t>& unknown_ids) {
  std::map<uint32_t, size_t> col_of;
  for (size_t k = 0; k < unknown_ids.size(); ++k) col_of[unknown_ids[k]] = k;

  // Row key: (expression index, residual monomial).
  std::map<std::pair<size_t, Mono>, size_t> row_of;
  LinearSystem sys;
  auto grow = [&](const std::pair<size_t, Mono>& key) -> size_t {
    auto it = row_of.find(key);
    if (it != row_of.end()) return it->second;
    size_t r = sys.a.size();
    row_of.emplace(key, r);
    sys.a.emplace_back(unknown_ids.size(), GaussRat(0));
    sys.b.emplace_back(GaussRat(0));
    return r;
  };

  for (size_t e = 0; e < exprs.size(); ++e) {
    for (const auto& [mono, coeff] : exprs[e]->terms()) {
      long unknown_col = -1;
      Mono residual;
      for (const auto& [v, exp] : mono) {
        bool is_unknown = v.kind() == VarKind::Constant &&
                          col_of.count(v.const_index()) > 0;
        if (is_unknown) {
          if (exp != 1 || unknown_col >= 0)
            throw std::logic_error("extract_linear_system: expression not linear in unknowns");
          unknown_col = static_cast<long>(col_of[v.const_index()]);
        } else {
          residual.emplace_back(v, exp);
        }
      }
      size_t r = grow({e, residual});
      if (unknown_col >= 0)
        sys.a[r][static_cast<size_t>(unknown_col)] += coeff;
      else
        sys.b[r] += coeff;
    }
  }
  return sys;
}

}  // namespace spinv
