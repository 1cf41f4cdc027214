#ifndef SPINVERIFY_WORLD_HPP
#define SPINVERIFY_WORLD_HPP

// Dense world (Lorentz) tensors with exact polynomial components, and the
// translation functor from grouped spinors. Indices run 0..3; each index has
// a height. The metric is diag(1,-1,-1,-1), so raising/lowering one index is
// a sign flip on its spatial values.

#include <string>
#include <vector>

#include "spinverify/sigma.hpp"
#include "spinverify/spinor.hpp"

namespace spinv {

class WorldTensor {
 public:
  std::vector<bool> up;         // height per index
  std::vector<PolyExpr> comp;   // 4^rank, row-major

  WorldTensor() : comp(1) {}
  explicit WorldTensor(std::vector<bool> heights) : up(std::move(heights)) {
    comp.assign(size(), PolyExpr::zero());
  }

  int rank() const { return static_cast<int>(up.size()); }
  size_t size() const {
    size_t s = 1;
    for (int k = 0; k < rank(); ++k) s *= 4;
    return s;
  }

  size_t encode(const std::vector<int>& idx) const;
  std::vector<int> decode(size_t flat) const;

  const PolyExpr& at(const std::vector<int>& idx) const { return comp[encode(idx)]; }
  PolyExpr& at(const std::vector<int>& idx) { return comp[encode(idx)]; }

  bool is_zero() const;
  bool same_signature(const WorldTensor& o) const { return up == o.up; }

  WorldTensor scaled(const GaussRat& c) const;
  WorldTensor scaled_poly(const PolyExpr& p) const;

  WorldTensor& operator+=(const WorldTensor& o);
  WorldTensor& operator-=(const WorldTensor& o);
  friend WorldTensor operator+(WorldTensor a, const WorldTensor& b) { return a += b; }
  friend WorldTensor operator-(WorldTensor a, const WorldTensor& b) { return a -= b; }
  friend bool operator==(const WorldTensor& a, const WorldTensor& b) {
    return a.up == b.up && a.comp == b.comp;
  }

  std::string str() const;
};

WorldTensor outer(const WorldTensor& a, const WorldTensor& b);

// Natural contraction of an upper index with a lower index.
WorldTensor contract(const WorldTensor& a, size_t k1, size_t k2);
// Metric contraction of two same-height indices.
WorldTensor contract_eta(const WorldTensor& a, size_t k1, size_t k2);

WorldTensor raise_index(const WorldTensor& a, size_t k);
WorldTensor lower_index(const WorldTensor& a, size_t k);

// Symmetrize (average) or antisymmetrize (alternating average) over the
// listed index positions; heights must agree.
WorldTensor sym_indices(const WorldTensor& a, const std::vector<size_t>& which);
WorldTensor antisym_indices(const WorldTensor& a, const std::vector<size_t>& which);

// Move indices to a new order: result index k takes source index perm[k].
WorldTensor permute_indices(const WorldTensor& a, const std::vector<size_t>& perm);

// Hodge dual on an adjacent lower pair (k, k+1):
//   (*T)_{ab} = (1/2) eps_{abcd} T^{cd}   (pair heights must be lower).
WorldTensor hodge_pair(const WorldTensor& a, size_t k);

// Self-dual (sign=+1) or anti-self-dual (sign=-1) projection on a lower
// antisymmetric pair: (1/2)(T -+ i *T).
WorldTensor dual_project(const WorldTensor& a, size_t k, int sign);

// Componentwise complex conjugation (the polynomial layer's conjugation).
WorldTensor conj(const WorldTensor& a);

// Translate a grouped spinor all of whose groups have shape (1,1) with both
// sectors at equal height (both upper or both lower) into a world tensor;
// index heights follow the groups.
WorldTensor translate(const GroupedSpinor& a);

// Build the world 2-form of a symmetric primed 2-spinor:
//   Y_ab = translate( eps_{AB} (x) Y_{A'B'} ),
// paired as (A A')(B B'). For upper input uses eps^{AB} and upper output.
WorldTensor two_form_from_primed(const GroupedSpinor& y);
// Same for a symmetric unprimed 2-spinor: F_ab = translate(phi_{AB} eps_{A'B'}).
WorldTensor two_form_from_unprimed(const GroupedSpinor& phi);

}  // namespace spinv

#endif  // SPINVERIFY_WORLD_HPP
