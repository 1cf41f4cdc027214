#ifndef SPINVERIFY_SPINOR_HPP
#define SPINVERIFY_SPINOR_HPP

// Grouped symmetric spinors in component form.
//
// A GroupedSpinor is a tensor whose indices come in groups; each group holds
// m unprimed and n primed 2-spinor indices, each set totally symmetric within
// the group, with one height (upper/lower) per sector per group. Because of
// the symmetry a group's components are determined by how many indices equal
// 1 in each sector, so the group's component grid is (m+1) x (n+1) and the
// whole object is the row-major product grid over groups. Entries are exact
// polynomial expressions.
//
// Conventions (fixed across the engine):
//   eps_{01} = eps^{01} = +1,
//   raising   psi^A = eps^{AB} psi_B,   lowering   psi_B = psi^A eps_{AB}.
// In count form, raising a rank-r symmetric set sends component c to
// (-1)^c * (old r-c); lowering sends c to (-1)^{r-c} * (old r-c).
//
// Conjugation exchanges the sectors of each group in place and multiplies by
// an exact power of two determined by the group's shape, heights and counts;
// this matches the conjugation map of the polynomial layer (see poly.hpp), so
// conj(jet-field spinor) is literally the conjugate-sector jet spinor.

#include <cstdint>
#include <string>
#include <vector>

#include "spinverify/poly.hpp"

namespace spinv {

struct GroupShape {
  int m = 0;       // unprimed rank
  int n = 0;       // primed rank
  bool u_up = false;  // unprimed height: true = upper
  bool p_up = false;  // primed height: true = upper

  friend bool operator==(const GroupShape& a, const GroupShape& b) {
    return a.m == b.m && a.n == b.n && (a.m == 0 || a.u_up == b.u_up) &&
           (a.n == 0 || a.p_up == b.p_up);
  }
};

// Count of intra-group contraction short-circuits (they are identically zero
// on symmetric groups); exposed for diagnostics.
long diag_intra_group_contractions();

class GroupedSpinor {
 public:
  std::vector<GroupShape> groups;
  std::vector<PolyExpr> comp;

  GroupedSpinor() = default;
  explicit GroupedSpinor(std::vector<GroupShape> gs);

  static GroupedSpinor scalar(PolyExpr p);

  size_t local_size(size_t g) const {
    return static_cast<size_t>((groups[g].m + 1) * (groups[g].n + 1));
  }
  size_t size() const;

  // Multi-index <-> flat offset. A multi-index is one (i, j) pair per group:
  // i = number of unprimed indices equal to 1, j = same for primed.
  size_t encode(const std::vector<std::pair<int, int>>& mi) const;
  std::vector<std::pair<int, int>> decode(size_t idx) const;

  const PolyExpr& at(const std::vector<std::pair<int, int>>& mi) const { return comp[encode(mi)]; }
  PolyExpr& at(const std::vector<std::pair<int, int>>& mi) { return comp[encode(mi)]; }

  bool is_zero() const;
  bool same_signature(const GroupedSpinor& o) const;
  size_t total_terms() const;

  GroupedSpinor scaled(const GaussRat& c) const;
  GroupedSpinor scaled_poly(const PolyExpr& p) const;

  GroupedSpinor& operator+=(const GroupedSpinor& o);
  GroupedSpinor& operator-=(const GroupedSpinor& o);
  friend GroupedSpinor operator+(GroupedSpinor a, const GroupedSpinor& b) { return a += b; }
  friend GroupedSpinor operator-(GroupedSpinor a, const GroupedSpinor& b) { return a -= b; }
  friend bool operator==(const GroupedSpinor& a, const GroupedSpinor& b) {
    return a.groups.size() == b.groups.size() && a.same_signature(b) && a.comp == b.comp;
  }

  std::string str() const;
};

// Tensor product: concatenates the group lists; no symmetrization happens.
GroupedSpinor sym_outer(const GroupedSpinor& a, const GroupedSpinor& b);

// Merge the selected groups into a single group (placed at the position of
// the first selected), symmetrizing each sector over all index placements
// (multinomial-weighted average; exact and idempotent). Heights must agree
// among merged groups wherever the sector rank is nonzero.
GroupedSpinor symmetrize_groups(const GroupedSpinor& a, const std::vector<size_t>& which);

// Contract r_u unprimed and r_p primed index pairs between groups g1 and g2.
// Same-height pairs use the epsilon spinor (g1 slot first); opposite heights
// use the natural pairing. Groups reduced to rank (0,0) are dropped.
// g1 == g2 is the intra-group case: identically zero (returned as such).
GroupedSpinor eps_contract(const GroupedSpinor& a, size_t g1, size_t g2, int r_u, int r_p);

// Change the height of one sector of one group.
GroupedSpinor raise_group(const GroupedSpinor& a, size_t g, bool primed_sector);
GroupedSpinor lower_group(const GroupedSpinor& a, size_t g, bool primed_sector);

GroupedSpinor permute_groups(const GroupedSpinor& a, const std::vector<size_t>& perm);

GroupedSpinor conj(const GroupedSpinor& a);

// Drop rank-(0,0) groups explicitly.
GroupedSpinor drop_empty_groups(const GroupedSpinor& a);

// Split group g of shape (m, n) into adjacent groups (m1, n1) + (m-m1, n-n1)
// carrying the same heights; the exact section of symmetrize_groups:
// component [(i1,j1)][(i2,j2)] = source [(i1+i2, j1+j2)].
GroupedSpinor split_group(const GroupedSpinor& a, size_t g, int m1, int n1);

// The epsilon spinor as two rank-(1,0) groups, lower or upper; and the primed
// version as two rank-(0,1) groups.
GroupedSpinor eps_spinor(bool upper);
GroupedSpinor eps_spinor_primed(bool upper);

// Exact binomial coefficient.
long binom(int n, int k);

}  // namespace spinv

#endif  // SPINVERIFY_SPINOR_HPP
