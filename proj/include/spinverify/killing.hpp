#ifndef SPINVERIFY_KILLING_HPP
#define SPINVERIFY_KILLING_HPP

// Conformal Killing data on flat space, in spinor component form:
//   - conformal Killing vectors            xi^{AA'}        (15 real dims)
//   - trace-free conformal Killing tensors zeta^{A..A'..}   ((k+1)^2(k+2)^2(2k+3)/12)
//   - conformal Killing-Yano forms         Y^{A'_1..A'_2k}  ((2k+1)(2k+2)(2k+3)/3 real)
// The vector and Yano bases come from the closed-form general solutions
// (polynomials of bounded degree in the coordinates with free constant
// spinors); the valence-2 tensor basis is generated from symmetrized products
// of vector solutions and filtered to an exact maximal independent set, whose
// size is independently checked against the dimension formula.

#include <vector>

#include "spinverify/jet.hpp"
#include "spinverify/linalg.hpp"

namespace spinv {

enum class KillingKind {
  ConformalVector,   // param ignored
  ConformalTensor,   // param = valence k (0, 1, 2)
  ConformalYano,     // param = form rank 2k (2 or 4)
};

// Real basis: every element is itself an exact solution of the defining
// equation; the list's real span has the dimension reported by
// killing_dimension. (Yano data is complex; its list holds g and i*g pairs.)
std::vector<GroupedSpinor> killing_basis(const JetContext& ctx, KillingKind kind, int param);

// Complex generators for the Yano forms (half of the real list).
std::vector<GroupedSpinor> yano_complex_basis(const JetContext& ctx, int rank);

long killing_dimension(KillingKind kind, int param);

// Exact check of the defining equation (and, for the vector and valence-2
// Yano cases, of the equivalent trace-subtracted world-tensor equation after
// translation).
bool verify_killing(const JetContext& ctx, KillingKind kind, const GroupedSpinor& elem);

// Spinor divergence of a conformal Killing vector.
PolyExpr divergence(const JetContext& ctx, const GroupedSpinor& xi);

struct SpanReport {
  size_t products = 0;  // how many products were formed
  size_t rank = 0;      // exact real rank of their span
  long expected = 0;    // dimension formula for the target space
};

// Span of symmetrized products: valence-2 tensors from vector pairs, or
// rank-4 Yano forms from rank-2 pairs.
SpanReport product_span(const JetContext& ctx, KillingKind kind, int param);

// Coefficient matrix of a list of same-signature spinors over the union of
// their monomials (row k = element k), for exact rank computations.
GMat flatten_to_rows(const std::vector<GroupedSpinor>& elems);

// The metric as a world tensor (both indices at the given height).
WorldTensor metric_tensor(bool upper);

}  // namespace spinv

#endif  // SPINVERIFY_KILLING_HPP
