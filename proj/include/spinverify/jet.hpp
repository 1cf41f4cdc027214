#ifndef SPINVERIFY_JET_HPP
#define SPINVERIFY_JET_HPP

// Jet calculus for the massless free field of spin s = twos/2.
//
// The field equation makes the fully symmetrized derivatives of the field a
// complete set of free coordinates: the engine's jet variables are
//   u_p[i,j]  (field sector;    one group of 2s+p unprimed, p primed indices)
//   v_p[i,j]  (conjugate sector; p unprimed, 2s+p primed),
// all indices lower, normalized so that the total spinor derivative is the
// clean count shift
//   D_{CC'} u_p[i,j] = u_{p+1}[i+C, j+C'],
// and likewise for v. Everything downstream (symmetries, currents, component
// forms) reduces to polynomial identities in these variables, the coordinate
// matrix entries w^{CC'}, and formal constants.

#include "spinverify/spinor.hpp"
#include "spinverify/world.hpp"

namespace spinv {

struct JetContext {
  int twos = 1;       // 2s
  int max_order = 6;  // highest jet order p allocated

  JetContext() = default;
  JetContext(int twos_, int max_order_) : twos(twos_), max_order(max_order_) {}
};

// The total spinor derivative D_{CC'} of a scalar expression.
PolyExpr d_spin(const JetContext& ctx, int C, int Cp, const PolyExpr& f);

// The world total derivative D_a = sum_{CC'} sigma_a^{CC'} D_{CC'}.
PolyExpr world_partial(const JetContext& ctx, int a, const PolyExpr& f);

// The wave operator eta^{ab} D_a D_b.
PolyExpr box(const JetContext& ctx, const PolyExpr& f);

// Appends one (1,1) lower-lower group holding D_{CC'} of each component.
GroupedSpinor total_derivative(const JetContext& ctx, const GroupedSpinor& a);

// Appends one lower world index holding D_a of each component.
WorldTensor world_derivative(const JetContext& ctx, const WorldTensor& a);

// Apply the total derivative p times and merge the p new groups into a
// single symmetrized (p,p) lower-lower group (p = 0: identity; p = 1: one
// derivative group). Mixed partials commute, so this is the full symmetrized
// p-th derivative.
GroupedSpinor sym_derivative_power(const JetContext& ctx, const GroupedSpinor& a, int p);

// The order-p jet spinor of the field (conj_sector = false) or its conjugate
// (true), as a single lower-lower group filled with jet variables.
GroupedSpinor jet_field(const JetContext& ctx, bool conj_sector, int p);

}  // namespace spinv

#endif  // SPINVERIFY_JET_HPP
