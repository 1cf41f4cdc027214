#ifndef SPINVERIFY_LINALG_HPP
#define SPINVERIFY_LINALG_HPP

// Exact linear algebra over the rationals and Gaussian rationals: ranks,
// nullspaces, solving, greedy independence filtering, and extraction of
// linear systems from polynomial expressions that are linear in designated
// formal constants. No pivoting heuristics matter here beyond exactness;
// everything is plain fraction-exact Gaussian elimination.

#include <cstdint>
#include <optional>
#include <vector>

#include "spinverify/poly.hpp"

namespace spinv {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using GVec = std::vector<GaussRat>;
using GMat = std::vector<GVec>;

size_t rank_q(QMat m);
size_t rank_g(GMat m);

// Basis of the right nullspace of A (vectors x with A x = 0), exact.
std::vector<GVec> nullspace_g(const GMat& a);

// One exact solution of A x = b, if consistent.
std::optional<GVec> solve_g(const GMat& a, const GVec& b);

// Map complex row vectors to real row vectors (re parts then im parts); the
// rational rank of the image is the real dimension of the real span.
QMat realify(const GMat& m);

// Indices of a maximal linearly independent subset, processed in order.
// If over_reals, independence is over the reals (realified); otherwise over
// the Gaussian rationals.
std::vector<size_t> independent_subset(const GMat& rows, bool over_reals);

// A linear system  A c + b = 0  extracted from expressions linear in the
// unknown formal constants (by constant index). Every distinct residual
// monomial (the monomial with unknown factors removed) of every expression
// contributes one row. Throws if an expression is not affine in the unknowns.
struct LinearSystem {
  GMat a;
  GVec b;
};
LinearSystem extract_linear_system(const std::vector<const PolyExpr*>& exprs,
                                   const std::vector<uint32_t>& unknown_ids);

// One exact solution of A c + b = 0, if consistent.
std::optional<GVec> solve_affine(const LinearSystem& sys);

}  // namespace spinv

#endif  // SPINVERIFY_LINALG_HPP
