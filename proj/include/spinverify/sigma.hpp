#ifndef SPINVERIFY_SIGMA_HPP
#define SPINVERIFY_SIGMA_HPP

// The spinor-to-world dictionary.
//
// The engine uses the rational van-der-Waerden symbols
//   sigma_0 = [[1, 0], [0, 1/2]]        sigma_1 = [[0, 1], [1/2, 0]]
//   sigma_2 = [[0, i], [-i/2, 0]]       sigma_3 = [[1, 0], [0, -1/2]]
// (rows C = 0,1; columns C' = 0,1). They satisfy, exactly over the Gaussian
// rationals,
//   sigma_a^{AA'} sigma_b^{BB'} eps_{AB} eps_{A'B'} = eta_{ab},
// with eta = diag(1,-1,-1,-1) and eps_{01} = +1. The coordinate matrix is
// w^{CC'} = x^a sigma_a^{CC'}:
//   w00 = x0+x3,  w01 = x1+i x2,  w10 = (x1-i x2)/2,  w11 = (x0-x3)/2,
// inverted by
//   x0 = (w00+2 w11)/2, x1 = (w01+2 w10)/2, x2 = (w01-2 w10)/(2i),
//   x3 = (w00-2 w11)/2.
// The orientation is fixed by eps_{0123} = +1 on lower world indices.

#include "spinverify/poly.hpp"

namespace spinv {

// sigma_a^{CC'} entry.
inline GaussRat sigma_entry(int a, int C, int Cp) {
  static const GaussRat z = GaussRat::zero();
  const GaussRat h(1, 2);
  const GaussRat ih(Rat(0), Rat(1) / Rat(2));  // i/2
  switch (a) {
    case 0:
      return (C == 0 && Cp == 0) ? GaussRat::one() : (C == 1 && Cp == 1 ? h : z);
    case 1:
      return (C == 0 && Cp == 1) ? GaussRat::one() : (C == 1 && Cp == 0 ? h : z);
    case 2:
      if (C == 0 && Cp == 1) return GaussRat::i();
      if (C == 1 && Cp == 0) return -ih;
      return z;
    case 3:
      return (C == 0 && Cp == 0) ? GaussRat::one() : (C == 1 && Cp == 1 ? -h : z);
    default:
      throw std::out_of_range("sigma_entry: bad world index");
  }
}

// Inverse dictionary: V^a = sum_{CC'} sigma_inv(a,C,C') V^{CC'} for an
// upper-upper spinor pair; the rows of the inversion displayed above.
inline GaussRat sigma_inv_entry(int a, int C, int Cp) {
  const GaussRat h(1, 2);
  const GaussRat z = GaussRat::zero();
  switch (a) {
    case 0:
      if (C == 0 && Cp == 0) return h;
      if (C == 1 && Cp == 1) return GaussRat::one();
      return z;
    case 1:
      if (C == 0 && Cp == 1) return h;
      if (C == 1 && Cp == 0) return GaussRat::one();
      return z;
    case 2:
      // x2 = (w01 - 2 w10)/(2i) = -(i/2) w01 + i w10
      if (C == 0 && Cp == 1) return GaussRat(Rat(0), -Rat(1) / Rat(2));
      if (C == 1 && Cp == 0) return GaussRat::i();
      return z;
    case 3:
      if (C == 0 && Cp == 0) return h;
      if (C == 1 && Cp == 1) return -GaussRat::one();
      return z;
    default:
      throw std::out_of_range("sigma_inv_entry: bad world index");
  }
}

inline int eta_sign(int a) { return a == 0 ? 1 : -1; }

// Totally antisymmetric world symbol with lower-index normalization
// eps_{0123} = +1. (With this metric the all-upper version is the negative.)
inline int epsilon_world(int a, int b, int c, int d) {
  int v[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
    }
  return sign;
}

// World coordinate x^a as a polynomial in the w variables.
inline PolyExpr world_coord(int a) {
  PolyExpr p;
  for (int C = 0; C <= 1; ++C)
    for (int Cp = 0; Cp <= 1; ++Cp) {
      GaussRat c = sigma_inv_entry(a, C, Cp);
      if (!c.is_zero()) p += c * PolyExpr::var(VarId::coord(C, Cp));
    }
  return p;
}

}  // namespace spinv

#endif  // SPINVERIFY_SIGMA_HPP
