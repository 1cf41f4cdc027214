#ifndef SPINVERIFY_POLY_HPP
#define SPINVERIFY_POLY_HPP

// Sparse multivariate polynomials over the Gaussian rationals, in canonical
// normal form at all times: monomials are sorted variable lists, the term map
// is ordered, and zero coefficients are never stored. Identity of two
// expressions is literal equality of normal forms; "is zero" means the term
// map is empty. This is what makes every verification in the engine exact.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinverify/rational.hpp"
#include "spinverify/varid.hpp"

namespace spinv {

// A monomial: sorted (variable, exponent>0) list. Empty vector = 1.
using Mono = std::vector<std::pair<VarId, int>>;

inline Mono mono_mul(const Mono& x, const Mono& y) {
  Mono out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      out.push_back(x[i++]);
    } else if (y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      out.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i;
      ++j;
    }
  }
  while (i < x.size()) out.push_back(x[i++]);
  while (j < y.size()) out.push_back(y[j++]);
  return out;
}

class PolyExpr {
 public:
  using TermMap = std::map<Mono, GaussRat>;

  PolyExpr() = default;

  static PolyExpr zero() { return PolyExpr(); }
  static PolyExpr constant(const GaussRat& c) {
    PolyExpr p;
    if (!c.is_zero()) p.terms_[Mono{}] = c;
    return p;
  }
  static PolyExpr one() { return constant(GaussRat::one()); }
  static PolyExpr i() { return constant(GaussRat::i()); }
  static PolyExpr var(VarId v) {
    PolyExpr p;
    p.terms_[Mono{{v, 1}}] = GaussRat::one();
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }

  // The constant term (0 if absent).
  GaussRat constant_part() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? GaussRat::zero() : it->second;
  }

  // True iff the expression is a plain constant (including 0).
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  void add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyExpr& operator+=(const PolyExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolyExpr& operator-=(const PolyExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
  PolyExpr operator-() const {
    PolyExpr p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }

  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
    PolyExpr out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
  }
  PolyExpr& operator*=(const PolyExpr& o) { return *this = *this * o; }

  PolyExpr scaled(const GaussRat& c) const {
    PolyExpr out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
  }

  friend bool operator==(const PolyExpr& a, const PolyExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyExpr& a, const PolyExpr& b) { return !(a == b); }

  // Complex conjugation: conjugate coefficients and apply the engine's
  // conjugation map on variables. In this basis conjugation swaps a variable
  // with its partner and carries an exact power-of-two weight:
  //   w^{CC'} -> 2^{[C'=1]-[C=1]} w^{C'C}
  //   u_p[i,j] -> 2^{i-j-2s} v_p[j,i]
  //   v_p[i,j] -> 2^{2s+i-j} u_p[j,i]
  // Formal constants and the homotopy parameter are real. An involution.
  PolyExpr conj() const {
    PolyExpr out;
    for (const auto& [m, c] : terms_) {
      GaussRat coeff = c.conj();
      Mono target;
      target.reserve(m.size());
      for (const auto& [v, e] : m) {
        auto [tv, w] = conj_var(v);
        target.emplace_back(tv, e);
        if (!(w == GaussRat::one())) coeff *= w.pow(e);
      }
      std::sort(target.begin(), target.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      out.add_term(target, coeff);
    }
    return out;
  }

  static std::pair<VarId, GaussRat> conj_var(VarId v) {
    switch (v.kind()) {
      case VarKind::Lambda:
      case VarKind::Constant:
        return {v, GaussRat::one()};
      case VarKind::Coord: {
        int C = v.c(), Cp = v.d();
        return {VarId::coord(Cp, C), GaussRat(two_pow((Cp == 1) - (C == 1)))};
      }
      case VarKind::JetU: {
        int twos = v.a(), p = v.b(), i = v.c(), j = v.d();
        return {VarId::jet_v(twos, p, j, i), GaussRat(two_pow(i - j - twos))};
      }
      case VarKind::JetV: {
        int twos = v.a(), p = v.b(), i = v.c(), j = v.d();
        return {VarId::jet_u(twos, p, j, i), GaussRat(two_pow(twos + i - j))};
      }
    }
    throw std::logic_error("conj_var: bad kind");
  }

  // Formal partial derivative with respect to one variable.
  PolyExpr partial(VarId v) const {
    PolyExpr out;
    for (const auto& [m, c] : terms_) {
      for (size_t k = 0; k < m.size(); ++k) {
        if (m[k].first != v) continue;
        Mono rest = m;
        if (rest[k].second == 1)
          rest.erase(rest.begin() + static_cast<long>(k));
        else
          rest[k].second -= 1;
        out.add_term(rest, c * GaussRat(m[k].second));
        break;
      }
    }
    return out;
  }

  // Apply a derivation: D(xy) = D(x)y + xD(y), with D given on variables.
  // Variables not in `images` map to zero.
  PolyExpr derive(const std::function<const PolyExpr*(VarId)>& images) const {
    PolyExpr out;
    for (const auto& [m, c] : terms_) {
      for (size_t k = 0; k < m.size(); ++k) {
        const PolyExpr* img = images(m[k].first);
        if (img == nullptr || img->is_zero()) continue;
        Mono rest = m;
        if (rest[k].second == 1)
          rest.erase(rest.begin() + static_cast<long>(k));
        else
          rest[k].second -= 1;
        GaussRat factor = c * GaussRat(m[k].second);
        for (const auto& [mi, ci] : img->terms()) out.add_term(mono_mul(rest, mi), factor * ci);
      }
    }
    return out;
  }

  // Substitute polynomials for variables (variables not in the map persist).
  PolyExpr subs(const std::map<VarId, PolyExpr>& repl) const {
    PolyExpr out;
    for (const auto& [m, c] : terms_) {
      PolyExpr term = PolyExpr::constant(c);
      Mono passthrough;
      for (const auto& [v, e] : m) {
        auto it = repl.find(v);
        if (it == repl.end()) {
          passthrough.emplace_back(v, e);
        } else {
          PolyExpr pw = PolyExpr::one();
          for (int k = 0; k < e; ++k) pw *= it->second;
          term *= pw;
        }
      }
      if (!passthrough.empty()) {
        PolyExpr shell;
        shell.terms_[passthrough] = GaussRat::one();
        term *= shell;
      }
      out += term;
    }
    return out;
  }

  // Replace every jet variable z by lambda*z (both sectors); coordinates,
  // constants and existing lambda powers are untouched. Exact monomial op:
  // multiplies each monomial by lambda^(total jet degree).
  PolyExpr scale_jets_by_lambda() const {
    PolyExpr out;
    for (const auto& [m, c] : terms_) {
      int k = 0;
      for (const auto& [v, e] : m)
        if (v.is_jet()) k += e;
      if (k == 0) {
        out.add_term(m, c);
      } else {
        out.add_term(mono_mul(m, Mono{{VarId::lambda(), k}}), c);
      }
    }
    return out;
  }

  // Definite integral over the homotopy parameter from 0 to 1:
  // lambda^k * m  ->  m / (k+1). Exact.
  PolyExpr integrate_unit_interval() const {
    PolyExpr out;
    VarId lam = VarId::lambda();
    for (const auto& [m, c] : terms_) {
      int k = 0;
      Mono rest;
      rest.reserve(m.size());
      for (const auto& [v, e] : m) {
        if (v == lam)
          k = e;
        else
          rest.emplace_back(v, e);
      }
      out.add_term(rest, c / GaussRat(k + 1));
    }
    return out;
  }

  // Total degree in the variables selected by `pred`.
  int degree_in(const std::function<bool(VarId)>& pred) const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
      (void)c;
      int d = 0;
      for (const auto& [v, e] : m)
        if (pred(v)) d += e;
      deg = std::max(deg, d);
    }
    return deg;
  }

  bool contains_kind(VarKind k) const {
    for (const auto& [m, c] : terms_) {
      (void)c;
      for (const auto& [v, e] : m) {
        (void)e;
        if (v.kind() == k) return true;
      }
    }
    return false;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + c.str() + ")";
      for (const auto& [v, e] : m) {
        s += "*" + v.str();
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  TermMap terms_;
};

inline PolyExpr operator*(const GaussRat& c, const PolyExpr& p) { return p.scaled(c); }

}  // namespace spinv

#endif  // SPINVERIFY_POLY_HPP
