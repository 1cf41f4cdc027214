#ifndef SPINVERIFY_RATIONAL_HPP
#define SPINVERIFY_RATIONAL_HPP

// Exact Gaussian-rational arithmetic. Every quantity in the verification path
// is a GaussRat; floating point is deliberately absent from this layer.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinv {

using Rat = boost::multiprecision::mpq_rational;

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  long n = e;
  if (n < 0) {
    if (b == 0) throw std::domain_error("rat_pow: zero to negative power");
    b = Rat(1) / b;
    n = -n;
  }
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// Powers of two show up as conjugation weights; keep a dedicated helper.
inline Rat two_pow(long e) { return rat_pow(Rat(2), e); }

struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long r) : re(r), im(0) {}                  // NOLINT(google-explicit-constructor)
  GaussRat(const Rat& r) : re(r), im(0) {}            // NOLINT(google-explicit-constructor)
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long p, long q) : re(Rat(p) / Rat(q)), im(0) {
    if (q == 0) throw std::domain_error("GaussRat: zero denominator");
  }

  static GaussRat zero() { return GaussRat(); }
  static GaussRat one() { return GaussRat(1); }
  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }
  // a + b*i with rational a, b given as integer pairs.
  static GaussRat make(long ar, long aq, long br, long bq) {
    return GaussRat(Rat(ar) / Rat(aq), Rat(br) / Rat(bq));
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }

  GaussRat operator-() const { return GaussRat(-re, -im); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i2 = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i2);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    Rat r = (re * o.re + im * o.im) / n;
    Rat i2 = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i2);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  // Total order (lexicographic); used only to make container iteration canonical.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  GaussRat pow(long e) const {
    if (e < 0) return GaussRat::one() / pow(-e);
    GaussRat acc = GaussRat::one();
    GaussRat b = *this;
    long n = e;
    while (n > 0) {
      if (n & 1) acc *= b;
      b *= b;
      n >>= 1;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) s += re.str();
    if (im != 0) {
      if (im > 0 && !s.empty()) s += "+";
      if (im == 1)
        s += "i";
      else if (im == -1)
        s += "-i";
      else
        s += im.str() + "*i";
    }
    return s;
  }
};

}  // namespace spinv

#endif  // SPINVERIFY_RATIONAL_HPP
