#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "spinverify/poly.hpp"
#include "spinverify/rational.hpp"
#include "spinverify/varid.hpp"

using namespace spinv;

namespace {

// Small deterministic generator (xorshift) for property tests.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

PolyExpr random_poly(Rng& rng, const std::vector<VarId>& vars) {
  PolyExpr p;
  int nterms = static_cast<int>(rng.small(1, 5));
  for (int t = 0; t < nterms; ++t) {
    PolyExpr term =
        PolyExpr::constant(GaussRat(Rat(rng.small(-4, 4)), Rat(rng.small(-4, 4)) / Rat(3)));
    int nf = static_cast<int>(rng.small(0, 3));
    for (int f = 0; f < nf; ++f) {
      VarId v = vars[static_cast<size_t>(rng.small(0, static_cast<long>(vars.size()) - 1))];
      term *= PolyExpr::var(v);
    }
    p += term;
  }
  return p;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  CHECK((GaussRat(1) + i) * (GaussRat(1) - i) == GaussRat(2));
  GaussRat z = GaussRat::make(3, 2, -5, 7);  // 3/2 - 5/7 i
  CHECK(z * z.conj() == GaussRat(Rat(9) / Rat(4) + Rat(25) / Rat(49), Rat(0)));
  CHECK(z / z == GaussRat::one());
  CHECK(z.pow(3) == z * z * z);
  CHECK(two_pow(-3) == Rat(1) / Rat(8));
  CHECK(rat_pow(Rat(3) / Rat(2), 2) == Rat(9) / Rat(4));
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::vector<VarId> vars = {VarId::coord(0, 0), VarId::coord(1, 0), VarId::jet_u(1, 0, 1, 0),
                             VarId::jet_v(1, 1, 0, 2), VarId::constant(7)};
  Rng rng(0x5eed);
  for (int trial = 0; trial < 25; ++trial) {
    PolyExpr a = random_poly(rng, vars);
    PolyExpr b = random_poly(rng, vars);
    PolyExpr c = random_poly(rng, vars);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * PolyExpr::one() == a);
    CHECK((a * PolyExpr::zero()).is_zero());
  }
}

TEST_CASE("difference of squares and exact cancellation") {
  PolyExpr x = PolyExpr::var(VarId::coord(0, 0));
  PolyExpr y = PolyExpr::var(VarId::coord(1, 1));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x - x).is_zero());
  PolyExpr p = (x + y) * (x + y) - x * x - GaussRat(2) * (x * y) - y * y;
  CHECK(p.is_zero());
}

TEST_CASE("conjugation: coordinate weights") {
  // w01 = x1 + i x2 and w10 = (x1 - i x2)/2, so conj(w01) = 2 w10.
  PolyExpr w01 = PolyExpr::var(VarId::coord(0, 1));
  PolyExpr w10 = PolyExpr::var(VarId::coord(1, 0));
  CHECK(w01.conj() == GaussRat(2) * w10);
  CHECK(w10.conj() == GaussRat(1, 2) * w01);
  PolyExpr w00 = PolyExpr::var(VarId::coord(0, 0));
  CHECK(w00.conj() == w00);
  PolyExpr w11 = PolyExpr::var(VarId::coord(1, 1));
  CHECK(w11.conj() == w11);
}

TEST_CASE("conjugation: jet weights and involution") {
  int twos = 2;  // a rank-2 field (s = 1)
  PolyExpr u = PolyExpr::var(VarId::jet_u(twos, 1, 2, 1));
  PolyExpr v = PolyExpr::var(VarId::jet_v(twos, 1, 1, 2));
  // conj(u_1[2,1]) = 2^{2-1-2} v_1[1,2] = (1/2) v_1[1,2]
  CHECK(u.conj() == GaussRat(1, 2) * v);
  // and back: conj(v_1[1,2]) = 2^{2+1-2} u_1[2,1] = 2 u_1[2,1]
  CHECK(v.conj() == GaussRat(2) * u);

  std::vector<VarId> vars = {VarId::coord(0, 1), VarId::coord(1, 0), VarId::coord(0, 0),
                             VarId::jet_u(twos, 2, 3, 0), VarId::jet_v(twos, 0, 0, 1)};
  Rng rng(0xabcd);
  for (int trial = 0; trial < 20; ++trial) {
    PolyExpr a = random_poly(rng, vars);
    PolyExpr b = random_poly(rng, vars);
    CHECK(a.conj().conj() == a);                    // involution
    CHECK((a * b).conj() == a.conj() * b.conj());   // ring homomorphism
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  CHECK(PolyExpr::i().conj() == PolyExpr::constant(-GaussRat::i()));
}

TEST_CASE("partial derivatives and derivations") {
  VarId w = VarId::coord(0, 0);
  VarId u = VarId::jet_u(1, 0, 0, 0);
  PolyExpr p = PolyExpr::var(w) * PolyExpr::var(w) * PolyExpr::var(u);
  CHECK(p.partial(w) == GaussRat(2) * (PolyExpr::var(w) * PolyExpr::var(u)));
  CHECK(p.partial(u) == PolyExpr::var(w) * PolyExpr::var(w));

  // Derivation mimicking a total derivative: w -> 1, u -> u1 (jet shift).
  PolyExpr one = PolyExpr::one();
  PolyExpr u1 = PolyExpr::var(VarId::jet_u(1, 1, 0, 0));
  auto images = [&](VarId v) -> const PolyExpr* {
    if (v == w) return &one;
    if (v == u) return &u1;
    return nullptr;
  };
  // D(w^2 u) = 2 w u + w^2 u1  (Leibniz)
  PolyExpr expected = GaussRat(2) * (PolyExpr::var(w) * PolyExpr::var(u)) +
                      PolyExpr::var(w) * PolyExpr::var(w) * u1;
  CHECK(p.derive(images) == expected);
}

TEST_CASE("substitution") {
  VarId c = VarId::constant(0);
  VarId w = VarId::coord(1, 1);
  PolyExpr p = PolyExpr::var(c) * PolyExpr::var(c) * PolyExpr::var(w) + PolyExpr::var(c);
  std::map<VarId, PolyExpr> repl;
  repl[c] = PolyExpr::constant(GaussRat(3, 2));
  PolyExpr q = p.subs(repl);
  CHECK(q == GaussRat(9, 4) * PolyExpr::var(w) + PolyExpr::constant(GaussRat(3, 2)));
}

TEST_CASE("homotopy scaling and unit-interval integration") {
  // integral of lambda dλ = 1/2
  PolyExpr lam = PolyExpr::var(VarId::lambda());
  CHECK(lam.integrate_unit_interval() == PolyExpr::constant(GaussRat(1, 2)));
  // integral of (lambda + lambda^2) = 5/6
  CHECK((lam + lam * lam).integrate_unit_interval() == PolyExpr::constant(GaussRat(5, 6)));

  // scale_jets_by_lambda multiplies each monomial by lambda^(jet degree)
  PolyExpr u = PolyExpr::var(VarId::jet_u(1, 0, 0, 0));
  PolyExpr v = PolyExpr::var(VarId::jet_v(1, 0, 0, 1));
  PolyExpr w = PolyExpr::var(VarId::coord(0, 1));
  PolyExpr p = u * v * w + w;
  PolyExpr scaled = p.scale_jets_by_lambda();
  PolyExpr expected = lam * lam * (u * v * w) + w;
  CHECK(scaled == expected);
  // and the homotopy of a bilinear term gives the 1/3 weight
  CHECK((u * v).scale_jets_by_lambda().integrate_unit_interval() ==
        GaussRat(1, 3) * (u * v));
}

TEST_CASE("degree bookkeeping") {
  PolyExpr u = PolyExpr::var(VarId::jet_u(1, 2, 1, 1));
  PolyExpr w = PolyExpr::var(VarId::coord(0, 0));
  PolyExpr p = u * u * w + w * w * w;
  CHECK(p.degree_in([](VarId v) { return v.is_jet(); }) == 2);
  CHECK(p.degree_in([](VarId v) { return v.kind() == VarKind::Coord; }) == 3);
  CHECK(p.contains_kind(VarKind::JetU));
  CHECK(!p.contains_kind(VarKind::JetV));
}
