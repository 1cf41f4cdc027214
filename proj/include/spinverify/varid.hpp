#ifndef SPINVERIFY_VARID_HPP
#define SPINVERIFY_VARID_HPP

// Variable identifiers for the free polynomial ring the engine works in.
//
// Kinds:
//   Lambda      - the homotopy parameter (one variable).
//   Constant    - a formal *real* symbol (conjugation fixes it). Used for
//                 symbolic basis coefficients, ansatz unknowns, spectator
//                 spinor components, ...
//   Coord       - the four complex coordinates w^{CC'}, the entries of the
//                 coordinate spinor matrix. Payload: (C, C') in {0,1}^2.
//   JetU        - jet coordinate of the field sector: component [i][j] of the
//                 fully symmetrized p-th derivative of the rank-2s field,
//                 where i counts unprimed '1' indices (0..2s+p) and j primed
//                 '1' indices (0..p). Payload: (twos, p, i, j).
//   JetV        - same for the conjugate sector; i in 0..p, j in 0..2s+p.
//
// The packed 64-bit value provides the total variable order used for
// canonical monomial form; the specific order is irrelevant mathematically
// but must be fixed and deterministic.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinv {

enum class VarKind : uint8_t {
  Lambda = 0,
  Constant = 1,
  Coord = 2,
  JetU = 3,
  JetV = 4,
};

struct VarId {
  uint64_t raw = 0;

  VarId() = default;
  explicit VarId(uint64_t r) : raw(r) {}

  static VarId lambda() { return pack(VarKind::Lambda, 0, 0, 0, 0); }
  static VarId constant(uint32_t index) {
    return pack(VarKind::Constant, (index >> 16) & 0xff, (index >> 8) & 0xff, index & 0xff, 0);
  }
  static VarId coord(int C, int Cp) {
    check01(C, "coord C");
    check01(Cp, "coord C'");
    return pack(VarKind::Coord, 0, 0, static_cast<uint8_t>(C), static_cast<uint8_t>(Cp));
  }
  static VarId jet_u(int twos, int p, int i, int j) {
    check_range(twos, 0, 8, "jet twos");
    check_range(p, 0, 250, "jet order");
    check_range(i, 0, twos + p, "jet unprimed count");
    check_range(j, 0, p, "jet primed count");
    return pack(VarKind::JetU, static_cast<uint8_t>(twos), static_cast<uint8_t>(p),
                static_cast<uint8_t>(i), static_cast<uint8_t>(j));
  }
  static VarId jet_v(int twos, int p, int i, int j) {
    check_range(twos, 0, 8, "jet twos");
    check_range(p, 0, 250, "jet order");
    check_range(i, 0, p, "jet unprimed count");
    check_range(j, 0, twos + p, "jet primed count");
    return pack(VarKind::JetV, static_cast<uint8_t>(twos), static_cast<uint8_t>(p),
                static_cast<uint8_t>(i), static_cast<uint8_t>(j));
  }

  VarKind kind() const { return static_cast<VarKind>((raw >> 32) & 0xff); }
  int a() const { return static_cast<int>((raw >> 24) & 0xff); }  // twos / const hi
  int b() const { return static_cast<int>((raw >> 16) & 0xff); }  // p    / const mid
  int c() const { return static_cast<int>((raw >> 8) & 0xff); }   // i    / coord C / const lo
  int d() const { return static_cast<int>(raw & 0xff); }          // j    / coord C'

  bool is_jet() const { return kind() == VarKind::JetU || kind() == VarKind::JetV; }

  uint32_t const_index() const {
    if (kind() != VarKind::Constant) throw std::logic_error("const_index on non-constant");
    return (static_cast<uint32_t>(a()) << 16) | (static_cast<uint32_t>(b()) << 8) |
           static_cast<uint32_t>(c());
  }

  friend bool operator==(VarId x, VarId y) { return x.raw == y.raw; }
  friend bool operator!=(VarId x, VarId y) { return x.raw != y.raw; }
  friend bool operator<(VarId x, VarId y) { return x.raw < y.raw; }

  std::string str() const {
    switch (kind()) {
      case VarKind::Lambda:
        return "t";
      case VarKind::Constant:
        return "c" + std::to_string(const_index());
      case VarKind::Coord:
        return "w" + std::to_string(c()) + std::to_string(d());
      case VarKind::JetU:
        return "u" + std::to_string(b()) + "[" + std::to_string(c()) + "," + std::to_string(d()) +
               "]";
      case VarKind::JetV:
        return "v" + std::to_string(b()) + "[" + std::to_string(c()) + "," + std::to_string(d()) +
               "]";
    }
    return "?";
  }

 private:
  static VarId pack(VarKind k, uint8_t a, uint8_t b, uint8_t c, uint8_t d) {
    uint64_t r = (static_cast<uint64_t>(k) << 32) | (static_cast<uint64_t>(a) << 24) |
                 (static_cast<uint64_t>(b) << 16) | (static_cast<uint64_t>(c) << 8) |
                 static_cast<uint64_t>(d);
    return VarId(r);
  }
  static void check01(int v, const char* what) {
    if (v != 0 && v != 1) throw std::out_of_range(std::string(what) + " must be 0 or 1");
  }
  static void check_range(int v, int lo, int hi, const char* what) {
    if (v < lo || v > hi) throw std::out_of_range(std::string(what) + " out of range");
  }
};

}  // namespace spinv

#endif  // SPINVERIFY_VARID_HPP
