#include "spinverify/world.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace spinv {

size_t WorldTensor::encode(const std::vector<int>& idx) const {
  if (idx.size() != up.size()) throw std::logic_error("world encode: wrong arity");
  size_t flat = 0;
  for (int v : idx) {
    if (v < 0 || v > 3) throw std::out_of_range("world index out of range");
    flat = flat * 4 + static_cast<size_t>(v);
  }
  return flat;
}

std::vector<int> WorldTensor::decode(size_t flat) const {
  std::vector<int> idx(up.size());
  for (size_t k = up.size(); k-- > 0;) {
    idx[k] = static_cast<int>(flat & 3);
    flat >>= 2;
  }
  return idx;
}

bool WorldTensor::is_zero() const {
  for (const auto& c : comp)
    if (!c.is_zero()) return false;
  return true;
}

WorldTensor WorldTensor::scaled(const GaussRat& c) const {
  WorldTensor out = *this;
  for (auto& e : out.comp) e = e.scaled(c);
  return out;
}

WorldTensor WorldTensor::scaled_poly(const PolyExpr& p) const {
  WorldTensor out = *this;
  for (auto& e : out.comp) e = e * p;
  return out;
}

WorldTensor& WorldTensor::operator+=(const WorldTensor& o) {
  if (up != o.up) throw std::logic_error("world add: signature mismatch");
  for (size_t k = 0; k < comp.size(); ++k) comp[k] += o.comp[k];
  return *this;
}

WorldTensor& WorldTensor::operator-=(const WorldTensor& o) {
  if (up != o.up) throw std::logic_error("world sub: signature mismatch");
  for (size_t k = 0; k < comp.size(); ++k) comp[k] -= o.comp[k];
  return *this;
}

std::string WorldTensor::str() const {
  std::string s = "world[";
  for (size_t k = 0; k < up.size(); ++k) s += up[k] ? '^' : '_';
  s += "]";
  for (size_t k = 0; k < comp.size(); ++k) {
    if (comp[k].is_zero()) continue;
    auto idx = decode(k);
    s += "\n  @";
    for (int v : idx) s += std::to_string(v);
    s += " = " + comp[k].str();
  }
  return s;
}

WorldTensor outer(const WorldTensor& a, const WorldTensor& b) {
  std::vector<bool> h = a.up;
  h.insert(h.end(), b.up.begin(), b.up.end());
  WorldTensor out(h);
  for (size_t i = 0; i < a.comp.size(); ++i)
    for (size_t j = 0; j < b.comp.size(); ++j) out.comp[i * b.comp.size() + j] = a.comp[i] * b.comp[j];
  return out;
}

namespace {

WorldTensor contract_impl(const WorldTensor& a, size_t k1, size_t k2, bool use_eta) {
  if (k1 == k2 || k1 >= a.up.size() || k2 >= a.up.size())
    throw std::logic_error("world contract: bad positions");
  if (use_eta) {
    if (a.up[k1] != a.up[k2]) throw std::logic_error("contract_eta: mixed heights");
  } else {
    if (a.up[k1] == a.up[k2]) throw std::logic_error("contract: same heights");
  }
  std::vector<bool> h;
  for (size_t k = 0; k < a.up.size(); ++k)
    if (k != k1 && k != k2) h.push_back(a.up[k]);
  WorldTensor out(h);
  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto omi = out.decode(oidx);
    PolyExpr acc;
    for (int x = 0; x < 4; ++x) {
      std::vector<int> smi(a.up.size());
      size_t c = 0;
      for (size_t k = 0; k < a.up.size(); ++k) {
        if (k == k1 || k == k2)
          smi[k] = x;
        else
          smi[k] = omi[c++];
      }
      const PolyExpr& v = a.comp[a.encode(smi)];
      if (use_eta && eta_sign(x) < 0)
        acc -= v;
      else
        acc += v;
    }
    out.comp[oidx] = std::move(acc);
  }
  return out;
}

}  // namespace

WorldTensor contract(const WorldTensor& a, size_t k1, size_t k2) {
  return contract_impl(a, k1, k2, false);
}

WorldTensor contract_eta(const WorldTensor& a, size_t k1, size_t k2) {
  return contract_impl(a, k1, k2, true);
}

namespace {
WorldTensor reheight_world(const WorldTensor& a, size_t k, bool to_upper) {
  if (k >= a.up.size()) throw std::out_of_range("world reheight: bad index");
  if (a.up[k] == to_upper) throw std::logic_error("world reheight: already at height");
  WorldTensor out = a;
  out.up[k] = to_upper;
  for (size_t idx = 0; idx < out.comp.size(); ++idx) {
    if (eta_sign(out.decode(idx)[k]) < 0) out.comp[idx] = -out.comp[idx];
  }
  return out;
}
}  // namespace

WorldTensor raise_index(const WorldTensor& a, size_t k) { return reheight_world(a, k, true); }
WorldTensor lower_index(const WorldTensor& a, size_t k) { return reheight_world(a, k, false); }

namespace {

WorldTensor sym_impl(const WorldTensor& a, const std::vector<size_t>& which, bool anti) {
  for (size_t k : which)
    if (k >= a.up.size() || a.up[k] != a.up[which[0]])
      throw std::logic_error("sym/antisym: bad or mismatched positions");
  std::vector<size_t> perm(which.begin(), which.end());
  std::sort(perm.begin(), perm.end());
  WorldTensor out(a.up);
  long count = 0;
  std::vector<size_t> p = perm;
  // Enumerate permutations of the selected positions.
  std::vector<size_t> order(p.size());
  for (size_t i = 0; i < p.size(); ++i) order[i] = i;
  do {
    int sign = 1;
    if (anti) {
      // parity of `order`
      std::vector<bool> seen(order.size(), false);
      for (size_t i = 0; i < order.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
          seen[j] = true;
          j = order[j];
          ++len;
        }
        if (len % 2 == 0) sign = -sign;
      }
    }
    for (size_t idx = 0; idx < a.comp.size(); ++idx) {
      if (a.comp[idx].is_zero()) continue;
      auto mi = a.decode(idx);
      auto tmi = mi;
      for (size_t i = 0; i < perm.size(); ++i) tmi[perm[i]] = mi[perm[order[i]]];
      if (sign > 0)
        out.comp[out.encode(tmi)] += a.comp[idx];
      else
        out.comp[out.encode(tmi)] -= a.comp[idx];
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  GaussRat inv = GaussRat::one() / GaussRat(count);
  for (auto& c : out.comp) c = c.scaled(inv);
  return out;
}

}  // namespace

WorldTensor sym_indices(const WorldTensor& a, const std::vector<size_t>& which) {
  return sym_impl(a, which, false);
}

WorldTensor antisym_indices(const WorldTensor& a, const std::vector<size_t>& which) {
  return sym_impl(a, which, true);
}

WorldTensor permute_indices(const WorldTensor& a, const std::vector<size_t>& perm) {
  if (perm.size() != a.up.size()) throw std::logic_error("world permute: wrong arity");
  std::vector<bool> h(a.up.size());
  for (size_t k = 0; k < perm.size(); ++k) h[k] = a.up[perm[k]];
  WorldTensor out(h);
  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto omi = out.decode(oidx);
    std::vector<int> smi(a.up.size());
    for (size_t k = 0; k < perm.size(); ++k) smi[perm[k]] = omi[k];
    out.comp[oidx] = a.comp[a.encode(smi)];
  }
  return out;
}

WorldTensor hodge_pair(const WorldTensor& a, size_t k) {
  if (k + 1 >= a.up.size() || a.up[k] || a.up[k + 1])
    throw std::logic_error("hodge_pair: needs an adjacent lower pair");
  WorldTensor out(a.up);
  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto omi = out.decode(oidx);
    int ia = omi[k], ib = omi[k + 1];
    PolyExpr acc;
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        int e = epsilon_world(ia, ib, c, d);
        if (e == 0) continue;
        auto smi = omi;
        smi[k] = c;
        smi[k + 1] = d;
        // T^{cd} from stored T_{cd}: raise with eta signs.
        int s = e * eta_sign(c) * eta_sign(d);
        const PolyExpr& v = a.comp[a.encode(smi)];
        if (s > 0)
          acc += v;
        else
          acc -= v;
      }
    out.comp[oidx] = acc.scaled(GaussRat(1, 2));
  }
  return out;
}

WorldTensor dual_project(const WorldTensor& a, size_t k, int sign) {
  WorldTensor star = hodge_pair(a, k);
  // self-dual: (1/2)(T - i *T); anti-self-dual: (1/2)(T + i *T)
  GaussRat coef = sign > 0 ? -GaussRat::i() : GaussRat::i();
  WorldTensor out = a;
  out += star.scaled(coef);
  return out.scaled(GaussRat(1, 2));
}

WorldTensor conj(const WorldTensor& a) {
  WorldTensor out = a;
  for (auto& c : out.comp) c = c.conj();
  return out;
}

WorldTensor translate(const GroupedSpinor& a) {
  size_t ng = a.groups.size();
  std::vector<bool> heights(ng);
  for (size_t g = 0; g < ng; ++g) {
    const GroupShape& gs = a.groups[g];
    if (gs.m != 1 || gs.n != 1 || gs.u_up != gs.p_up)
      throw std::logic_error("translate: every group must be (1,1) at equal heights");
    heights[g] = gs.u_up;
  }
  // Per group and per spinor slot (C,C'), the list of world indices with a
  // nonzero dictionary coefficient (always exactly two of them).
  //   upper pair: V^a = sum sigma_inv(a,C,C') V^{CC'}
  //   lower pair: V_a = eta_a * Sinv_a(raised pair), i.e. the coefficient on
  //               V_{CC'} is eta_a (-1)^{C+C'} sigma_inv(a, 1-C, 1-C').
  std::vector<std::array<std::vector<std::pair<int, GaussRat>>, 4>> nz(ng);
  for (size_t g = 0; g < ng; ++g) {
    bool upper = heights[g];
    for (int C = 0; C <= 1; ++C)
      for (int Cp = 0; Cp <= 1; ++Cp) {
        auto& list = nz[g][static_cast<size_t>(2 * C + Cp)];
        for (int w = 0; w < 4; ++w) {
          GaussRat v;
          if (upper) {
            v = sigma_inv_entry(w, C, Cp);
          } else {
            v = sigma_inv_entry(w, 1 - C, 1 - Cp);
            if ((((C + Cp) % 2) ? -1 : 1) * eta_sign(w) < 0) v = -v;
          }
          if (!v.is_zero()) list.emplace_back(w, v);
        }
      }
  }

  WorldTensor out(heights);
  for (size_t sidx = 0; sidx < a.comp.size(); ++sidx) {
    if (a.comp[sidx].is_zero()) continue;
    auto smi = a.decode(sidx);
    std::vector<const std::vector<std::pair<int, GaussRat>>*> lists(ng);
    for (size_t g = 0; g < ng; ++g)
      lists[g] = &nz[g][static_cast<size_t>(2 * smi[g].first + smi[g].second)];
    std::vector<int> widx(ng);
    std::function<void(size_t, const GaussRat&)> walk = [&](size_t g, const GaussRat& coef) {
      if (g == ng) {
        out.comp[out.encode(widx)] += a.comp[sidx].scaled(coef);
        return;
      }
      for (const auto& [w, v] : *lists[g]) {
        widx[g] = w;
        walk(g + 1, coef * v);
      }
    };
    walk(0, GaussRat::one());
  }
  return out;
}

namespace {

// Arrange eps (x) sym2 into (index pair)(index pair) form and translate.
WorldTensor pair_translate(const GroupedSpinor& four, bool upper) {
  (void)upper;
  // four: groups [s1(1,0), s2(1,0), p1(0,1), p2(0,1)] (heights consistent).
  GroupedSpinor arranged = permute_groups(four, {0, 2, 1, 3});
  GroupedSpinor g1 = symmetrize_groups(arranged, {0, 1});
  GroupedSpinor g2 = symmetrize_groups(g1, {1, 2});
  return translate(g2);
}

}  // namespace

WorldTensor two_form_from_primed(const GroupedSpinor& y) {
  if (y.groups.size() != 1 || y.groups[0].m != 0 || y.groups[0].n != 2)
    throw std::logic_error("two_form_from_primed: expected a single (0,2) group");
  bool upper = y.groups[0].p_up;
  GroupedSpinor ysplit = split_group(y, 0, 0, 1);
  GroupedSpinor four = sym_outer(upper ? eps_spinor(true) : eps_spinor(false), ysplit);
  return pair_translate(four, upper);
}

WorldTensor two_form_from_unprimed(const GroupedSpinor& phi) {
  if (phi.groups.size() != 1 || phi.groups[0].m != 2 || phi.groups[0].n != 0)
    throw std::logic_error("two_form_from_unprimed: expected a single (2,0) group");
  bool upper = phi.groups[0].u_up;
  GroupedSpinor psplit = split_group(phi, 0, 1, 0);
  GroupedSpinor four =
      sym_outer(psplit, upper ? eps_spinor_primed(true) : eps_spinor_primed(false));
  return pair_translate(four, upper);
}

}  // namespace spinv
