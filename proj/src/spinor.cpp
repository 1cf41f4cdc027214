#include "spinverify/spinor.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinv {

namespace {
std::atomic<long> g_intra_contractions{0};
}

long diag_intra_group_contractions() { return g_intra_contractions.load(); }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

GroupedSpinor::GroupedSpinor(std::vector<GroupShape> gs) : groups(std::move(gs)) {
  comp.assign(size(), PolyExpr::zero());
}

GroupedSpinor GroupedSpinor::scalar(PolyExpr p) {
  GroupedSpinor s;
  s.comp.push_back(std::move(p));
  return s;
}

size_t GroupedSpinor::size() const {
  size_t s = 1;
  for (size_t g = 0; g < groups.size(); ++g) s *= local_size(g);
  return s;
}

size_t GroupedSpinor::encode(const std::vector<std::pair<int, int>>& mi) const {
  if (mi.size() != groups.size()) throw std::logic_error("encode: wrong multi-index arity");
  size_t idx = 0;
  for (size_t g = 0; g < groups.size(); ++g) {
    auto [i, j] = mi[g];
    if (i < 0 || i > groups[g].m || j < 0 || j > groups[g].n)
      throw std::out_of_range("encode: count out of range");
    idx = idx * local_size(g) + static_cast<size_t>(i * (groups[g].n + 1) + j);
  }
  return idx;
}

std::vector<std::pair<int, int>> GroupedSpinor::decode(size_t idx) const {
  std::vector<std::pair<int, int>> mi(groups.size());
  for (size_t g = groups.size(); g-- > 0;) {
    size_t ls = local_size(g);
    size_t t = idx % ls;
    idx /= ls;
    mi[g] = {static_cast<int>(t) / (groups[g].n + 1), static_cast<int>(t) % (groups[g].n + 1)};
  }
  return mi;
}

bool GroupedSpinor::is_zero() const {
  for (const auto& c : comp)
    if (!c.is_zero()) return false;
  return true;
}

bool GroupedSpinor::same_signature(const GroupedSpinor& o) const {
  if (groups.size() != o.groups.size()) return false;
  for (size_t g = 0; g < groups.size(); ++g)
    if (!(groups[g] == o.groups[g])) return false;
  return true;
}

size_t GroupedSpinor::total_terms() const {
  size_t n = 0;
  for (const auto& c : comp) n += c.num_terms();
  return n;
}

GroupedSpinor GroupedSpinor::scaled(const GaussRat& c) const {
  GroupedSpinor out = *this;
  for (auto& e : out.comp) e = e.scaled(c);
  return out;
}

GroupedSpinor GroupedSpinor::scaled_poly(const PolyExpr& p) const {
  GroupedSpinor out = *this;
  for (auto& e : out.comp) e = e * p;
  return out;
}

GroupedSpinor& GroupedSpinor::operator+=(const GroupedSpinor& o) {
  if (!same_signature(o)) throw std::logic_error("add: signature mismatch");
  for (size_t k = 0; k < comp.size(); ++k) comp[k] += o.comp[k];
  return *this;
}

GroupedSpinor& GroupedSpinor::operator-=(const GroupedSpinor& o) {
  if (!same_signature(o)) throw std::logic_error("sub: signature mismatch");
  for (size_t k = 0; k < comp.size(); ++k) comp[k] -= o.comp[k];
  return *this;
}

std::string GroupedSpinor::str() const {
  std::string s = "[";
  for (size_t g = 0; g < groups.size(); ++g) {
    if (g) s += ", ";
    s += "(" + std::to_string(groups[g].m) + (groups[g].u_up ? "^" : "_") + "," +
         std::to_string(groups[g].n) + (groups[g].p_up ? "^" : "_") + ")";
  }
  s += "]";
  for (size_t k = 0; k < comp.size(); ++k) {
    if (comp[k].is_zero()) continue;
    auto mi = decode(k);
    s += "\n  @";
    for (auto [i, j] : mi) s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    s += " = " + comp[k].str();
  }
  return s;
}

GroupedSpinor sym_outer(const GroupedSpinor& a, const GroupedSpinor& b) {
  GroupedSpinor out;
  out.groups = a.groups;
  out.groups.insert(out.groups.end(), b.groups.begin(), b.groups.end());
  out.comp.reserve(a.comp.size() * b.comp.size());
  for (const auto& ca : a.comp)
    for (const auto& cb : b.comp) out.comp.push_back(ca * cb);
  return out;
}

GroupedSpinor symmetrize_groups(const GroupedSpinor& a, const std::vector<size_t>& which) {
  if (which.empty()) throw std::logic_error("symmetrize_groups: empty selection");
  std::vector<bool> sel(a.groups.size(), false);
  for (size_t g : which) {
    if (g >= a.groups.size()) throw std::out_of_range("symmetrize_groups: bad group");
    if (sel[g]) throw std::logic_error("symmetrize_groups: duplicate group");
    sel[g] = true;
  }

  GroupShape merged;
  bool u_seen = false, p_seen = false;
  for (size_t g : which) {
    const GroupShape& gs = a.groups[g];
    merged.m += gs.m;
    merged.n += gs.n;
    if (gs.m > 0) {
      if (u_seen && merged.u_up != gs.u_up)
        throw std::logic_error("symmetrize_groups: unprimed height mismatch");
      merged.u_up = gs.u_up;
      u_seen = true;
    }
    if (gs.n > 0) {
      if (p_seen && merged.p_up != gs.p_up)
        throw std::logic_error("symmetrize_groups: primed height mismatch");
      merged.p_up = gs.p_up;
      p_seen = true;
    }
  }

  size_t anchor = *std::min_element(which.begin(), which.end());
  GroupedSpinor out;
  for (size_t g = 0; g < a.groups.size(); ++g) {
    if (g == anchor)
      out.groups.push_back(merged);
    else if (!sel[g])
      out.groups.push_back(a.groups[g]);
  }
  out.comp.assign(out.size(), PolyExpr::zero());

  // Sorted list of merged groups for the decomposition walk.
  std::vector<size_t> msel;
  for (size_t g = 0; g < a.groups.size(); ++g)
    if (sel[g]) msel.push_back(g);

  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto omi = out.decode(oidx);
    // Position of the merged group inside out.groups:
    size_t merged_pos = 0;
    {
      size_t c = 0;
      for (size_t g = 0; g < a.groups.size(); ++g) {
        if (g == anchor) {
          merged_pos = c;
          break;
        }
        if (!sel[g]) ++c;
      }
    }
    int I = omi[merged_pos].first, J = omi[merged_pos].second;
    GaussRat denom(Rat(binom(merged.m, I) * binom(merged.n, J)));

    // Walk all splittings of (I, J) over the merged groups.
    std::vector<std::pair<int, int>> split(msel.size());
    PolyExpr acc;
    std::function<void(size_t, int, int, long)> walk = [&](size_t k, int ri, int rj, long w) {
      if (k == msel.size()) {
        if (ri != 0 || rj != 0) return;
        // Source multi-index: selected groups take the split counts,
        // unselected groups copy from the output (skipping the merged slot).
        std::vector<std::pair<int, int>> smi(a.groups.size());
        size_t sk = 0;
        for (size_t g = 0; g < a.groups.size(); ++g)
          if (sel[g]) smi[g] = split[sk++];
        size_t ocur = 0;
        for (size_t g = 0; g < a.groups.size(); ++g) {
          if (g == anchor) {
            ++ocur;  // merged slot
            continue;
          }
          if (!sel[g]) smi[g] = omi[ocur++];
        }
        acc += a.comp[a.encode(smi)].scaled(GaussRat(Rat(w)) / denom);
        return;
      }
      const GroupShape& gs = a.groups[msel[k]];
      for (int i = 0; i <= std::min(gs.m, ri); ++i) {
        for (int j = 0; j <= std::min(gs.n, rj); ++j) {
          split[k] = {i, j};
          walk(k + 1, ri - i, rj - j, w * binom(gs.m, i) * binom(gs.n, j));
        }
      }
    };
    walk(0, I, J, 1);
    out.comp[oidx] = std::move(acc);
  }
  return out;
}

namespace {

// One contraction step between distinct groups g1, g2 in the given sector.
GroupedSpinor contract_once(const GroupedSpinor& a, size_t g1, size_t g2, bool primed) {
  const GroupShape& s1 = a.groups[g1];
  const GroupShape& s2 = a.groups[g2];
  int r1 = primed ? s1.n : s1.m;
  int r2 = primed ? s2.n : s2.m;
  if (r1 < 1 || r2 < 1) throw std::logic_error("contract: empty sector");
  bool h1 = primed ? s1.p_up : s1.u_up;
  bool h2 = primed ? s2.p_up : s2.u_up;
  bool natural = (h1 != h2);

  GroupedSpinor out;
  out.groups = a.groups;
  if (primed) {
    out.groups[g1].n -= 1;
    out.groups[g2].n -= 1;
  } else {
    out.groups[g1].m -= 1;
    out.groups[g2].m -= 1;
  }
  out.comp.assign(out.size(), PolyExpr::zero());

  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto mi = out.decode(oidx);
    auto bump = [&](size_t g, int d) {
      auto m2 = mi;
      if (primed)
        m2[g].second += d;
      else
        m2[g].first += d;
      return m2;
    };
    PolyExpr val;
    if (natural) {
      // T^{..X} S_{..X}: X=0 and X=1 terms, plus signs absent.
      val = a.comp[a.encode(mi)];
      auto m2 = bump(g1, 1);
      if (primed)
        m2[g2].second += 1;
      else
        m2[g2].first += 1;
      val += a.comp[a.encode(m2)];
    } else {
      // Same height: eps contraction, g1 slot first:
      // R = T[i1][i2+1] - T[i1+1][i2].
      val = a.comp[a.encode(bump(g2, 1))] - a.comp[a.encode(bump(g1, 1))];
    }
    out.comp[oidx] = std::move(val);
  }
  return out;
}

}  // namespace

GroupedSpinor drop_empty_groups(const GroupedSpinor& a) {
  GroupedSpinor out;
  for (const auto& g : a.groups)
    if (g.m != 0 || g.n != 0) out.groups.push_back(g);
  if (out.groups.size() == a.groups.size()) return a;
  out.comp = a.comp;  // sizes match: empty groups contribute factor-1 grids
  return out;
}

GroupedSpinor eps_contract(const GroupedSpinor& a, size_t g1, size_t g2, int r_u, int r_p) {
  if (g1 >= a.groups.size() || g2 >= a.groups.size())
    throw std::out_of_range("eps_contract: bad group");
  if (g1 == g2) {
    // Contraction inside a symmetric group vanishes identically.
    g_intra_contractions.fetch_add(1);
    GroupedSpinor out;
    out.groups = a.groups;
    out.groups[g1].m -= 2 * r_u;
    out.groups[g1].n -= 2 * r_p;
    if (out.groups[g1].m < 0 || out.groups[g1].n < 0)
      throw std::logic_error("eps_contract: rank underflow");
    GroupedSpinor z(out.groups);
    return drop_empty_groups(z);
  }
  GroupedSpinor cur = a;
  for (int k = 0; k < r_u; ++k) cur = contract_once(cur, g1, g2, false);
  for (int k = 0; k < r_p; ++k) cur = contract_once(cur, g1, g2, true);
  return drop_empty_groups(cur);
}

namespace {

GroupedSpinor reheight(const GroupedSpinor& a, size_t g, bool primed, bool to_upper) {
  const GroupShape& gs = a.groups[g];
  int r = primed ? gs.n : gs.m;
  bool cur = primed ? gs.p_up : gs.u_up;
  if (r == 0) {
    GroupedSpinor out = a;
    (primed ? out.groups[g].p_up : out.groups[g].u_up) = to_upper;
    return out;
  }
  if (cur == to_upper) throw std::logic_error("raise/lower: already at requested height");

  GroupedSpinor out;
  out.groups = a.groups;
  (primed ? out.groups[g].p_up : out.groups[g].u_up) = to_upper;
  out.comp.assign(out.size(), PolyExpr::zero());
  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto mi = out.decode(oidx);
    int c = primed ? mi[g].second : mi[g].first;
    auto src = mi;
    if (primed)
      src[g].second = r - c;
    else
      src[g].first = r - c;
    // raise: sign (-1)^c ; lower: sign (-1)^{r-c}
    int sgn = to_upper ? (c % 2 ? -1 : 1) : ((r - c) % 2 ? -1 : 1);
    out.comp[oidx] = a.comp[a.encode(src)].scaled(GaussRat(sgn));
  }
  return out;
}

}  // namespace

GroupedSpinor raise_group(const GroupedSpinor& a, size_t g, bool primed_sector) {
  return reheight(a, g, primed_sector, true);
}

GroupedSpinor lower_group(const GroupedSpinor& a, size_t g, bool primed_sector) {
  return reheight(a, g, primed_sector, false);
}

GroupedSpinor permute_groups(const GroupedSpinor& a, const std::vector<size_t>& perm) {
  if (perm.size() != a.groups.size()) throw std::logic_error("permute: wrong arity");
  GroupedSpinor out;
  out.groups.resize(a.groups.size());
  for (size_t k = 0; k < perm.size(); ++k) out.groups[k] = a.groups[perm[k]];
  out.comp.assign(out.size(), PolyExpr::zero());
  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto omi = out.decode(oidx);
    std::vector<std::pair<int, int>> smi(a.groups.size());
    for (size_t k = 0; k < perm.size(); ++k) smi[perm[k]] = omi[k];
    out.comp[oidx] = a.comp[a.encode(smi)];
  }
  return out;
}

GroupedSpinor conj(const GroupedSpinor& a) {
  GroupedSpinor out;
  out.groups.reserve(a.groups.size());
  for (const auto& g : a.groups) {
    GroupShape t;
    t.m = g.n;
    t.n = g.m;
    t.u_up = g.p_up;
    t.p_up = g.u_up;
    out.groups.push_back(t);
  }
  out.comp.assign(out.size(), PolyExpr::zero());
  for (size_t sidx = 0; sidx < a.comp.size(); ++sidx) {
    if (a.comp[sidx].is_zero()) continue;
    auto smi = a.decode(sidx);
    std::vector<std::pair<int, int>> tmi(a.groups.size());
    long e = 0;
    for (size_t g = 0; g < a.groups.size(); ++g) {
      const GroupShape& gs = a.groups[g];
      int i = smi[g].first, j = smi[g].second;
      tmi[g] = {j, i};
      e += gs.u_up ? i : (gs.m - i);
      e -= gs.p_up ? j : (gs.n - j);
    }
    out.comp[out.encode(tmi)] = a.comp[sidx].conj().scaled(GaussRat(two_pow(e)));
  }
  return out;
}

GroupedSpinor split_group(const GroupedSpinor& a, size_t g, int m1, int n1) {
  if (g >= a.groups.size()) throw std::out_of_range("split_group: bad group");
  const GroupShape& gs = a.groups[g];
  if (m1 < 0 || m1 > gs.m || n1 < 0 || n1 > gs.n) throw std::logic_error("split_group: bad split");
  GroupShape first{m1, n1, gs.u_up, gs.p_up};
  GroupShape second{gs.m - m1, gs.n - n1, gs.u_up, gs.p_up};
  GroupedSpinor out;
  out.groups = a.groups;
  out.groups[g] = first;
  out.groups.insert(out.groups.begin() + static_cast<long>(g) + 1, second);
  out.comp.assign(out.size(), PolyExpr::zero());
  for (size_t oidx = 0; oidx < out.comp.size(); ++oidx) {
    auto omi = out.decode(oidx);
    std::vector<std::pair<int, int>> smi(a.groups.size());
    for (size_t sg = 0; sg < a.groups.size(); ++sg) {
      if (sg < g)
        smi[sg] = omi[sg];
      else if (sg == g)
        smi[sg] = {omi[g].first + omi[g + 1].first, omi[g].second + omi[g + 1].second};
      else
        smi[sg] = omi[sg + 1];
    }
    out.comp[oidx] = a.comp[a.encode(smi)];
  }
  return out;
}

GroupedSpinor eps_spinor(bool upper) {
  GroupedSpinor e(std::vector<GroupShape>{{1, 0, upper, false}, {1, 0, upper, false}});
  e.at({{0, 0}, {1, 0}}) = PolyExpr::one();
  e.at({{1, 0}, {0, 0}}) = PolyExpr::constant(GaussRat(-1));
  return e;
}

GroupedSpinor eps_spinor_primed(bool upper) {
  GroupedSpinor e(std::vector<GroupShape>{{0, 1, false, upper}, {0, 1, false, upper}});
  e.at({{0, 0}, {0, 1}}) = PolyExpr::one();
  e.at({{0, 1}, {0, 0}}) = PolyExpr::constant(GaussRat(-1));
  return e;
}

}  // namespace spinv
