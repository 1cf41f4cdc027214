#include "spinverify/jet.hpp"

#include <stdexcept>

namespace spinv {

PolyExpr d_spin(const JetContext& ctx, int C, int Cp, const PolyExpr& f) {
  // Cache of single-use image polynomials built on demand.
  PolyExpr one = PolyExpr::one();
  std::map<VarId, PolyExpr> local;
  auto images = [&](VarId v) -> const PolyExpr* {
    switch (v.kind()) {
      case VarKind::Lambda:
      case VarKind::Constant:
        return nullptr;
      case VarKind::Coord:
        return (v.c() == C && v.d() == Cp) ? &one : nullptr;
      case VarKind::JetU: {
        if (v.b() + 1 > ctx.max_order) throw std::logic_error("jet order budget exceeded");
        VarId t = VarId::jet_u(v.a(), v.b() + 1, v.c() + C, v.d() + Cp);
        auto [it, fresh] = local.try_emplace(t);
        if (fresh) it->second = PolyExpr::var(t);
        return &it->second;
      }
      case VarKind::JetV: {
        if (v.b() + 1 > ctx.max_order) throw std::logic_error("jet order budget exceeded");
        VarId t = VarId::jet_v(v.a(), v.b() + 1, v.c() + C, v.d() + Cp);
        auto [it, fresh] = local.try_emplace(t);
        if (fresh) it->second = PolyExpr::var(t);
        return &it->second;
      }
    }
    return nullptr;
  };
  return f.derive(images);
}

PolyExpr world_partial(const JetContext& ctx, int a, const PolyExpr& f) {
  PolyExpr out;
  for (int C = 0; C <= 1; ++C)
    for (int Cp = 0; Cp <= 1; ++Cp) {
      GaussRat c = sigma_entry(a, C, Cp);
      if (!c.is_zero()) out += c * d_spin(ctx, C, Cp, f);
    }
  return out;
}

PolyExpr box(const JetContext& ctx, const PolyExpr& f) {
  PolyExpr out;
  for (int a = 0; a < 4; ++a) {
    PolyExpr d2 = world_partial(ctx, a, world_partial(ctx, a, f));
    if (eta_sign(a) > 0)
      out += d2;
    else
      out -= d2;
  }
  return out;
}

GroupedSpinor total_derivative(const JetContext& ctx, const GroupedSpinor& a) {
  GroupedSpinor out;
  out.groups = a.groups;
  out.groups.push_back(GroupShape{1, 1, false, false});
  out.comp.assign(out.size(), PolyExpr::zero());
  for (size_t sidx = 0; sidx < a.comp.size(); ++sidx) {
    if (a.comp[sidx].is_zero()) continue;
    for (int C = 0; C <= 1; ++C)
      for (int Cp = 0; Cp <= 1; ++Cp) {
        size_t oidx = sidx * 4 + static_cast<size_t>(2 * C + Cp);
        out.comp[oidx] = d_spin(ctx, C, Cp, a.comp[sidx]);
      }
  }
  return out;
}

WorldTensor world_derivative(const JetContext& ctx, const WorldTensor& a) {
  std::vector<bool> h = a.up;
  h.push_back(false);
  WorldTensor out(h);
  for (size_t sidx = 0; sidx < a.comp.size(); ++sidx) {
    if (a.comp[sidx].is_zero()) continue;
    for (int w = 0; w < 4; ++w)
      out.comp[sidx * 4 + static_cast<size_t>(w)] = world_partial(ctx, w, a.comp[sidx]);
  }
  return out;
}

GroupedSpinor sym_derivative_power(const JetContext& ctx, const GroupedSpinor& a, int p) {
  if (p < 0) throw std::logic_error("sym_derivative_power: negative order");
  GroupedSpinor cur = a;
  for (int k = 0; k < p; ++k) cur = total_derivative(ctx, cur);
  if (p >= 2) {
    std::vector<size_t> which;
    for (int k = 0; k < p; ++k) which.push_back(a.groups.size() + static_cast<size_t>(k));
    cur = symmetrize_groups(cur, which);
  }
  return cur;
}

GroupedSpinor jet_field(const JetContext& ctx, bool conj_sector, int p) {
  if (p > ctx.max_order) throw std::logic_error("jet_field: order beyond budget");
  int m = conj_sector ? p : ctx.twos + p;
  int n = conj_sector ? ctx.twos + p : p;
  GroupedSpinor out(std::vector<GroupShape>{{m, n, false, false}});
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      out.at({{i, j}}) = PolyExpr::var(conj_sector ? VarId::jet_v(ctx.twos, p, i, j)
                                                   : VarId::jet_u(ctx.twos, p, i, j));
  return out;
}

}  // namespace spinv
