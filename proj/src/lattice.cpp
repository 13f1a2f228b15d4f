#include "qwb/lattice.hpp"

#include <algorithm>
#include <bit>

namespace qwb {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_poset: return "NotAPoset";
    case errc::no_join: return "NoJoin";
    case errc::no_meet: return "NoMeet";
    case errc::no_bounds: return "NoBounds";
    case errc::not_associative: return "NotAssociative";
    case errc::not_join_preserving: return "NotJoinPreserving";
    case errc::bottom_not_annihilating: return "BottomNotAnnihilating";
    case errc::gamma_is_top: return "GammaIsTop";
    case errc::conditions_fail: return "ConditionsFail";
    case errc::not_a_group: return "NotAGroup";
    case errc::not_a_nucleus: return "NotANucleus";
    case errc::too_large: return "TooLarge";
    case errc::parse_error: return "ParseError";
    case errc::bad_argument: return "BadArgument";
  }
  return "Unknown";
}

int Lattice::join_all(Mask s) const {
  int acc = bottom;
  while (s) {
    int i = std::countr_zero(s);
    s &= s - 1;
    acc = join(acc, i);
  }
  return acc;
}

int Lattice::meet_all(Mask s) const {
  int acc = top;
  while (s) {
    int i = std::countr_zero(s);
    s &= s - 1;
    acc = meet(acc, i);
  }
  return acc;
}

bool Lattice::meet_covers(int a, int b) const {
  if (a == b || !leq(a, b)) return false;
  // strictly between: c with a < c < b
  Mask between = up[a] & down[b] & ~bit(a) & ~bit(b);
  return between == 0;
}

std::vector<int> Lattice::lower_covers(int a) const {
  std::vector<int> out;
  for (int c = 0; c < n; ++c)
    if (meet_covers(c, a)) out.push_back(c);
  return out;
}

std::vector<int> Lattice::upper_covers(int a) const {
  std::vector<int> out;
  for (int c = 0; c < n; ++c)
    if (meet_covers(a, c)) out.push_back(c);
  return out;
}

bool Lattice::join_irreducible(int a) const {
  return a != bottom && lower_covers(a).size() == 1;
}

int Lattice::index_of(const std::string& name) const {
  for (int i = 0; i < n; ++i)
    if (names[i] == name) return i;
  return -1;
}

Lattice validate_lattice(const std::vector<std::vector<bool>>& order,
                         std::vector<std::string> names) {
  const int n = static_cast<int>(order.size());
  if (n < 1) throw Error(errc::bad_argument, "empty carrier");
  if (n > kMaxElements)
    throw Error(errc::too_large, "carrier exceeds 64 elements");
  for (auto& row : order)
    if (static_cast<int>(row.size()) != n)
      throw Error(errc::bad_argument, "order matrix is not square");
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  if (static_cast<int>(names.size()) != n)
    throw Error(errc::bad_argument, "name count does not match carrier size");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        throw Error(errc::bad_argument, "duplicate element name " + names[i],
                    {i, j});

  Lattice L;
  L.n = n;
  L.names = std::move(names);
  L.up.assign(n, 0);
  L.down.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (order[a][b]) {
        L.up[a] |= bit(b);
        L.down[b] |= bit(a);
      }

  for (int a = 0; a < n; ++a)
    if (!order[a][a])
      throw Error(errc::not_a_poset, "order is not reflexive at " + L.names[a],
                  {a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (order[a][b] && order[b][a])
        throw Error(errc::not_a_poset,
                    "antisymmetry fails on " + L.names[a] + "," + L.names[b],
                    {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!order[a][b]) continue;
      // a <= b: everything above b must be above a
      if ((L.up[b] & ~L.up[a]) != 0) {
        int c = std::countr_zero(L.up[b] & ~L.up[a]);
        throw Error(errc::not_a_poset,
                    "transitivity fails on " + L.names[a] + "," + L.names[b] +
                        "," + L.names[c],
                    {a, b, c});
      }
    }

  L.join_tab.assign(n * n, -1);
  L.meet_tab.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask ub = L.up[a] & L.up[b];
      int lub = -1;
      for (Mask s = ub; s; s &= s - 1) {
        int c = std::countr_zero(s);
        if ((ub & ~L.up[c]) == 0) { lub = c; break; }
      }
      if (lub < 0)
        throw Error(errc::no_join,
                    "no join for " + L.names[a] + "," + L.names[b], {a, b});
      Mask lb = L.down[a] & L.down[b];
      int glb = -1;
      for (Mask s = lb; s; s &= s - 1) {
        int c = std::countr_zero(s);
        if ((lb & ~L.down[c]) == 0) { glb = c; break; }
      }
      if (glb < 0)
        throw Error(errc::no_meet,
                    "no meet for " + L.names[a] + "," + L.names[b], {a, b});
      L.join_tab[a * n + b] = lub;
      L.meet_tab[a * n + b] = glb;
    }

  L.bottom = L.top = -1;
  for (int a = 0; a < n; ++a) {
    if (L.up[a] == L.all_mask()) L.bottom = a;
    if (L.down[a] == L.all_mask()) L.top = a;
  }
  if (L.bottom < 0 || L.top < 0)
    throw Error(errc::no_bounds, "carrier has no bottom or no top");
  return L;
}

std::pair<int, int> bounds(const Lattice& L, Mask subset) {
  return {L.join_all(subset), L.meet_all(subset)};
}

bool totally_below(const Lattice& L, int below, int above) {
  Mask avoid = 0;  // elements not above `below`
  for (int c = 0; c < L.n; ++c)
    if (!L.leq(below, c)) avoid |= bit(c);
  return !L.leq(above, L.join_all(avoid));
}

DistributivityReport distributivity_report(const Lattice& L) {
  DistributivityReport r;
  r.approximable.assign(L.n, false);
  r.completely_distributive = true;
  for (int a = 0; a < L.n; ++a) {
    Mask tb = 0;
    for (int b = 0; b < L.n; ++b)
      if (totally_below(L, b, a)) tb |= bit(b);
    r.approximable[a] = L.leq(a, L.join_all(tb));
    if (!r.approximable[a]) r.completely_distributive = false;
  }
  for (int a = 0; a < L.n && !r.nondist_witness; ++a)
    for (int b = 0; b < L.n && !r.nondist_witness; ++b)
      for (int g = 0; g < L.n; ++g) {
        int lhs = L.meet(g, L.join(a, b));
        int rhs = L.join(L.meet(g, a), L.meet(g, b));
        if (!L.leq(lhs, rhs)) {
          r.nondist_witness = {{a, b, g}};
          break;
        }
      }
  for (int a = 0; a < L.n && !r.strict_witness; ++a)
    for (int b = 0; b < L.n && !r.strict_witness; ++b)
      for (int x = 0; x < L.n; ++x) {
        int ab = L.join(a, b);
        if (L.leq(x, ab)) continue;
        if (!L.leq(L.meet(x, ab), L.join(L.meet(x, a), L.meet(x, b)))) {
          r.strict_witness = {{a, b, x}};
          break;
        }
      }
  return r;
}

std::optional<IsolationInfo> isolated_info(const Lattice& L, int x) {
  if (x == L.bottom || x == L.top) return std::nullopt;
  Mask strict_down = L.down[x] & ~bit(x);
  Mask strict_up = L.up[x] & ~bit(x);
  int lo = -1, hi = -1;
  for (int c = 0; c < L.n; ++c) {
    if (L.down[c] == strict_down) lo = c;
    if (L.up[c] == strict_up) hi = c;
  }
  if (lo < 0 || hi < 0) return std::nullopt;
  return IsolationInfo{x, lo, hi};
}

LatticeExtension extend_lattice(const Lattice& L, int gamma) {
  if (gamma < 0 || gamma >= L.n)
    throw Error(errc::bad_argument, "gamma out of range", {gamma});
  const int n = L.n, e = n, t = n + 1;
  std::vector<std::vector<bool>> order(n + 2, std::vector<bool>(n + 2, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) order[a][b] = L.leq(a, b);
  for (int a = 0; a < n; ++a) order[a][e] = L.leq(a, gamma);
  order[e][e] = true;
  for (int a = 0; a < n + 2; ++a) order[a][t] = true;

  std::vector<std::string> names = L.names;
  auto fresh = [&](std::string base) {
    while (std::find(names.begin(), names.end(), base) != names.end())
      base += "'";
    return base;
  };
  names.push_back(fresh("e"));
  names.push_back(fresh("tbar"));

  LatticeExtension ext{validate_lattice(order, std::move(names)), e, t};
  return ext;
}

std::vector<Mask> embed_completely_distributive(const Lattice& L) {
  if (L.n > 12)
    throw Error(errc::too_large,
                "powerset embedding is guarded at 12 elements");
  // Image of a = union of all subsets whose meet dominates a; this collapses
  // to the up-set of a, ordered by reverse inclusion downstream.
  std::vector<Mask> img(L.n);
  for (int a = 0; a < L.n; ++a) img[a] = L.up[a];
  return img;
}

}  // namespace qwb
