#include "qwb/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <thread>

namespace qwb {

Constraint Constraint::parse(const std::string& text, const Lattice& L) {
  auto arg_of = [&](const std::string& head) -> std::optional<int> {
    if (text.size() <= head.size() + 2 || text.compare(0, head.size(), head) ||
        text[head.size()] != '(' || text.back() != ')')
      return std::nullopt;
    std::string name = text.substr(head.size() + 1,
                                   text.size() - head.size() - 2);
    int idx = L.index_of(name);
    if (idx < 0)
      throw Error(errc::bad_argument, "unknown element " + name + " in " + text);
    return idx;
  };
  if (text == "none") return none();
  if (text == "unital") return unital();
  if (text == "nonUnital") return non_unital();
  if (text == "semiUnital") return semi_unital();
  if (auto e = arg_of("unitalAt")) return unital_at(*e);
  if (auto g = arg_of("propA")) return prop_a(*g);
  throw Error(errc::bad_argument, "unknown constraint " + text);
}

std::string Constraint::describe(const Lattice& L) const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::unital: return "unital";
    case Kind::non_unital: return "nonUnital";
    case Kind::semi_unital: return "semiUnital";
    case Kind::unital_at: return "unitalAt(" + L.names[element] + ")";
    case Kind::prop_a: return "propA(" + L.names[element] + ")";
  }
  return "none";
}

namespace {

// ---------------------------------------------------------------------------
// quantale search
//
// A join-preserving table is determined by its values on pairs of
// join-irreducible generators; the full table is the join of generator
// products over the down-sets of the arguments.  Conversely a generator
// assignment yields a quantale iff the induced table satisfies the binary
// join-preservation equations and associativity on generator triples, so the
// search walks generator cells in row-major order and checks every equation
// at the first cell where all of its ingredients are known.
// ---------------------------------------------------------------------------

struct JPCheck {
  // join(t[p1], t[p2]) == join(t[q1], t[q2]); p2/q2 may be -1 (absent)
  int p1, p2, q1, q2;
};

struct SearchPlan {
  const Lattice* L;
  int n = 0;
  std::vector<int> jis;        // join-irreducible elements, ascending
  int m = 0;                   // jis.size()
  std::vector<std::vector<int>> jpos;  // per element: generator positions below
  std::vector<int> maxpos;     // last generator position below, -1 for bottom
  std::vector<int> lastcell;   // per pair x*n+y: cell where it determines
  std::vector<std::vector<int>> det_pairs;      // per cell+1: pairs x*n+y
  std::vector<std::vector<JPCheck>> jp_checks;  // per cell+1
  std::vector<std::vector<int>> ge_cells;  // per cell: earlier cells required <=
  std::vector<std::vector<int>> le_cells;  // per cell: earlier cells required >=
  std::vector<std::array<int, 3>> assoc;   // generator triples (i,j,k)
  std::vector<int> assoc_ready;            // static step per triple
  std::vector<std::vector<int>> cand;      // per cell: candidate values
  Constraint constraint;

  int cell_of(int a, int b) const { return a * m + b; }
};

SearchPlan make_plan(const Lattice& L, const Constraint& c) {
  SearchPlan P;
  P.L = &L;
  P.n = L.n;
  P.constraint = c;
  for (int x = 0; x < L.n; ++x)
    if (L.join_irreducible(x)) P.jis.push_back(x);
  P.m = static_cast<int>(P.jis.size());
  const int n = L.n, m = P.m;

  P.jpos.assign(n, {});
  P.maxpos.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < m; ++a)
      if (L.leq(P.jis[a], x)) {
        P.jpos[x].push_back(a);
        P.maxpos[x] = a;
      }
  P.lastcell.assign(n * n, -1);
  P.det_pairs.assign(m * m + 1, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lc = (P.maxpos[x] < 0 || P.maxpos[y] < 0)
                   ? -1
                   : P.cell_of(P.maxpos[x], P.maxpos[y]);
      P.lastcell[x * n + y] = lc;
      P.det_pairs[lc + 1].push_back(x * n + y);
    }

  // join-preservation: for each element s and each incomparable pair joining
  // to s, anchor t(s,z) to the first determined pair expression and chain the
  // remaining expressions to each other in determination order
  P.jp_checks.assign(m * m + 1, {});
  auto pair_step = [&](int x, int y, int z, bool left) {
    int a = left ? P.lastcell[x * n + z] : P.lastcell[z * n + x];
    int b = left ? P.lastcell[y * n + z] : P.lastcell[z * n + y];
    return std::max(a, b);
  };
  for (int s = 0; s < n; ++s) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (!L.leq(x, y) && !L.leq(y, x) && L.join(x, y) == s)
          pairs.emplace_back(x, y);
    if (pairs.empty()) continue;
    for (int z = 0; z < n; ++z) {
      if (z == L.bottom) continue;
      for (int side = 0; side < 2; ++side) {
        bool left = side == 0;
        auto ordered = pairs;
        std::stable_sort(ordered.begin(), ordered.end(),
                         [&](const auto& A, const auto& B) {
                           return pair_step(A.first, A.second, z, left) <
                                  pair_step(B.first, B.second, z, left);
                         });
        auto idx = [&](int u, int v) { return left ? u * n + v : v * n + u; };
        for (size_t i = 0; i + 1 < ordered.size(); ++i) {
          auto [x1, y1] = ordered[i];
          auto [x2, y2] = ordered[i + 1];
          int step = pair_step(x2, y2, z, left);
          P.jp_checks[step + 1].push_back(
              {idx(x1, z), idx(y1, z), idx(x2, z), idx(y2, z)});
        }
        auto [x0, y0] = ordered.front();
        int step = left ? P.lastcell[s * n + z] : P.lastcell[z * n + s];
        P.jp_checks[step + 1].push_back(
            {idx(s, z), -1, idx(x0, z), idx(y0, z)});
      }
    }
  }

  // generator-cell monotonicity against earlier cells
  P.ge_cells.assign(m * m, {});
  P.le_cells.assign(m * m, {});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int k = P.cell_of(a, b);
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < m; ++b2) {
          int k2 = P.cell_of(a2, b2);
          if (k2 >= k) continue;
          if (L.leq(P.jis[a2], P.jis[a]) && L.leq(P.jis[b2], P.jis[b]))
            P.ge_cells[k].push_back(k2);
          if (L.leq(P.jis[a], P.jis[a2]) && L.leq(P.jis[b], P.jis[b2]))
            P.le_cells[k].push_back(k2);
        }
    }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        P.assoc.push_back({i, j, k});
        // the two inner products settle once their full-table pairs do
        P.assoc_ready.push_back(
            std::max(P.lastcell[P.jis[i] * n + P.jis[j]],
                     P.lastcell[P.jis[j] * n + P.jis[k]]));
      }

  // candidate values per cell, restricted by the constraint where sound:
  // anything under a required unit (or under gamma for the absorption
  // filter) multiplies below the other argument
  P.cand.assign(m * m, {});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int k = P.cell_of(a, b);
      int ea = P.jis[a], eb = P.jis[b];
      for (int v = 0; v < n; ++v) {
        bool ok = true;
        if (c.kind == Constraint::Kind::unital_at) {
          if (ea == c.element && v != eb) ok = false;
          if (eb == c.element && v != ea) ok = false;
          if (L.leq(ea, c.element) && !L.leq(v, eb)) ok = false;
          if (L.leq(eb, c.element) && !L.leq(v, ea)) ok = false;
        } else if (c.kind == Constraint::Kind::prop_a) {
          if (L.leq(ea, c.element) && !L.leq(v, eb)) ok = false;
          if (L.leq(eb, c.element) && !L.leq(v, ea)) ok = false;
        }
        if (ok) P.cand[k].push_back(v);
      }
    }
  return P;
}

struct SearchState {
  const SearchPlan& P;
  std::vector<int> mval;  // generator cells, -1 unassigned
  std::vector<int> tval;  // full table, valid where determined
  std::vector<std::vector<int>>& out;
  int first_cell_mod = 1, first_cell_rem = 0;

  SearchState(const SearchPlan& p, std::vector<std::vector<int>>& sink)
      : P(p), mval(p.m * p.m, -1), tval(p.n * p.n, -1), out(sink) {}

  bool determine(int step) {
    const Lattice& L = *P.L;
    const int n = P.n;
    for (int pr : P.det_pairs[step + 1]) {
      int x = pr / n, y = pr % n;
      int acc = L.bottom;
      for (int a : P.jpos[x])
        for (int b : P.jpos[y]) acc = L.join(acc, mval[P.cell_of(a, b)]);
      tval[pr] = acc;
      switch (P.constraint.kind) {
        case Constraint::Kind::unital_at:
          if (x == P.constraint.element && acc != y) return false;
          if (y == P.constraint.element && acc != x) return false;
          break;
        case Constraint::Kind::prop_a:
          if (x == P.constraint.element && !L.leq(acc, y)) return false;
          if (y == P.constraint.element && !L.leq(acc, x)) return false;
          break;
        case Constraint::Kind::semi_unital:
          if (x == L.top && !L.leq(y, acc)) return false;
          if (y == L.top && !L.leq(x, acc)) return false;
          break;
        default:
          break;
      }
    }
    for (const JPCheck& ck : P.jp_checks[step + 1]) {
      int lhs = ck.p2 < 0 ? tval[ck.p1] : L.join(tval[ck.p1], tval[ck.p2]);
      int rhs = L.join(tval[ck.q1], tval[ck.q2]);
      if (lhs != rhs) return false;
    }
    return true;
  }

  bool assoc_ok(int step) {
    const Lattice& L = *P.L;
    const int n = P.n;
    for (size_t t = 0; t < P.assoc.size(); ++t) {
      if (P.assoc_ready[t] > step) continue;
      auto [i, j, k] = P.assoc[t];
      int xi = P.jis[i], xj = P.jis[j], xk = P.jis[k];
      int u = tval[xi * n + xj];  // determined: its last cell is (i, j)
      int v = tval[xj * n + xk];
      if (P.lastcell[u * n + xk] > step || P.lastcell[xi * n + v] > step)
        continue;
      if (tval[u * n + xk] != tval[xi * n + v]) return false;
    }
    return true;
  }

  void leaf() {
    std::vector<int> table(tval);
    out.push_back(std::move(table));
  }

  void dfs(int step) {
    if (step == P.m * P.m) {
      leaf();
      return;
    }
    for (size_t ci = 0; ci < P.cand[step].size(); ++ci) {
      if (step == 0 &&
          static_cast<int>(ci) % first_cell_mod != first_cell_rem)
        continue;
      int v = P.cand[step][ci];
      bool ok = true;
      for (int k2 : P.ge_cells[step])
        if (!P.L->leq(mval[k2], v)) { ok = false; break; }
      if (ok)
        for (int k2 : P.le_cells[step])
          if (!P.L->leq(v, mval[k2])) { ok = false; break; }
      if (!ok) continue;
      mval[step] = v;
      if (determine(step) && assoc_ok(step)) dfs(step + 1);
      mval[step] = -1;
    }
  }

  void run() {
    // bottom-row and bottom-column products determine before any assignment
    if (!determine(-1)) return;
    if (P.m == 0) {
      leaf();
      return;
    }
    dfs(0);
  }
};

bool leaf_constraint_ok(const Constraint& c, const QuantaleProfile& prof) {
  switch (c.kind) {
    case Constraint::Kind::none:
    case Constraint::Kind::unital_at:
    case Constraint::Kind::prop_a:
      return true;  // enforced during the search
    case Constraint::Kind::unital:
      return prof.unit.has_value();
    case Constraint::Kind::non_unital:
      return !prof.unit.has_value();
    case Constraint::Kind::semi_unital:
      return prof.semi_unital;
  }
  return true;
}

}  // namespace

std::vector<CatalogueEntry> enumerate_quantales(const Lattice& L,
                                                const Constraint& c,
                                                int threads) {
  if ((c.kind == Constraint::Kind::unital_at ||
       c.kind == Constraint::Kind::prop_a) &&
      (c.element < 0 || c.element >= L.n))
    throw Error(errc::bad_argument, "constraint element out of range");
  if (threads < 1) threads = 1;

  SearchPlan plan = make_plan(L, c);
  std::vector<std::vector<std::vector<int>>> sinks(threads);
  if (threads == 1 || plan.m == 0) {
    SearchState st(plan, sinks[0]);
    st.run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        SearchState st(plan, sinks[w]);
        st.first_cell_mod = threads;
        st.first_cell_rem = w;
        st.run();
      });
    for (auto& t : pool) t.join();
  }

  CanonicalContext ctx = make_canonical_context(L);
  std::vector<Perm> auts = automorphisms(L);
  const int n = L.n;
  // does this table satisfy the element-anchored constraint at c.element?
  auto anchored_ok = [&](const std::vector<int>& t) {
    if (c.kind == Constraint::Kind::unital_at) {
      for (int x = 0; x < n; ++x)
        if (t[c.element * n + x] != x || t[x * n + c.element] != x)
          return false;
    } else if (c.kind == Constraint::Kind::prop_a) {
      for (int x = 0; x < n; ++x)
        if (!L.leq(L.join(t[c.element * n + x], t[x * n + c.element]), x))
          return false;
    }
    return true;
  };
  std::map<std::vector<std::uint8_t>, std::vector<int>> orbit_min;
  for (auto& sink : sinks)
    for (auto& table : sink) {
      std::vector<std::uint8_t> key = canonical_mul_bytes(ctx, table);
      auto it = orbit_min.find(key);
      if (it != orbit_min.end()) continue;
      // orbit representative: the minimal transported table on L itself that
      // still meets the constraint at the stated element
      std::vector<int> rep = table, cur(n * n);
      for (const Perm& a : auts) {
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            cur[a[x] * n + a[y]] = a[table[x * n + y]];
        if (cur < rep && anchored_ok(cur)) rep = cur;
      }
      orbit_min.emplace(std::move(key), std::move(rep));
    }

  std::vector<CatalogueEntry> entries;
  for (auto& [key, rep] : orbit_min) {
    CatalogueEntry e;
    e.quantale = validate_quantale(L, rep);
    e.canonical = key;
    e.profile = quantale_profile(e.quantale);
    if (!leaf_constraint_ok(c, e.profile)) continue;
    e.und = unitally_nondistributive(e.quantale);
    if ((c.kind == Constraint::Kind::unital_at ||
         c.kind == Constraint::Kind::prop_a) &&
        c.element != L.top)
      e.conditions = check_extension_conditions(e.quantale, c.element);
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

// Labelled candidates: index 0 is bottom, n-1 is top, and the order relation
// only ever points from smaller to larger index, so candidate orders are
// exactly the bit choices on middle pairs.
void labelled_lattices(int n, const std::function<void(
                                  const std::vector<Mask>&)>& emit) {
  if (n == 1) {
    emit({Mask{1}});
    return;
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 2; ++j) free_pairs.emplace_back(i, j);
  const int nb = static_cast<int>(free_pairs.size());
  std::vector<Mask> up(n);
  for (Mask choice = 0; choice < (Mask{1} << nb); ++choice) {
    for (int i = 0; i < n; ++i) up[i] = bit(i) | bit(n - 1);
    up[0] = (bit(n) - 1);
    for (int b = 0; b < nb; ++b)
      if (choice & bit(b)) up[free_pairs[b].first] |= bit(free_pairs[b].second);
    // transitivity
    bool ok = true;
    for (int i = 1; i <= n - 2 && ok; ++i)
      for (int j = i + 1; j <= n - 2; ++j)
        if ((up[i] & bit(j)) && (up[j] & ~up[i])) { ok = false; break; }
    if (!ok) continue;
    // every pair needs a least upper bound and a greatest lower bound
    std::vector<Mask> down(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (up[i] & bit(j)) down[j] |= bit(i);
    for (int i = 1; i < n - 1 && ok; ++i)
      for (int j = i + 1; j <= n - 2; ++j) {
        Mask ub = up[i] & up[j], lb = down[i] & down[j];
        bool lub = false, glb = false;
        for (Mask s = ub; s && !lub; s &= s - 1) {
          int cc = std::countr_zero(s);
          lub = (ub & ~up[cc]) == 0;
        }
        for (Mask s = lb; s && !glb; s &= s - 1) {
          int cc = std::countr_zero(s);
          glb = (lb & ~down[cc]) == 0;
        }
        if (!lub || !glb) { ok = false; break; }
      }
    if (ok) emit(up);
  }
}

Lattice lattice_from_up(const std::vector<Mask>& up) {
  const int n = static_cast<int>(up.size());
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) order[i][j] = (up[i] >> j) & 1;
  return validate_lattice(order, {});
}

}  // namespace

std::vector<Lattice> enumerate_lattices(int n) {
  if (n < 1 || n > 8)
    throw Error(errc::too_large, "lattice census is capped at 8 elements");
  std::map<std::vector<std::uint8_t>, Lattice> classes;
  labelled_lattices(n, [&](const std::vector<Mask>& up) {
    Lattice L = lattice_from_up(up);
    std::vector<std::uint8_t> key = canonical_lattice_bytes(L);
    if (classes.count(key)) return;
    Lattice C = relabel(L, canonical_labeling(L));
    // names follow the canonical positions
    std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) order[i][j] = C.leq(i, j);
    classes.emplace(std::move(key), validate_lattice(order, {}));
  });
  std::vector<Lattice> out;
  out.reserve(classes.size());
  for (auto& [key, L] : classes) out.push_back(std::move(L));
  return out;
}

ClassifySeven classify_seven(int threads) {
  ClassifySeven r;
  std::map<std::vector<std::uint8_t>, bool> seen;
  for (PatternTag tag : {PatternTag::ext_m3, PatternTag::ext_n5}) {
    const Lattice& L = pattern_model(tag);
    ClassifySeven::Part part;
    part.lattice_name = pattern_name(tag);
    part.lattice = L;
    std::map<std::vector<std::uint8_t>, CatalogueEntry> merged;
    for (int u = 0; u < L.n; ++u) {
      if (!isolated_info(L, u)) continue;
      Mask tb = 0;
      for (int b = 0; b < L.n; ++b)
        if (totally_below(L, b, u)) tb |= bit(b);
      if (!L.leq(u, L.join_all(tb))) continue;
      for (CatalogueEntry& e :
           enumerate_quantales(L, Constraint::unital_at(u), threads)) {
        if (!e.und) continue;
        if (seen.count(e.canonical) || merged.count(e.canonical)) continue;
        merged.emplace(e.canonical, std::move(e));
      }
    }
    for (auto& [key, e] : merged) {
      seen.emplace(key, true);
      if (!e.profile.commutative) ++r.non_commutative;
      ++r.total;
      part.entries.push_back(std::move(e));
    }
    r.parts.push_back(std::move(part));
  }
  return r;
}

std::vector<CensusRow> census_strict(int max_n) {
  if (max_n < 1 || max_n > 8)
    throw Error(errc::too_large, "census is capped at 8 elements");
  std::vector<CensusRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    CensusRow row;
    row.n = n;
    for (Lattice& L : enumerate_lattices(n)) {
      ++row.lattices;
      DistributivityReport rep = distributivity_report(L);
      if (rep.nondist_witness) ++row.nondistributive;
      if (rep.strict_witness) {
        ++row.strict;
        row.strict_examples.push_back(std::move(L));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qwb
