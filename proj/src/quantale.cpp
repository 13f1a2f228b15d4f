#include "qwb/quantale.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace qwb {

Quantale validate_quantale(Lattice lattice, std::vector<int> mul,
                           std::optional<std::string> label) {
  const int n = lattice.n;
  if (static_cast<int>(mul.size()) != n * n)
    throw Error(errc::bad_argument, "multiplication table is not n*n");
  for (int v : mul)
    if (v < 0 || v >= n)
      throw Error(errc::bad_argument, "multiplication entry out of range");

  Quantale Q{std::move(lattice), std::move(mul), std::move(label)};
  const Lattice& L = Q.lattice;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (Q.at(Q.at(x, y), z) != Q.at(x, Q.at(y, z)))
          throw Error(errc::not_associative,
                      "(" + L.names[x] + "*" + L.names[y] + ")*" + L.names[z] +
                          " differs from " + L.names[x] + "*(" + L.names[y] +
                          "*" + L.names[z] + ")",
                      {x, y, z});

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int j = L.join(x, y);
        if (Q.at(j, z) != L.join(Q.at(x, z), Q.at(y, z)))
          throw Error(errc::not_join_preserving,
                      "left argument: (" + L.names[x] + " v " + L.names[y] +
                          ")*" + L.names[z],
                      {x, y, z});
        if (Q.at(z, j) != L.join(Q.at(z, x), Q.at(z, y)))
          throw Error(errc::not_join_preserving,
                      "right argument: " + L.names[z] + "*(" + L.names[x] +
                          " v " + L.names[y] + ")",
                      {x, y, z});
      }

  for (int z = 0; z < n; ++z) {
    if (Q.at(L.bottom, z) != L.bottom)
      throw Error(errc::bottom_not_annihilating,
                  "bottom*" + L.names[z] + " is not bottom", {z});
    if (Q.at(z, L.bottom) != L.bottom)
      throw Error(errc::bottom_not_annihilating,
                  L.names[z] + "*bottom is not bottom", {z});
  }
  return Q;
}

std::pair<int, int> residuals(const Quantale& Q, int a, int b) {
  const Lattice& L = Q.lattice;
  Mask right = 0, left = 0;
  for (int c = 0; c < L.n; ++c) {
    if (L.leq(Q.at(a, c), b)) right |= bit(c);
    if (L.leq(Q.at(c, a), b)) left |= bit(c);
  }
  return {L.join_all(right), L.join_all(left)};
}

QuantaleProfile quantale_profile(const Quantale& Q) {
  const Lattice& L = Q.lattice;
  const int n = L.n;
  QuantaleProfile p;
  for (int u = 0; u < n && !p.unit; ++u) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = Q.at(u, x) == x && Q.at(x, u) == x;
    if (ok) p.unit = u;
  }
  p.semi_unital = true;
  for (int x = 0; x < n; ++x) {
    if (!L.leq(x, Q.at(L.top, x)) || !L.leq(x, Q.at(x, L.top)))
      p.semi_unital = false;
    if (L.leq(Q.at(L.top, x), x) && L.leq(Q.at(x, L.top), x))
      p.two_sided_elements |= bit(x);
  }
  p.two_sided = p.two_sided_elements == L.all_mask();
  p.integral = p.unit && *p.unit == L.top;
  p.commutative = true;
  for (int x = 0; x < n && p.commutative; ++x)
    for (int y = 0; y < n && p.commutative; ++y)
      p.commutative = Q.at(x, y) == Q.at(y, x);
  for (int d = 0; d < n; ++d) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      auto [a_under_d, d_over_a] = residuals(Q, a, d);
      // a \ d then d / (a \ d); and d / a then (d / a) \ d
      int back1 = residuals(Q, a_under_d, d).second;
      int back2 = residuals(Q, d_over_a, d).first;
      ok = back1 == a && back2 == a;
    }
    if (ok) p.dualizing |= bit(d);
  }
  p.meet_distributive_mul = true;
  for (int x = 0; x < n && p.meet_distributive_mul; ++x)
    for (int a = 0; a < n && p.meet_distributive_mul; ++a)
      for (int b = 0; b < n; ++b) {
        int m = L.meet(a, b);
        if (Q.at(x, m) != L.meet(Q.at(x, a), Q.at(x, b)) ||
            Q.at(m, x) != L.meet(Q.at(a, x), Q.at(b, x))) {
          p.meet_distributive_mul = false;
          break;
        }
      }
  return p;
}

ExtensionConditions check_extension_conditions(const Quantale& Q, int gamma) {
  const Lattice& L = Q.lattice;
  if (gamma == L.top)
    throw Error(errc::gamma_is_top,
                "cannot adjoin a unit over the top element", {gamma});
  ExtensionConditions c;
  c.prop_a = true;
  for (int a = 0; a < L.n; ++a)
    if (!L.leq(L.join(Q.at(gamma, a), Q.at(a, gamma)), a)) {
      c.prop_a = false;
      c.a_witness = {a};
      break;
    }
  c.prop_aa = true;
  for (int a = 0; a < L.n && c.prop_aa; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (L.leq(b, gamma)) continue;
      if (!L.leq(Q.at(L.top, a), L.join(Q.at(b, a), a)) ||
          !L.leq(Q.at(a, L.top), L.join(Q.at(a, b), a))) {
        c.prop_aa = false;
        c.aa_witness = {a, b};
        break;
      }
    }
  for (int a = 0; a < L.n && !c.b_witness; ++a)
    for (int b = 0; b < L.n; ++b) {
      int lhs = L.meet(gamma, L.join(a, b));
      int rhs = L.join(L.meet(gamma, a), L.meet(gamma, b));
      if (!L.leq(lhs, rhs)) {
        c.b_witness = {a, b};
        break;
      }
    }
  c.prop_b = c.b_witness.has_value();
  return c;
}

QuantaleExtension extend_quantale(const Quantale& Q, int gamma) {
  const Lattice& L = Q.lattice;
  ExtensionConditions c = check_extension_conditions(Q, gamma);
  if (!c.prop_a)
    throw Error(errc::conditions_fail,
                "gamma does not absorb into " + L.names[c.a_witness[0]],
                c.a_witness);
  if (!c.prop_aa)
    throw Error(errc::conditions_fail,
                "top products exceed the join bound at (" +
                    L.names[c.aa_witness[0]] + ", " + L.names[c.aa_witness[1]] +
                    ")",
                c.aa_witness);

  LatticeExtension ext = extend_lattice(L, gamma);
  const int n = L.n, e = ext.isolated, t = ext.new_top, m = n + 2;
  std::vector<int> mul(m * m, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * m + b] = Q.at(a, b);
  for (int a = 0; a < n; ++a) {
    mul[t * m + a] = L.join(Q.at(L.top, a), a);
    mul[a * m + t] = L.join(Q.at(a, L.top), a);
  }
  mul[t * m + t] = t;
  for (int x = 0; x < m; ++x) {
    mul[e * m + x] = x;
    mul[x * m + e] = x;
  }
  mul[t * m + e] = t;
  mul[e * m + t] = t;
  return {validate_quantale(ext.lattice, std::move(mul), Q.label), e, t};
}

std::pair<int, int> und_extract_pair(const Quantale& Q, int unit,
                                     const std::vector<int>& subset) {
  const Lattice& L = Q.lattice;
  const int k = static_cast<int>(subset.size());
  // suffix joins b_i = a_i v ... v a_{k-1}
  std::vector<int> suffix(k + 1, L.bottom);
  for (int i = k - 1; i >= 0; --i)
    suffix[i] = L.join(subset[i], suffix[i + 1]);
  for (int i = 0; i < k; ++i) {
    int lhs = L.meet(unit, suffix[i]);
    int rhs = L.join(L.meet(unit, subset[i]), L.meet(unit, suffix[i + 1]));
    if (!L.leq(lhs, rhs)) return {subset[i], suffix[i + 1]};
  }
  throw Error(errc::bad_argument, "subset does not violate distribution");
}

std::optional<UndWitness> unitally_nondistributive(const Quantale& Q) {
  const Lattice& L = Q.lattice;
  QuantaleProfile p = quantale_profile(Q);
  if (!p.unit) return std::nullopt;
  int e = *p.unit;
  Mask tb = 0;
  for (int b = 0; b < L.n; ++b)
    if (totally_below(L, b, e)) tb |= bit(b);
  if (!L.leq(e, L.join_all(tb))) return std::nullopt;
  // a violating subset always shrinks to a violating pair, so pairs decide
  for (int a = 0; a < L.n; ++a)
    for (int b = a + 1; b < L.n; ++b) {
      int lhs = L.meet(e, L.join(a, b));
      int rhs = L.join(L.meet(e, a), L.meet(e, b));
      if (!L.leq(lhs, rhs))
        return UndWitness{bit(a) | bit(b), und_extract_pair(Q, e, {a, b})};
    }
  return std::nullopt;
}

Quantale group_quantale(const std::vector<std::vector<int>>& cayley) {
  const int k = static_cast<int>(cayley.size());
  if (k < 1) throw Error(errc::not_a_group, "empty Cayley table");
  for (auto& row : cayley) {
    if (static_cast<int>(row.size()) != k)
      throw Error(errc::not_a_group, "Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= k)
        throw Error(errc::not_a_group, "Cayley entry out of range");
  }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]])
          throw Error(errc::not_a_group, "Cayley table is not associative",
                      {x, y, z});
  int unit = -1;
  for (int u = 0; u < k && unit < 0; ++u) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x)
      ok = cayley[u][x] == x && cayley[x][u] == x;
    if (ok) unit = u;
  }
  if (unit < 0) throw Error(errc::not_a_group, "no identity element");
  for (int x = 0; x < k; ++x) {
    bool inv = false;
    for (int y = 0; y < k && !inv; ++y)
      inv = cayley[x][y] == unit && cayley[y][x] == unit;
    if (!inv) throw Error(errc::not_a_group, "no inverse", {x});
  }

  const int n = k + 2, bot = 0, top = k + 1;
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    order[i][i] = true;
    order[bot][i] = true;
    order[i][top] = true;
  }
  std::vector<std::string> names(n);
  names[bot] = "bot";
  names[top] = "top";
  for (int g = 0; g < k; ++g)
    names[g + 1] = g == unit ? "e" : "g" + std::to_string(g);

  std::vector<int> mul(n * n, bot);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) mul[(x + 1) * n + (y + 1)] = cayley[x][y] + 1;
  for (int g = 1; g <= k; ++g) {
    mul[top * n + g] = top;
    mul[g * n + top] = top;
  }
  mul[top * n + top] = top;
  return validate_quantale(validate_lattice(order, std::move(names)),
                           std::move(mul),
                           "group of order " + std::to_string(k));
}

void validate_nucleus(const Quantale& Q, const Nucleus& c) {
  const Lattice& L = Q.lattice;
  const int n = L.n;
  if (static_cast<int>(c.map.size()) != n)
    throw Error(errc::not_a_nucleus, "map size does not match carrier");
  for (int v : c.map)
    if (v < 0 || v >= n)
      throw Error(errc::not_a_nucleus, "map value out of range");
  for (int x = 0; x < n; ++x) {
    if (!L.leq(x, c.map[x]))
      throw Error(errc::not_a_nucleus, "not inflationary at " + L.names[x],
                  {x});
    if (c.map[c.map[x]] != c.map[x])
      throw Error(errc::not_a_nucleus, "not idempotent at " + L.names[x], {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (L.leq(x, y) && !L.leq(c.map[x], c.map[y]))
        throw Error(errc::not_a_nucleus,
                    "not monotone on " + L.names[x] + " <= " + L.names[y],
                    {x, y});
      if (!L.leq(Q.at(c.map[x], c.map[y]), c.map[Q.at(x, y)]))
        throw Error(errc::not_a_nucleus,
                    "multiplication bound fails on (" + L.names[x] + ", " +
                        L.names[y] + ")",
                    {x, y});
    }
}

std::pair<Quantale, std::vector<int>> quotient_by_nucleus(const Quantale& Q,
                                                          const Nucleus& c) {
  validate_nucleus(Q, c);
  const Lattice& L = Q.lattice;
  std::vector<int> fixed;
  for (int x = 0; x < L.n; ++x)
    if (c.map[x] == x) fixed.push_back(x);
  const int k = static_cast<int>(fixed.size());
  std::vector<int> pos(L.n, -1);
  for (int i = 0; i < k; ++i) pos[fixed[i]] = i;

  std::vector<std::vector<bool>> order(k, std::vector<bool>(k, false));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = L.names[fixed[i]];
    for (int j = 0; j < k; ++j) order[i][j] = L.leq(fixed[i], fixed[j]);
  }
  std::vector<int> mul(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      mul[i * k + j] = pos[c.map[Q.at(fixed[i], fixed[j])]];
  Quantale out = validate_quantale(validate_lattice(order, std::move(names)),
                                   std::move(mul), Q.label);
  return {std::move(out), std::move(fixed)};
}

std::optional<Perm> quantale_isomorphic(const Quantale& A, const Quantale& B) {
  if (A.lattice.n != B.lattice.n) return std::nullopt;
  const int n = A.lattice.n;
  std::optional<Perm> found;
  // enumerate order isomorphisms, keep the first that transports products
  std::vector<Perm> isos;
  {
    // reuse the lattice search by collecting every iso
    struct Collector {
      std::vector<Perm>* out;
    };
    // automorphism-style exhaustive search
    std::function<void(Perm&, Mask, int)> rec = [&](Perm& map, Mask used,
                                                    int i) {
      if (found) return;
      if (i == n) {
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (map[A.at(x, y)] != B.at(map[x], map[y])) return;
        found = map;
        return;
      }
      for (int cand = 0; cand < n && !found; ++cand) {
        if (used & bit(cand)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
          ok = A.lattice.leq(i, j) == B.lattice.leq(cand, map[j]) &&
               A.lattice.leq(j, i) == B.lattice.leq(map[j], cand);
        if (!ok) continue;
        map[i] = cand;
        rec(map, used | bit(cand), i + 1);
      }
    };
    Perm map(n, -1);
    rec(map, 0, 0);
  }
  return found;
}

Quantale restrict_quantale(const Quantale& Q, Mask carrier) {
  const Lattice& L = Q.lattice;
  if (!(carrier & bit(L.bottom)))
    throw Error(errc::bad_argument, "restriction must contain bottom");
  std::vector<int> elems;
  for (Mask s = carrier; s; s &= s - 1) elems.push_back(std::countr_zero(s));
  const int k = static_cast<int>(elems.size());
  std::vector<int> pos(L.n, -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (pos[L.join(elems[i], elems[j])] < 0)
        throw Error(errc::bad_argument, "restriction is not join closed",
                    {elems[i], elems[j]});
      if (pos[Q.at(elems[i], elems[j])] < 0)
        throw Error(errc::bad_argument,
                    "restriction is not multiplication closed",
                    {elems[i], elems[j]});
    }
  std::vector<std::vector<bool>> order(k, std::vector<bool>(k, false));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = L.names[elems[i]];
    for (int j = 0; j < k; ++j) order[i][j] = L.leq(elems[i], elems[j]);
  }
  std::vector<int> mul(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      mul[i * k + j] = pos[Q.at(elems[i], elems[j])];
  return validate_quantale(validate_lattice(order, std::move(names)),
                           std::move(mul), Q.label);
}

CanonicalContext make_canonical_context(const Lattice& L) {
  CanonicalContext ctx;
  ctx.sigma = canonical_labeling(L);
  ctx.lattice_bytes = canonical_lattice_bytes(L);
  Lattice C = relabel(L, ctx.sigma);
  for (const Perm& a : automorphisms(C)) {
    Perm t(L.n);
    for (int x = 0; x < L.n; ++x) t[x] = a[ctx.sigma[x]];
    ctx.transports.push_back(std::move(t));
  }
  return ctx;
}

std::vector<std::uint8_t> canonical_mul_bytes(const CanonicalContext& ctx,
                                              const std::vector<int>& mul) {
  const int n = static_cast<int>(ctx.sigma.size());
  std::vector<std::uint8_t> best, cur(n * n);
  for (const Perm& t : ctx.transports) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cur[t[x] * n + t[y]] = static_cast<std::uint8_t>(t[mul[x * n + y]]);
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::vector<std::uint8_t> canonical_quantale_bytes(const Quantale& Q) {
  CanonicalContext ctx = make_canonical_context(Q.lattice);
  std::vector<std::uint8_t> bytes = ctx.lattice_bytes;
  std::vector<std::uint8_t> mb = canonical_mul_bytes(ctx, Q.mul);
  bytes.insert(bytes.end(), mb.begin(), mb.end());
  return bytes;
}

}  // namespace qwb
