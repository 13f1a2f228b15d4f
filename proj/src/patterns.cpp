#include "qwb/patterns.hpp"

#include <bit>
#include <map>

namespace qwb {
namespace {

Lattice from_covers(int n, std::vector<std::string> names,
                    const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) order[i][i] = true;
  for (auto [a, b] : covers) order[a][b] = true;
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (order[i][k])
        for (int j = 0; j < n; ++j)
          if (order[k][j]) order[i][j] = true;
  return validate_lattice(order, std::move(names));
}

Lattice make_m3() {
  return from_covers(5, {"bot", "alpha", "beta", "gamma", "top"},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Lattice make_n5() {
  // bot < alpha < gamma < top, bot < beta < top
  return from_covers(5, {"bot", "alpha", "beta", "gamma", "top"},
                     {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
}

Lattice make_l6() {
  return from_covers(
      6, {"bot", "alpha", "beta", "gamma", "ag", "top"},
      {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}, {4, 5}, {2, 5}});
}

Lattice make_l7() {
  return from_covers(7, {"bot", "alpha", "beta", "gamma", "ag", "bg", "top"},
                     {{0, 1},
                      {0, 2},
                      {0, 3},
                      {1, 4},
                      {3, 4},
                      {3, 5},
                      {2, 5},
                      {4, 6},
                      {5, 6}});
}

Lattice make_chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return from_covers(n, std::move(names), covers);
}

struct Models {
  Lattice m3 = make_m3();
  Lattice n5 = make_n5();
  Lattice l6 = make_l6();
  Lattice l7 = make_l7();
  Lattice ext_m3 = extend_lattice(m3, 3).lattice;
  Lattice ext_n5 = extend_lattice(n5, 3).lattice;
  Lattice ext_l6 = extend_lattice(l6, 3).lattice;
  Lattice ext_l7 = extend_lattice(l7, 3).lattice;
  Lattice chain2 = make_chain(2);
  Lattice chain3 = make_chain(3);
  Lattice chain4 = make_chain(4);
};

const Models& models() {
  static const Models m;
  return m;
}

}  // namespace

const char* pattern_name(PatternTag t) {
  switch (t) {
    case PatternTag::m3: return "M3";
    case PatternTag::n5: return "N5";
    case PatternTag::l6: return "L6";
    case PatternTag::l7: return "L7";
    case PatternTag::ext_m3: return "extM3";
    case PatternTag::ext_n5: return "extN5";
    case PatternTag::ext_l6: return "extL6";
    case PatternTag::ext_l7: return "extL7";
  }
  return "?";
}

const Lattice& pattern_model(PatternTag t) {
  const Models& m = models();
  switch (t) {
    case PatternTag::m3: return m.m3;
    case PatternTag::n5: return m.n5;
    case PatternTag::l6: return m.l6;
    case PatternTag::l7: return m.l7;
    case PatternTag::ext_m3: return m.ext_m3;
    case PatternTag::ext_n5: return m.ext_n5;
    case PatternTag::ext_l6: return m.ext_l6;
    case PatternTag::ext_l7: return m.ext_l7;
  }
  return m.m3;
}

int pattern_gamma(PatternTag) { return 3; }

const Lattice* builtin_lattice(const std::string& name) {
  const Models& m = models();
  static const std::map<std::string, const Lattice*> table = {
      {"M3", &m.m3},         {"N5", &m.n5},         {"L6", &m.l6},
      {"L7", &m.l7},         {"extM3", &m.ext_m3},  {"extN5", &m.ext_n5},
      {"extL6", &m.ext_l6},  {"extL7", &m.ext_l7},  {"chain2", &m.chain2},
      {"chain3", &m.chain3}, {"chain4", &m.chain4},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : it->second;
}

namespace {

// Induced order on a join-closed subset containing bottom is again a
// bounded lattice: joins are inherited, meets are recomputed inside.
Lattice induced_sublattice(const Lattice& L, Mask subset) {
  std::vector<int> elems;
  for (Mask s = subset; s; s &= s - 1) elems.push_back(std::countr_zero(s));
  int k = static_cast<int>(elems.size());
  std::vector<std::vector<bool>> order(k, std::vector<bool>(k, false));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = L.names[elems[i]];
    for (int j = 0; j < k; ++j) order[i][j] = L.leq(elems[i], elems[j]);
  }
  return validate_lattice(order, std::move(names));
}

bool join_closed(const Lattice& L, Mask subset) {
  std::vector<int> elems;
  for (Mask s = subset; s; s &= s - 1) elems.push_back(std::countr_zero(s));
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!(subset & bit(L.join(elems[i], elems[j])))) return false;
  return true;
}

// Combinations of {0..n-1} \ {forced} in lexicographic order of the sorted
// element lists, with `forced` always included.
template <typename F>
void for_each_subset_with(int n, int forced, int size, F&& fn) {
  std::vector<int> pool;
  for (int i = 0; i < n; ++i)
    if (i != forced) pool.push_back(i);
  int k = size - 1;
  if (k < 0 || k > static_cast<int>(pool.size())) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = bit(forced);
    for (int i : idx) m |= bit(pool[i]);
    if (fn(m)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<PatternHit> pattern_scan(const Lattice& L) {
  if (L.n > 20)
    throw Error(errc::too_large, "pattern scan is guarded at 20 elements");
  static const PatternTag ext_tags[] = {PatternTag::ext_m3, PatternTag::ext_n5,
                                        PatternTag::ext_l6, PatternTag::ext_l7};
  std::optional<PatternHit> hit;
  for (int size : {7, 8, 9}) {
    if (size > L.n) break;
    for_each_subset_with(L.n, L.bottom, size, [&](Mask subset) {
      if (!join_closed(L, subset)) return false;
      Lattice sub = induced_sublattice(L, subset);
      for (PatternTag t : ext_tags) {
        const Lattice& model = pattern_model(t);
        if (model.n != size) continue;
        if (lattice_isomorphic(model, sub)) {
          hit = PatternHit{t, subset};
          return true;
        }
      }
      return false;
    });
    if (hit) break;
  }
  return hit;
}

}  // namespace qwb
