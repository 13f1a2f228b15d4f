#include "qwb/iso.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <tuple>

namespace qwb {
namespace {

using Inv = std::tuple<int, int, bool, bool, bool>;

Inv invariant(const Lattice& L, int a) {
  return {std::popcount(L.down[a]), std::popcount(L.up[a]), L.is_atom(a),
          L.is_coatom(a), L.join_irreducible(a)};
}

std::vector<Inv> invariants(const Lattice& L) {
  std::vector<Inv> v;
  v.reserve(L.n);
  for (int a = 0; a < L.n; ++a) v.push_back(invariant(L, a));
  return v;
}

// Extends a partial map A->B element by element; emit() returns false to stop
// after the first full map.
bool extend_map(const Lattice& A, const Lattice& B, const std::vector<Inv>& ia,
                const std::vector<Inv>& ib, Perm& map, Mask& used, int i,
                const std::function<bool(const Perm&)>& emit) {
  if (i == A.n) return emit(map);
  for (int c = 0; c < B.n; ++c) {
    if (used & bit(c)) continue;
    if (ia[i] != ib[c]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      ok = A.leq(i, j) == B.leq(c, map[j]) && A.leq(j, i) == B.leq(map[j], c);
    if (!ok) continue;
    map[i] = c;
    used |= bit(c);
    if (!extend_map(A, B, ia, ib, map, used, i + 1, emit)) return false;
    used &= ~bit(c);
  }
  return true;
}

void search_isos(const Lattice& A, const Lattice& B,
                 const std::function<bool(const Perm&)>& emit) {
  if (A.n != B.n) return;
  auto ia = invariants(A), ib = invariants(B);
  auto sa = ia, sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return;
  Perm map(A.n, -1);
  Mask used = 0;
  extend_map(A, B, ia, ib, map, used, 0, emit);
}

// Bits revealed when element x is placed next, given the already placed
// sequence: column above, then row to the left, then the diagonal.
void reveal_bits(const Lattice& L, const std::vector<int>& placed, int x,
                 std::vector<std::uint8_t>& out) {
  out.clear();
  for (int prev : placed) out.push_back(L.leq(prev, x));
  for (int prev : placed) out.push_back(L.leq(x, prev));
  out.push_back(1);
}

}  // namespace

std::optional<Perm> lattice_isomorphic(const Lattice& A, const Lattice& B) {
  std::optional<Perm> found;
  search_isos(A, B, [&](const Perm& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<Perm> automorphisms(const Lattice& L) {
  std::vector<Perm> out;
  search_isos(L, L, [&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

// Exact maximisation, breadth first: the frontier holds every partial
// placement that realises the lexicographically largest bit string so far,
// so no placement achieving the maximum is ever lost.  Frontier width is
// bounded by the order automorphisms times transient ties, which stays small
// for the carrier sizes used here.
Perm canonical_labeling(const Lattice& L) {
  struct State {
    std::vector<int> placed;
    Mask used = 0;
  };
  std::vector<State> frontier{State{}};
  std::vector<std::uint8_t> seg, best_seg;
  for (int k = 0; k < L.n; ++k) {
    std::vector<State> next;
    best_seg.clear();
    for (const State& st : frontier) {
      for (int x = 0; x < L.n; ++x) {
        if (st.used & bit(x)) continue;
        reveal_bits(L, st.placed, x, seg);
        if (next.empty() || seg > best_seg) {
          best_seg = seg;
          next.clear();
        } else if (seg < best_seg) {
          continue;
        }
        State ns = st;
        ns.placed.push_back(x);
        ns.used |= bit(x);
        next.push_back(std::move(ns));
      }
    }
    frontier = std::move(next);
  }
  // all survivors induce the same relabelled matrix; take the first
  Perm p(L.n);
  for (int pos = 0; pos < L.n; ++pos) p[frontier.front().placed[pos]] = pos;
  return p;
}

Lattice relabel(const Lattice& L, const Perm& p) {
  std::vector<std::vector<bool>> order(L.n, std::vector<bool>(L.n, false));
  std::vector<std::string> names(L.n);
  for (int a = 0; a < L.n; ++a) {
    names[p[a]] = L.names[a];
    for (int b = 0; b < L.n; ++b)
      if (L.leq(a, b)) order[p[a]][p[b]] = true;
  }
  return validate_lattice(order, std::move(names));
}

std::vector<std::uint8_t> canonical_lattice_bytes(const Lattice& L) {
  Lattice C = relabel(L, canonical_labeling(L));
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(C.n)};
  std::uint8_t acc = 0;
  int nb = 0;
  auto push = [&](bool v) {
    acc = static_cast<std::uint8_t>((acc << 1) | (v ? 1 : 0));
    if (++nb == 8) {
      bytes.push_back(acc);
      acc = 0;
      nb = 0;
    }
  };
  for (int k = 0; k < C.n; ++k) {
    for (int i = 0; i < k; ++i) push(C.leq(i, k));
    for (int i = 0; i < k; ++i) push(C.leq(k, i));
    push(true);
  }
  if (nb) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nb)));
  return bytes;
}

}  // namespace qwb
