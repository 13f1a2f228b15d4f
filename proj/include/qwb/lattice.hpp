#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwb/errors.hpp"

namespace qwb {

// Element subsets are bitmasks, so carriers are capped at 64 elements.
using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

constexpr int kMaxElements = 64;

// A finite bounded lattice over elements 0..n-1.  The index order carries no
// meaning; bottom and top are found by scanning.  Construct through
// validate_lattice so that the join/meet tables are always consistent.
struct Lattice {
  int n = 0;
  std::vector<std::string> names;
  int bottom = 0;
  int top = 0;

  // up[a] = mask of b with a <= b, down[a] = mask of b with b <= a.
  std::vector<Mask> up, down;
  std::vector<int> join_tab, meet_tab;  // n*n, row-major

  bool leq(int a, int b) const { return (up[a] >> b) & 1; }
  int join(int a, int b) const { return join_tab[a * n + b]; }
  int meet(int a, int b) const { return meet_tab[a * n + b]; }

  Mask all_mask() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

  int join_all(Mask s) const;  // empty set -> bottom
  int meet_all(Mask s) const;  // empty set -> top

  bool is_atom(int a) const { return a != bottom && meet_covers(bottom, a); }
  bool is_coatom(int a) const { return a != top && meet_covers(a, top); }
  // a covered by b: a < b with nothing strictly between
  bool meet_covers(int a, int b) const;
  // join-irreducible: not bottom, exactly one lower cover
  bool join_irreducible(int a) const;
  std::vector<int> lower_covers(int a) const;
  std::vector<int> upper_covers(int a) const;

  int index_of(const std::string& name) const;  // -1 if absent
};

// Checks reflexivity, antisymmetry, transitivity, existence of all binary
// joins and meets, and locates the bounds.  Throws Error with codes
// not_a_poset / no_join / no_meet / no_bounds / bad_argument.
Lattice validate_lattice(const std::vector<std::vector<bool>>& order,
                         std::vector<std::string> names);

// (join of A, meet of A); empty A gives (bottom, top).
std::pair<int, int> bounds(const Lattice& L, Mask subset);

// b is totally below a: every subset whose join dominates a contains an
// element above b.  Decided by the closed form  b <| a  iff  a is not under
// the join of { c : b is not under c }.
bool totally_below(const Lattice& L, int below, int above);

struct DistributivityReport {
  std::vector<bool> approximable;  // a <= join of { b : b <| a }
  bool completely_distributive = false;
  // first (a, b, g) with  g /\ (a \/ b)  not under  (g /\ a) \/ (g /\ b)
  std::optional<std::array<int, 3>> nondist_witness;
  // additionally the third component x is not under a \/ b
  std::optional<std::array<int, 3>> strict_witness;
};

DistributivityReport distributivity_report(const Lattice& L);

// x is isolated when removing it from its principal down-set and up-set
// leaves principal sets again: lower is the unique element directly below in
// the order-theoretic sense, upper similarly above.
struct IsolationInfo {
  int element;
  int lower;  // down(x) minus x equals down(lower)
  int upper;  // up(x) minus x equals up(upper)
};

std::optional<IsolationInfo> isolated_info(const Lattice& L, int x);

// Adjoins an isolated element e sitting exactly above the down-set of gamma,
// plus a fresh top.  gamma == top is allowed (degenerate chain on top).
struct LatticeExtension {
  Lattice lattice;
  int isolated;  // index of e (the old n)
  int new_top;   // index of the fresh top (old n + 1)
};

LatticeExtension extend_lattice(const Lattice& L, int gamma);

// Order embedding into the powerset of L ordered by reverse inclusion,
// sending a to its up-set.  Preserves all joins (bottom maps to the full
// set, binary joins to intersections); meets cannot be preserved in general,
// since a sublattice closed under all joins and meets of a completely
// distributive lattice is itself completely distributive.  Witnesses that
// every (small) lattice sits join-faithfully inside a completely
// distributive one.  Guarded at n <= 12 (throws too_large).
std::vector<Mask> embed_completely_distributive(const Lattice& L);

}  // namespace qwb
