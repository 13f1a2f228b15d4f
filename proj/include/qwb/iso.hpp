#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qwb/lattice.hpp"

namespace qwb {

// perm[i] = image of element i
using Perm = std::vector<int>;

// First order-isomorphism found by backtracking (deterministic: elements of A
// mapped in index order, candidates tried in index order).  Candidates are
// restricted by a per-element invariant vector (down-set size, up-set size,
// atom, coatom, join-irreducible) before order consistency is enforced.
std::optional<Perm> lattice_isomorphic(const Lattice& A, const Lattice& B);

// All order-automorphisms, in lexicographic order of the permutation.
std::vector<Perm> automorphisms(const Lattice& L);

// Deterministic relabelling selected by maximising the order matrix bits in
// element-insertion order; isomorphic lattices always get byte-equal
// canonical encodings.
Perm canonical_labeling(const Lattice& L);

Lattice relabel(const Lattice& L, const Perm& p);

// n, then the relabelled order matrix bit-packed in insertion order.
std::vector<std::uint8_t> canonical_lattice_bytes(const Lattice& L);

}  // namespace qwb
