#pragma once

#include <optional>
#include <string>

#include "qwb/iso.hpp"
#include "qwb/lattice.hpp"

namespace qwb {

// The stock shapes: the diamond M3, the pentagon N5, the two hexagon/heptagon
// variants L6 and L7 obtained by pulling the diamond's atoms apart, and each
// of those with an isolated element adjoined over gamma plus a fresh top.
enum class PatternTag {
  m3,
  n5,
  l6,
  l7,
  ext_m3,
  ext_n5,
  ext_l6,
  ext_l7,
};

const char* pattern_name(PatternTag t);
const Lattice& pattern_model(PatternTag t);

// Index of the distinguished atom gamma in each stock shape.
int pattern_gamma(PatternTag t);

// Builtin lookup by name (M3, N5, L6, L7, extM3, extN5, extL6, extL7,
// chain2..chain4); returns nullptr when unknown.
const Lattice* builtin_lattice(const std::string& name);

struct PatternHit {
  PatternTag tag;
  Mask subset;
};

// Finds a subset containing bottom and closed under binary joins whose
// induced order matches one of the four extended shapes.  Subsets are tried
// smallest first, then in lexicographic order of their sorted element lists;
// models are tried in tag order.  Present on every lattice whose
// distributivity report carries a strict witness.
std::optional<PatternHit> pattern_scan(const Lattice& L);

}  // namespace qwb
