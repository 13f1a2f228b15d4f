#pragma once

// The complete multiplication-table inventories on the diamond and the
// pentagon with the distinguished atom gamma absorbing on both sides
// ((gamma*x) v (x*gamma) <= x for every x).  Each table is written as 16
// letters, rows then columns over alpha, beta, gamma, top, with the bottom
// row and column left implicit; letters: B bottom, a alpha, b beta, g gamma,
// T top.  Tags name the products that pin the case down.  Every table below
// validates as a quantale, no two on the same lattice are isomorphic, and
// the inventories are exhaustive for their constraint (the enumeration tests
// assert all three facts).

#include <array>
#include <string>
#include <vector>

#include "qwb/quantale.hpp"

namespace figures {

struct KnownTable {
  const char* tag;
  const char* cells;  // 16 letters, row-major over alpha, beta, gamma, top
};

// Diamond, unital with unit gamma: determined by alpha*alpha and beta*beta.
inline const std::vector<KnownTable>& m3_unital() {
  static const std::vector<KnownTable> v = {
      {"aa=bot bb=gamma", "BaaaagbTabgTaTTT"},
      {"aa=bot bb=top", "BaaaaTbTabgTaTTT"},
      {"aa=alpha bb=beta", "aBaaBbbbabgTabTT"},
      {"aa=alpha bb=gamma", "aaaaagbTabgTaTTT"},
      {"aa=alpha bb=top", "aaaaaTbTabgTaTTT"},
      {"aa=beta bb=alpha cyclic", "bgaTgabTabgTTTTT"},
      {"aa=beta bb=top", "bTaTTTbTabgTTTTT"},
      {"aa=top bb=top", "TTaTTTbTabgTTTTT"},
  };
  return v;
}

// Diamond, non-unital (gamma*gamma = bottom): the product is constant on
// {alpha, beta, top} and bottom against gamma.
inline const std::vector<KnownTable>& m3_non_unital() {
  static const std::vector<KnownTable> v = {
      {"constant bot", "BBBBBBBBBBBBBBBB"},
      {"constant alpha", "aaBaaaBaBBBBaaBa"},
      {"constant gamma", "ggBgggBgBBBBggBg"},
      {"constant top", "TTBTTTBTBBBBTTBT"},
  };
  return v;
}

// Pentagon (alpha below gamma), unital with unit gamma.
inline const std::vector<KnownTable>& n5_unital() {
  static const std::vector<KnownTable> v = {
      {"bb=bot", "abaTbBbbabgTTbTT"},
      {"bb=beta ab=bot", "aBaaBbbbabgTabTT"},
      {"bb=beta ab=beta", "abaTbbbbabgTTbTT"},
      {"bb=alpha", "abaTbabTabgTTTTT"},
      {"bb=top", "abaTbTbTabgTTTTT"},
  };
  return v;
}

// Pentagon, non-unital but semi-unital: gamma*gamma = alpha with
// beta*gamma = gamma*beta = beta.
inline const std::vector<KnownTable>& n5_semi_unital() {
  static const std::vector<KnownTable> v = {
      {"bb=bot", "abaTbBbbabaTTbTT"},
      {"bb=alpha", "abaTbabTabaTTTTT"},
      {"bb=beta", "abaTbbbbabaTTbTT"},
      {"bb=top", "abaTbTbTabaTTTTT"},
  };
  return v;
}

// Pentagon, not semi-unital: either gamma*gamma = alpha with beta*gamma and
// gamma*beta meeting at bottom (the last two are the only non-commutative
// tables, mutual opposites), or gamma*gamma = bottom with everything riding
// on beta*beta.
inline const std::vector<KnownTable>& n5_non_semi_unital() {
  static const std::vector<KnownTable> v = {
      {"gg=alpha bg=gb=bot bb=bot", "aBaaBBBBaBaaaBaa"},
      {"gg=alpha bg=gb=bot bb=beta", "aBaaBbBbaBaaabaT"},
      {"gg=alpha gb=beta bg=bot", "abaTBBBBabaTabaT"},
      {"gg=alpha bg=beta gb=bot", "aBaabBbbaBaaTBTT"},
      {"gg=bot bb=bot", "BBBBBBBBBBBBBBBB"},
      {"gg=bot bb=alpha", "BBBBBaBaBBBBBaBa"},
      {"gg=bot bb=beta", "BBBBBbBbBBBBBbBb"},
      {"gg=bot bb=gamma", "BBBBBgBgBBBBBgBg"},
      {"gg=bot bb=top", "BBBBBTBTBBBBBTBT"},
  };
  return v;
}

// Builds and validates the quantale for a 16-letter table on a 5-element
// lattice named bot/alpha/beta/gamma/top.
inline qwb::Quantale make_table(const qwb::Lattice& L, const KnownTable& k) {
  auto idx = [&](char c) {
    switch (c) {
      case 'B': return L.index_of("bot");
      case 'a': return L.index_of("alpha");
      case 'b': return L.index_of("beta");
      case 'g': return L.index_of("gamma");
      default: return L.index_of("top");
    }
  };
  const std::array<int, 4> row = {idx('a'), idx('b'), idx('g'), idx('T')};
  std::vector<int> mul(L.n * L.n, L.bottom);
  const std::string cells = k.cells;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      mul[row[i] * L.n + row[j]] = idx(cells[i * 4 + j]);
  return qwb::validate_quantale(L, std::move(mul), std::string(k.tag));
}

}  // namespace figures
