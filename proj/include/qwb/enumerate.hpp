#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwb/patterns.hpp"
#include "qwb/quantale.hpp"

namespace qwb {

struct Constraint {
  enum class Kind { none, unital_at, prop_a, unital, non_unital, semi_unital };
  Kind kind = Kind::none;
  int element = -1;  // unit for unital_at, gamma for prop_a

  static Constraint none() { return {}; }
  static Constraint unital_at(int e) { return {Kind::unital_at, e}; }
  static Constraint prop_a(int g) { return {Kind::prop_a, g}; }
  static Constraint unital() { return {Kind::unital, -1}; }
  static Constraint non_unital() { return {Kind::non_unital, -1}; }
  static Constraint semi_unital() { return {Kind::semi_unital, -1}; }

  // "none", "unital", "nonUnital", "semiUnital", "unitalAt(NAME)",
  // "propA(NAME)" with NAME resolved against the lattice
  static Constraint parse(const std::string& text, const Lattice& L);
  std::string describe(const Lattice& L) const;
};

struct CatalogueEntry {
  Quantale quantale;  // representative on the input labelling
  std::vector<std::uint8_t> canonical;
  QuantaleProfile profile;
  std::optional<UndWitness> und;
  // conditions at the constraint element, when one is given and is not top
  std::optional<ExtensionConditions> conditions;
};

// All bounded lattices with n elements, one per isomorphism class, in
// canonical labelling, sorted by canonical encoding.  Capped at n <= 8.
std::vector<Lattice> enumerate_lattices(int n);

// All quantale structures on L meeting the constraint, one representative
// per isomorphism orbit (the orbit minimum under the order automorphisms),
// sorted by canonical encoding.  The search assigns products of
// join-irreducible generators in row-major order, trying values in element
// order; worker count never changes the result.
std::vector<CatalogueEntry> enumerate_quantales(const Lattice& L,
                                                const Constraint& c,
                                                int threads = 1);

// The classification on seven elements: for both strictly nondistributive
// seven-element lattices, enumerate the quantales whose unit is an isolated
// element approximable from totally below and which fail unital meet
// distribution.
struct ClassifySeven {
  struct Part {
    std::string lattice_name;
    Lattice lattice;
    std::vector<CatalogueEntry> entries;
  };
  std::vector<Part> parts;
  int total = 0;
  int non_commutative = 0;
};

ClassifySeven classify_seven(int threads = 1);

// Per-size counts of lattice classes, nondistributive classes, and strictly
// nondistributive classes, with representatives of the strict ones.
struct CensusRow {
  int n = 0;
  int lattices = 0;
  int nondistributive = 0;
  int strict = 0;
  std::vector<Lattice> strict_examples;
};

std::vector<CensusRow> census_strict(int max_n);

}  // namespace qwb
