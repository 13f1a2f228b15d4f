#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwb/iso.hpp"
#include "qwb/lattice.hpp"

namespace qwb {

// A finite quantale: a bounded lattice with an associative multiplication
// that preserves joins in each argument (hence bottom annihilates).
// Construct through validate_quantale.
struct Quantale {
  Lattice lattice;
  std::vector<int> mul;  // n*n row-major, mul[a*n+b] = a*b
  std::optional<std::string> label;

  int at(int a, int b) const { return mul[a * lattice.n + b]; }
};

// Checks associativity, join preservation in each variable (binary joins
// suffice on a finite carrier), and bottom annihilation.  Witnesses carry the
// first offending triple / pair in index order.
Quantale validate_quantale(Lattice lattice, std::vector<int> mul,
                           std::optional<std::string> label = {});

// (a \ b, b / a): the largest c with a*c <= b, and the largest c with
// c*a <= b.  The defining adjunctions hold by join preservation.
std::pair<int, int> residuals(const Quantale& Q, int a, int b);

struct QuantaleProfile {
  std::optional<int> unit;
  bool semi_unital = false;     // x <= top*x and x <= x*top for all x
  Mask two_sided_elements = 0;  // top*x <= x and x*top <= x
  bool two_sided = false;
  bool integral = false;  // unit == top
  bool commutative = false;
  Mask dualizing = 0;  // d with (d / (a \ d)) == a == ((d / a) \ d) for all a
  bool meet_distributive_mul = false;
};

QuantaleProfile quantale_profile(const Quantale& Q);

// The two multiplication-side requirements and the lattice-side
// nondistributivity needed to adjoin a unit over gamma:
//   prop_a:  (gamma*a) v (a*gamma) <= a                        for all a
//   prop_aa: top*a <= (b*a) v a  and  a*top <= (a*b) v a       for all a and
//            all b not under gamma
//   prop_b:  some pair breaks meet distribution at gamma
struct ExtensionConditions {
  bool prop_a = false;
  bool prop_aa = false;
  bool prop_b = false;
  std::vector<int> a_witness;             // failing a for prop_a
  std::vector<int> aa_witness;            // failing (a, b) for prop_aa
  std::optional<std::pair<int, int>> b_witness;  // first pair for prop_b
};

// Throws gamma_is_top when gamma is the top element.
ExtensionConditions check_extension_conditions(const Quantale& Q, int gamma);

struct QuantaleExtension {
  Quantale quantale;
  int unit;     // the adjoined unit e
  int new_top;  // the fresh top
};

// Adjoins an isolated unit e over gamma and a fresh top T, multiplying by
//   T*T = T,  T*a = (top*a) v a,  a*T = (a*top) v a,  e neutral.
// Requires prop_a and prop_aa (throws conditions_fail otherwise); the result
// restricted to the original carrier is the original quantale, and it is the
// only quantale structure on the extended lattice with unit e extending Q.
QuantaleExtension extend_quantale(const Quantale& Q, int gamma);

struct UndWitness {
  Mask subset;              // first violating subset (always a pair)
  std::pair<int, int> pair;  // extracted via the join-chain argument
};

// Present when the quantale has a unit e that is approximable from totally
// below and meeting with e fails to distribute over some join.  The pair
// search is exhaustive: on a finite carrier a violating subset yields a
// violating pair by chaining partial joins.
std::optional<UndWitness> unitally_nondistributive(const Quantale& Q);

// Extracts the distinguished pair from a violating subset by scanning the
// suffix joins b_i = a_i v ... v a_k for the first i with
// e /\ b_i not under (e /\ a_i) v (e /\ b_{i+1}).
std::pair<int, int> und_extract_pair(const Quantale& Q, int unit,
                                     const std::vector<int>& subset);

// The two-point suspension of a finite group: adjoin bottom and top to the
// discrete group, multiply group elements by the group law, top absorbs
// everything except bottom.  Validates the Cayley table first (throws
// not_a_group).
Quantale group_quantale(const std::vector<std::vector<int>>& cayley);

struct Nucleus {
  std::vector<int> map;  // element -> element, size n
};

// Monotone, inflationary, idempotent, and lax-multiplicative
// (c(x)*c(y) <= c(x*y)).  Throws not_a_nucleus with a witness.
void validate_nucleus(const Quantale& Q, const Nucleus& c);

// Quantale on the fixed points: joins are c(join), product is c(x*y).
// Returns the quotient plus the fixed-point indices in the original carrier.
std::pair<Quantale, std::vector<int>> quotient_by_nucleus(const Quantale& Q,
                                                          const Nucleus& c);

// First order-isomorphism that also transports the multiplication.
std::optional<Perm> quantale_isomorphic(const Quantale& A, const Quantale& B);

// Induced structure on a multiplication-closed, join-closed subset
// containing bottom.  Throws bad_argument when the subset is not closed.
Quantale restrict_quantale(const Quantale& Q, Mask carrier);

// Canonical encoding shared by isomorphic quantales: canonical lattice bytes
// followed by the minimal relabelled multiplication table.
struct CanonicalContext {
  Perm sigma;                    // relabelling onto the canonical lattice
  std::vector<Perm> transports;  // sigma composed with each automorphism
  std::vector<std::uint8_t> lattice_bytes;
};

CanonicalContext make_canonical_context(const Lattice& L);

std::vector<std::uint8_t> canonical_mul_bytes(const CanonicalContext& ctx,
                                              const std::vector<int>& mul);

std::vector<std::uint8_t> canonical_quantale_bytes(const Quantale& Q);

}  // namespace qwb
