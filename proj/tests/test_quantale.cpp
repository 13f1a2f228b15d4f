#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "figures.hpp"
#include "oracles.hpp"
#include "qwb/enumerate.hpp"
#include "qwb/patterns.hpp"
#include "qwb/quantale.hpp"
#include "util.hpp"

using namespace qwb;
using testutil::expect_error;
using testutil::make_chain;

namespace {

const Lattice& M3() { return *builtin_lattice("M3"); }
const Lattice& N5() { return *builtin_lattice("N5"); }

std::vector<Quantale> all_m3_tables() {
  std::vector<Quantale> out;
  for (const auto& k : figures::m3_unital()) out.push_back(make_table(M3(), k));
  for (const auto& k : figures::m3_non_unital())
    out.push_back(make_table(M3(), k));
  return out;
}

std::vector<Quantale> all_n5_tables() {
  std::vector<Quantale> out;
  for (const auto& k : figures::n5_unital()) out.push_back(make_table(N5(), k));
  for (const auto& k : figures::n5_semi_unital())
    out.push_back(make_table(N5(), k));
  for (const auto& k : figures::n5_non_semi_unital())
    out.push_back(make_table(N5(), k));
  return out;
}

Quantale table(const Lattice& L, const char* tag, const char* cells) {
  return figures::make_table(L, {tag, cells});
}

}  // namespace

TEST_CASE("every known table validates and absorbs gamma") {
  const auto m3 = all_m3_tables();
  const auto n5 = all_n5_tables();
  CHECK(m3.size() == 12);
  CHECK(n5.size() == 18);
  for (const auto& Q : m3) CHECK(check_extension_conditions(Q, 3).prop_a);
  for (const auto& Q : n5) CHECK(check_extension_conditions(Q, 3).prop_a);
  // pairwise non-isomorphic within each lattice
  for (std::size_t i = 0; i < m3.size(); ++i)
    for (std::size_t j = i + 1; j < m3.size(); ++j)
      CHECK_FALSE(quantale_isomorphic(m3[i], m3[j]).has_value());
  for (std::size_t i = 0; i < n5.size(); ++i)
    for (std::size_t j = i + 1; j < n5.size(); ++j)
      CHECK_FALSE(quantale_isomorphic(n5[i], n5[j]).has_value());
}

TEST_CASE("unital and semi-unital splits of the known tables") {
  int units = 0;
  for (const auto& k : figures::m3_unital()) {
    const auto p = quantale_profile(make_table(M3(), k));
    CHECK(p.unit == 3);
    ++units;
  }
  CHECK(units == 8);
  for (const auto& k : figures::m3_non_unital()) {
    const auto p = quantale_profile(make_table(M3(), k));
    CHECK_FALSE(p.unit.has_value());
    CHECK_FALSE(p.semi_unital);
  }
  for (const auto& k : figures::n5_unital())
    CHECK(quantale_profile(make_table(N5(), k)).unit == 3);
  for (const auto& k : figures::n5_semi_unital()) {
    const auto p = quantale_profile(make_table(N5(), k));
    CHECK_FALSE(p.unit.has_value());
    CHECK(p.semi_unital);
  }
  for (const auto& k : figures::n5_non_semi_unital()) {
    const auto p = quantale_profile(make_table(N5(), k));
    CHECK_FALSE(p.unit.has_value());
    CHECK_FALSE(p.semi_unital);
  }
  // exactly the two opposite pentagon tables are non-commutative
  int noncomm = 0;
  for (const auto& Q : all_n5_tables())
    if (!quantale_profile(Q).commutative) ++noncomm;
  CHECK(noncomm == 2);
  for (const auto& Q : all_m3_tables()) CHECK(quantale_profile(Q).commutative);
}

TEST_CASE("validation rejects broken tables with witnesses") {
  // bumping two products of the aa=alpha bb=beta table up to top first breaks
  // associativity: (alpha*beta)*top = bot while alpha*(beta*top) = alpha
  expect_error([] { table(M3(), "bumped", "aBaaBbbTabgTaTTT"); },
               errc::not_associative, {1, 2, 4});

  // join preservation: only top*top nonzero cannot respect top = alpha v beta
  expect_error([] { table(M3(), "spike", "BBBBBBBBBBBBBBBT"); },
               errc::not_join_preserving, {1, 2, 4});

  // monotone but non-associative magma on a three chain
  expect_error(
      [] {
        validate_quantale(make_chain(3), {0, 0, 0, 0, 0, 0, 0, 1, 1});
      },
      errc::not_associative, {2, 2, 1});

  // right projection preserves binary joins but not the empty one
  expect_error([] { validate_quantale(make_chain(2), {0, 1, 0, 1}); },
               errc::bottom_not_annihilating, {1});

  expect_error([] { validate_quantale(make_chain(2), {0, 0, 0}); },
               errc::bad_argument);
  expect_error([] { validate_quantale(make_chain(2), {0, 0, 0, 7}); },
               errc::bad_argument);
}

TEST_CASE("residuals and the adjunction") {
  const auto cyclic = table(M3(), "cyclic", "bgaTgabTabgTTTTT");
  CHECK(residuals(cyclic, 1, 3) == std::pair<int, int>{2, 2});
  for (const auto& Q : all_m3_tables()) {
    const Lattice& L = Q.lattice;
    for (int a = 0; a < L.n; ++a)
      for (int b = 0; b < L.n; ++b) {
        const auto [right, left] = residuals(Q, a, b);
        for (int c = 0; c < L.n; ++c) {
          CHECK(L.leq(Q.at(a, c), b) == L.leq(c, right));
          CHECK(L.leq(Q.at(c, a), b) == L.leq(c, left));
        }
      }
  }
}

TEST_CASE("profiles of distinguished examples") {
  const auto trivial = table(N5(), "trivial", "BBBBBBBBBBBBBBBB");
  auto p = quantale_profile(trivial);
  CHECK_FALSE(p.unit.has_value());
  CHECK_FALSE(p.semi_unital);
  CHECK(p.two_sided);
  CHECK(p.two_sided_elements == trivial.lattice.all_mask());
  CHECK_FALSE(p.integral);
  CHECK(p.commutative);
  CHECK(p.dualizing == 0);
  CHECK(p.meet_distributive_mul);

  const auto cyclic = table(M3(), "cyclic", "bgaTgabTabgTTTTT");
  p = quantale_profile(cyclic);
  CHECK(p.unit == 3);
  CHECK(p.semi_unital);
  CHECK(p.two_sided_elements == (bit(0) | bit(4)));
  CHECK_FALSE(p.two_sided);
  CHECK_FALSE(p.integral);
  CHECK(p.commutative);
  // every group element of the cyclic table is dualizing
  CHECK(p.dualizing == (bit(1) | bit(2) | bit(3)));

  // the two point Boolean quantale: integral, bottom is dualizing
  const auto two = validate_quantale(make_chain(2), {0, 0, 0, 1});
  p = quantale_profile(two);
  CHECK(p.unit == 1);
  CHECK(p.integral);
  CHECK(p.dualizing == bit(0));
  CHECK(p.meet_distributive_mul);
}

TEST_CASE("extension conditions on the stock examples") {
  const auto trivial_m3 = table(M3(), "trivial", "BBBBBBBBBBBBBBBB");
  auto c = check_extension_conditions(trivial_m3, 3);
  CHECK(c.prop_a);
  CHECK(c.prop_aa);
  CHECK(c.prop_b);
  CHECK(c.b_witness == std::pair<int, int>{1, 2});

  const auto cyclic3 = group_quantale({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  c = check_extension_conditions(cyclic3, 1);
  CHECK(c.prop_a);
  CHECK(c.prop_aa);
  CHECK(c.prop_b);

  // order one group: the three chain has no meet distribution failure
  const auto one = group_quantale({{0}});
  c = check_extension_conditions(one, 1);
  CHECK(c.prop_a);
  CHECK(c.prop_aa);
  CHECK_FALSE(c.prop_b);

  expect_error([&] { check_extension_conditions(trivial_m3, 4); },
               errc::gamma_is_top, {4});

  // unit over gamma on the hexagon satisfies absorption but not the top bound
  const Lattice& l6 = *builtin_lattice("L6");
  const auto entries = enumerate_quantales(l6, Constraint::unital_at(3));
  REQUIRE(!entries.empty());
  for (const auto& entry : entries) {
    REQUIRE(entry.conditions.has_value());
    CHECK(entry.conditions->prop_a);
    CHECK_FALSE(entry.conditions->prop_aa);
  }
  expect_error([&] { extend_quantale(entries.front().quantale, 3); },
               errc::conditions_fail);
}

TEST_CASE("quantale extension by an isolated unit") {
  const auto base = table(M3(), "trivial", "BBBBBBBBBBBBBBBB");
  const auto ext = extend_quantale(base, 3);
  const Quantale& Q = ext.quantale;
  CHECK(Q.lattice.n == 7);
  CHECK(ext.unit == 5);
  CHECK(ext.new_top == 6);

  // the defining rule, written out
  for (int x = 0; x < 7; ++x) {
    CHECK(Q.at(5, x) == x);
    CHECK(Q.at(x, 5) == x);
  }
  CHECK(Q.at(6, 6) == 6);
  for (int a = 0; a < 5; ++a) {
    CHECK(Q.at(6, a) == Q.lattice.join(base.at(4, a), a));
    CHECK(Q.at(a, 6) == Q.lattice.join(base.at(a, 4), a));
  }

  // restriction to the old carrier gives back the base table
  const auto back = restrict_quantale(Q, bit(0) | bit(1) | bit(2) | bit(3) | bit(4));
  CHECK(back.mul == base.mul);

  const auto p = quantale_profile(Q);
  CHECK(p.unit == 5);
  CHECK_FALSE(p.integral);

  const auto w = unitally_nondistributive(Q);
  REQUIRE(w.has_value());
  CHECK(w->pair == std::pair<int, int>{1, 2});
  CHECK(w->subset == (bit(1) | bit(2)));
  CHECK(oracle::und_subset(Q) == w->subset);
}

TEST_CASE("every known table extends and the result is unitally "
          "nondistributive") {
  auto run = [](const std::vector<Quantale>& tables) {
    for (const Quantale& B : tables) {
      const auto ext = extend_quantale(B, 3);
      const auto w = unitally_nondistributive(ext.quantale);
      REQUIRE(w.has_value());
      CHECK(w->pair == std::pair<int, int>{1, 2});
      const Lattice& L = ext.quantale.lattice;
      const int e = ext.unit;
      CHECK(!L.leq(L.meet(e, L.join(w->pair.first, w->pair.second)),
                   L.join(L.meet(e, w->pair.first), L.meet(e, w->pair.second))));
      CHECK(oracle::und_subset(ext.quantale).has_value());
    }
  };
  run(all_m3_tables());
  run(all_n5_tables());
}

TEST_CASE("unital nondistributivity needs an approximable unit") {
  // gamma is not approximable on the diamond or the pentagon
  for (const auto& k : figures::m3_unital())
    CHECK_FALSE(unitally_nondistributive(make_table(M3(), k)).has_value());
  for (const auto& k : figures::n5_unital())
    CHECK_FALSE(unitally_nondistributive(make_table(N5(), k)).has_value());
  // distributive carriers never produce a witness
  const auto two = validate_quantale(make_chain(2), {0, 0, 0, 1});
  CHECK_FALSE(unitally_nondistributive(two).has_value());
  // order one group extension: unit approximable, but the carrier is a chain
  const auto ext = extend_quantale(group_quantale({{0}}), 1);
  CHECK_FALSE(unitally_nondistributive(ext.quantale).has_value());
  CHECK(oracle::und_subset(ext.quantale) == std::nullopt);
  // oracle agreement across all known tables
  for (const auto& Q : all_m3_tables())
    CHECK(oracle::und_subset(Q).has_value() ==
          unitally_nondistributive(Q).has_value());
  for (const auto& Q : all_n5_tables())
    CHECK(oracle::und_subset(Q).has_value() ==
          unitally_nondistributive(Q).has_value());
}

TEST_CASE("absorption plus a unit pins gamma to an idempotent") {
  for (const Lattice* L : {&M3(), &N5()})
    for (const auto& entry : enumerate_quantales(*L, Constraint::prop_a(3))) {
      const bool unital = quantale_profile(entry.quantale).unit.has_value();
      CHECK(unital == (entry.quantale.at(3, 3) == 3));
    }
}

TEST_CASE("group suspensions") {
  const auto one = group_quantale({{0}});
  CHECK(one.lattice.n == 3);
  CHECK(lattice_isomorphic(one.lattice, make_chain(3)).has_value());
  CHECK(quantale_profile(one).unit == 1);
  CHECK(one.label == std::string("group of order 1"));

  const auto z2 = group_quantale({{0, 1}, {1, 0}});
  CHECK(z2.lattice.n == 4);
  CHECK(z2.lattice.names[2] == "g1");
  CHECK(z2.at(2, 2) == 1);  // g1*g1 = e
  const auto p2 = quantale_profile(z2);
  CHECK(p2.unit == 1);
  CHECK(p2.dualizing == (bit(1) | bit(2)));

  const auto klein = group_quantale({{0, 1, 2, 3},
                                     {1, 0, 3, 2},
                                     {2, 3, 0, 1},
                                     {3, 2, 1, 0}});
  CHECK(klein.lattice.n == 6);
  CHECK(quantale_profile(klein).unit == 1);
  // top absorbs group elements on both sides
  CHECK(klein.at(klein.lattice.top, 2) == klein.lattice.top);

  expect_error([] { group_quantale({}); }, errc::not_a_group);
  expect_error([] { group_quantale({{0, 1}, {1}}); }, errc::not_a_group);
  expect_error([] { group_quantale({{0, 9}, {1, 0}}); }, errc::not_a_group);
  expect_error([] { group_quantale({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}); },
               errc::not_a_group, {1, 1, 1});
  expect_error([] { group_quantale({{0, 0}, {0, 0}}); }, errc::not_a_group);
  expect_error([] { group_quantale({{0, 1}, {1, 1}}); }, errc::not_a_group,
               {1});
}

TEST_CASE("nuclei and quotients") {
  const auto trivial_n5 = table(N5(), "trivial", "BBBBBBBBBBBBBBBB");
  expect_error([&] { validate_nucleus(trivial_n5, {{0, 4, 2, 3, 4}}); },
               errc::not_a_nucleus, {1, 3});  // not monotone on alpha <= gamma

  const auto trivial_m3 = table(M3(), "trivial", "BBBBBBBBBBBBBBBB");
  expect_error([&] { validate_nucleus(trivial_m3, {{0, 3, 2, 3, 4}}); },
               errc::not_a_nucleus, {1});  // not inflationary

  const auto chain4 = validate_quantale(
      make_chain(4), std::vector<int>(16, 0));
  expect_error([&] { validate_nucleus(chain4, {{0, 2, 3, 3}}); },
               errc::not_a_nucleus, {1});  // not idempotent

  const auto cyclic3 = group_quantale({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  expect_error([&] { validate_nucleus(cyclic3, {{0, 1, 4, 4, 4}}); },
               errc::not_a_nucleus, {2, 3});  // g1*g2 lands under e
  expect_error([&] { validate_nucleus(cyclic3, {{0, 1, 2, 3}}); },
               errc::not_a_nucleus);

  // collapsing everything above bottom is always a nucleus
  const auto [small, fixed] =
      quotient_by_nucleus(cyclic3, {{0, 4, 4, 4, 4}});
  CHECK(small.lattice.n == 2);
  CHECK(small.mul == std::vector<int>{0, 0, 0, 1});
  CHECK(fixed == std::vector<int>{0, 4});
  CHECK(small.label == cyclic3.label);

  // the identity nucleus changes nothing
  const auto [same, all] = quotient_by_nucleus(cyclic3, {{0, 1, 2, 3, 4}});
  CHECK(same.mul == cyclic3.mul);
  CHECK(all.size() == 5);

  // closing one diamond atom upward leaves a square
  const auto [square, sq_fixed] =
      quotient_by_nucleus(trivial_m3, {{0, 4, 2, 3, 4}});
  CHECK(square.lattice.n == 4);
  CHECK(sq_fixed == std::vector<int>{0, 2, 3, 4});
  CHECK(std::all_of(square.mul.begin(), square.mul.end(),
                    [](int v) { return v == 0; }));
}

TEST_CASE("opposite pentagon tables") {
  const auto left = table(N5(), "gg=alpha gb=beta bg=bot", "abaTBBBBabaTabaT");
  const auto right = table(N5(), "gg=alpha bg=beta gb=bot", "aBaabBbbaBaaTBTT");
  CHECK_FALSE(quantale_profile(left).commutative);
  CHECK_FALSE(quantale_profile(right).commutative);
  // transposing one yields exactly the other
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK(left.at(a, b) == right.at(b, a));
  CHECK_FALSE(quantale_isomorphic(left, right).has_value());
  CHECK(quantale_isomorphic(left, left).has_value());
}

TEST_CASE("isomorphism respects relabelling") {
  const auto cyclic = table(M3(), "cyclic", "bgaTgabTabgTTTTT");
  // swap the two free atoms: an automorphism of the diamond
  const Perm swap = {0, 2, 1, 3, 4};
  const Lattice relabelled = relabel(M3(), swap);
  std::vector<int> mul(25);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      mul[swap[a] * 5 + swap[b]] = swap[cyclic.at(a, b)];
  const auto twisted = validate_quantale(relabelled, std::move(mul));
  CHECK(quantale_isomorphic(cyclic, twisted).has_value());
  CHECK(canonical_quantale_bytes(cyclic) == canonical_quantale_bytes(twisted));

  const auto a22 = table(M3(), "aa=alpha bb=gamma", "aaaaagbTabgTaTTT");
  const auto a23 = table(M3(), "aa=alpha bb=top", "aaaaaTbTabgTaTTT");
  CHECK_FALSE(quantale_isomorphic(a22, a23).has_value());

  std::set<std::vector<std::uint8_t>> keys;
  for (const auto& Q : all_m3_tables())
    CHECK(keys.insert(canonical_quantale_bytes(Q)).second);
  for (const auto& Q : all_n5_tables())
    CHECK(keys.insert(canonical_quantale_bytes(Q)).second);
}

TEST_CASE("restriction to closed subsets") {
  const auto cyclic3 = group_quantale({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const auto sub = restrict_quantale(cyclic3, bit(0) | bit(1) | bit(4));
  CHECK(sub.lattice.n == 3);
  CHECK(quantale_profile(sub).unit == 1);
  CHECK(lattice_isomorphic(sub.lattice, make_chain(3)).has_value());

  expect_error([&] { restrict_quantale(cyclic3, bit(1) | bit(4)); },
               errc::bad_argument);
  expect_error([&] { restrict_quantale(cyclic3, bit(0) | bit(2)); },
               errc::bad_argument, {2, 2});
}
