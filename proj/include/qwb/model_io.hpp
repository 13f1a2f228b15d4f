#pragma once

#include <string>
#include <variant>

#include "qwb/enumerate.hpp"
#include "qwb/quantale.hpp"

namespace qwb {

using Model = std::variant<Lattice, Quantale>;

// Schema "1": { schema, kind: "lattice"|"quantale", names, leq (row-major
// booleans), mul (row-major element names, quantales only), label? }.
// Saving then loading is the identity, and saving a loaded file reproduces
// it byte for byte once keys are in canonical order.
Model load_model(const std::string& path);
Model parse_model(const std::string& text);
std::string model_to_json(const Model& m);
void save_model(const Model& m, const std::string& path);

const Lattice& model_lattice(const Model& m);

// Cover graph, bottom drawn at the bottom (rankdir=BT), nodes and edges in
// index order.
std::string export_dot(const Lattice& L);

// Multiplication grid in the classification layout: header row *, then the
// non-bottom elements in index order.
std::string render_mul_table(const Quantale& Q);

std::string hex(const std::vector<std::uint8_t>& bytes);

std::string profile_json(const Quantale& Q, const QuantaleProfile& p);
std::string entry_json(const CatalogueEntry& e);

}  // namespace qwb
