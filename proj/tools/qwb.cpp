// Command line front end: model checking, extensions, enumeration,
// classification, census, pattern scan, group suspensions, nucleus quotients,
// and DOT export.  Machine output is JSON lines on stdout; --human switches
// to readable tables.  Exit codes: 0 success, 1 structural failure, 2 usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwb/enumerate.hpp"
#include "qwb/model_io.hpp"
#include "qwb/patterns.hpp"

using nlohmann::ordered_json;
using namespace qwb;

namespace {

struct Options {
  bool human = false;
  int threads = 1;
};

Lattice load_lattice_arg(const std::string& spec) {
  if (const Lattice* L = builtin_lattice(spec)) return *L;
  return model_lattice(load_model(spec));
}

Model load_any(const std::string& spec) {
  if (const Lattice* L = builtin_lattice(spec)) return *L;
  return load_model(spec);
}

Quantale require_quantale(Model m, const std::string& what) {
  if (auto* Q = std::get_if<Quantale>(&m)) return std::move(*Q);
  throw Error(errc::bad_argument, what + " requires a quantale model");
}

void emit(const Options& opt, const ordered_json& machine,
          const std::string& human) {
  if (opt.human)
    std::cout << human;
  else
    std::cout << machine.dump() << "\n";
}

void write_out(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(errc::parse_error, "cannot write " + out);
  f << text;
}

ordered_json lattice_report(const Lattice& L) {
  DistributivityReport rep = distributivity_report(L);
  ordered_json j;
  j["n"] = L.n;
  j["bottom"] = L.names[L.bottom];
  j["top"] = L.names[L.top];
  ordered_json appr = ordered_json::array();
  for (int a = 0; a < L.n; ++a)
    if (rep.approximable[a]) appr.push_back(L.names[a]);
  j["approximable"] = std::move(appr);
  j["completelyDistributive"] = rep.completely_distributive;
  auto witness = [&](const std::optional<std::array<int, 3>>& w) {
    if (!w) return ordered_json(nullptr);
    return ordered_json(ordered_json::array(
        {L.names[(*w)[0]], L.names[(*w)[1]], L.names[(*w)[2]]}));
  };
  j["nondistWitness"] = witness(rep.nondist_witness);
  j["strictWitness"] = witness(rep.strict_witness);
  ordered_json iso = ordered_json::array();
  for (int x = 0; x < L.n; ++x)
    if (auto info = isolated_info(L, x)) {
      ordered_json o;
      o["element"] = L.names[x];
      o["lower"] = L.names[info->lower];
      o["upper"] = L.names[info->upper];
      iso.push_back(std::move(o));
    }
  j["isolated"] = std::move(iso);
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"finite lattice and quantale workbench"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--human", opt.human, "readable tables instead of JSON lines");
  app.add_option("--threads", opt.threads, "worker count (output-invariant)")
      ->check(CLI::PositiveNumber);

  std::string file, gamma, out, lattice_spec, constraint_text = "none";
  std::string below, above, cayley, nucleus_file;
  int max_n = 7;

  auto* c_check_l = app.add_subcommand("check-lattice", "validate and report");
  c_check_l->add_option("file", file)->required();

  auto* c_check_q = app.add_subcommand("check-quantale", "validate and profile");
  c_check_q->add_option("file", file)->required();

  auto* c_tb = app.add_subcommand("totally-below", "the totally-below relation");
  c_tb->add_option("file", file)->required();
  c_tb->add_option("--below", below);
  c_tb->add_option("--above", above);

  auto* c_ext_l = app.add_subcommand("extend-lattice",
                                     "adjoin an isolated element over gamma");
  c_ext_l->add_option("file", file)->required();
  c_ext_l->add_option("--gamma", gamma)->required();
  c_ext_l->add_option("-o,--out", out);

  auto* c_ext_q = app.add_subcommand("extend-quantale",
                                     "adjoin an isolated unit over gamma");
  c_ext_q->add_option("file", file)->required();
  c_ext_q->add_option("--gamma", gamma)->required();
  c_ext_q->add_option("-o,--out", out);

  auto* c_enum = app.add_subcommand("enumerate",
                                    "quantale structures up to isomorphism");
  c_enum->add_option("--lattice", lattice_spec)->required();
  c_enum->add_option("--constraint", constraint_text);

  auto* c_cls = app.add_subcommand("classify7",
                                   "unitally nondistributive quantales on "
                                   "seven elements");

  auto* c_census = app.add_subcommand("census",
                                      "strict nondistributivity by size");
  c_census->add_option("--max-n", max_n)->required();

  auto* c_scan = app.add_subcommand("scan-patterns",
                                    "find an embedded extension shape");
  c_scan->add_option("file", file)->required();

  auto* c_grp = app.add_subcommand("group-quantale",
                                   "suspend a finite group");
  c_grp->add_option("--cayley", cayley)->required();
  c_grp->add_option("-o,--out", out);

  auto* c_quot = app.add_subcommand("quotient", "divide by a nucleus");
  c_quot->add_option("file", file)->required();
  c_quot->add_option("--nucleus", nucleus_file)->required();
  c_quot->add_option("-o,--out", out);

  auto* c_dot = app.add_subcommand("export-dot", "cover graph in DOT");
  c_dot->add_option("file", file)->required();
  c_dot->add_option("-o,--out", out);

  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
    s->fallthrough();
  CLI11_PARSE(app, argc, argv);

  auto entry_human = [&](const CatalogueEntry& e) {
    std::ostringstream os;
    os << render_mul_table(e.quantale);
    os << "  canonical " << hex(e.canonical);
    if (e.profile.unit)
      os << "  unit " << e.quantale.lattice.names[*e.profile.unit];
    if (!e.profile.commutative) os << "  noncommutative";
    if (e.und) os << "  und";
    os << "\n\n";
    return os.str();
  };

  if (c_check_l->parsed()) {
    Lattice L = load_lattice_arg(file);
    ordered_json j = lattice_report(L);
    std::ostringstream os;
    os << L.n << " elements, bottom " << L.names[L.bottom] << ", top "
       << L.names[L.top] << "\n"
       << "completely distributive: "
       << (j["completelyDistributive"].get<bool>() ? "yes" : "no") << "\n";
    emit(opt, j, os.str());
  } else if (c_check_q->parsed()) {
    Quantale Q = require_quantale(load_any(file), "check-quantale");
    QuantaleProfile p = quantale_profile(Q);
    ordered_json j = ordered_json::parse(profile_json(Q, p));
    std::ostringstream os;
    os << render_mul_table(Q) << profile_json(Q, p) << "\n";
    emit(opt, j, os.str());
  } else if (c_tb->parsed()) {
    Lattice L = model_lattice(load_any(file));
    if (!below.empty() || !above.empty()) {
      int b = L.index_of(below), a = L.index_of(above);
      if (b < 0 || a < 0)
        throw Error(errc::bad_argument, "unknown element name");
      ordered_json j;
      j["below"] = below;
      j["above"] = above;
      j["totallyBelow"] = totally_below(L, b, a);
      emit(opt, j,
           below + (j["totallyBelow"].get<bool>() ? " <| " : " not <| ") +
               above + "\n");
    } else {
      ordered_json rel = ordered_json::array();
      std::ostringstream os;
      for (int b = 0; b < L.n; ++b)
        for (int a = 0; a < L.n; ++a)
          if (totally_below(L, b, a)) {
            rel.push_back(
                ordered_json::array({L.names[b], L.names[a]}));
            os << L.names[b] << " <| " << L.names[a] << "\n";
          }
      ordered_json j;
      j["totallyBelow"] = std::move(rel);
      emit(opt, j, os.str());
    }
  } else if (c_ext_l->parsed()) {
    Lattice L = model_lattice(load_any(file));
    int g = L.index_of(gamma);
    if (g < 0) throw Error(errc::bad_argument, "unknown element " + gamma);
    LatticeExtension ext = extend_lattice(L, g);
    write_out(out, model_to_json(ext.lattice));
  } else if (c_ext_q->parsed()) {
    Quantale Q = require_quantale(load_any(file), "extend-quantale");
    int g = Q.lattice.index_of(gamma);
    if (g < 0) throw Error(errc::bad_argument, "unknown element " + gamma);
    QuantaleExtension ext = extend_quantale(Q, g);
    write_out(out, model_to_json(ext.quantale));
  } else if (c_enum->parsed()) {
    Lattice L = load_lattice_arg(lattice_spec);
    Constraint c = Constraint::parse(constraint_text, L);
    auto entries = enumerate_quantales(L, c, opt.threads);
    std::ostringstream os;
    int noncomm = 0;
    for (const CatalogueEntry& e : entries) {
      if (!e.profile.commutative) ++noncomm;
      if (opt.human)
        os << entry_human(e);
      else
        std::cout << entry_json(e) << "\n";
    }
    ordered_json sum;
    sum["summary"] = true;
    sum["lattice"] = lattice_spec;
    sum["constraint"] = c.describe(L);
    sum["count"] = entries.size();
    sum["nonCommutative"] = noncomm;
    os << entries.size() << " classes, " << noncomm << " noncommutative\n";
    emit(opt, sum, os.str());
  } else if (c_cls->parsed()) {
    ClassifySeven r = classify_seven(opt.threads);
    std::ostringstream os;
    ordered_json per = ordered_json::array();
    for (const auto& part : r.parts) {
      os << "== " << part.lattice_name << " ==\n";
      for (const CatalogueEntry& e : part.entries) {
        if (opt.human) os << entry_human(e);
        if (!opt.human) {
          ordered_json j = ordered_json::parse(entry_json(e));
          j["latticeName"] = part.lattice_name;
          std::cout << j.dump() << "\n";
        }
      }
      ordered_json p;
      p["lattice"] = part.lattice_name;
      p["count"] = part.entries.size();
      per.push_back(std::move(p));
    }
    ordered_json sum;
    sum["summary"] = true;
    sum["total"] = r.total;
    sum["nonCommutative"] = r.non_commutative;
    sum["perLattice"] = std::move(per);
    os << "total " << r.total << ", noncommutative " << r.non_commutative
       << "\n";
    emit(opt, sum, os.str());
  } else if (c_census->parsed()) {
    auto rows = census_strict(max_n);
    std::ostringstream os;
    for (const CensusRow& row : rows) {
      ordered_json j;
      j["n"] = row.n;
      j["lattices"] = row.lattices;
      j["nondistributive"] = row.nondistributive;
      j["strict"] = row.strict;
      os << "n=" << row.n << ": " << row.lattices << " lattices, "
         << row.nondistributive << " nondistributive, " << row.strict
         << " strictly nondistributive\n";
      if (!opt.human) std::cout << j.dump() << "\n";
    }
    emit(opt, ordered_json{{"summary", true}, {"maxN", max_n}}, os.str());
  } else if (c_scan->parsed()) {
    Lattice L = model_lattice(load_any(file));
    auto hit = pattern_scan(L);
    ordered_json j;
    std::ostringstream os;
    if (hit) {
      j["found"] = true;
      j["pattern"] = pattern_name(hit->tag);
      ordered_json subset = ordered_json::array();
      for (int i = 0; i < L.n; ++i)
        if (hit->subset & bit(i)) subset.push_back(L.names[i]);
      j["subset"] = std::move(subset);
      os << pattern_name(hit->tag) << " on {";
      bool first = true;
      for (int i = 0; i < L.n; ++i)
        if (hit->subset & bit(i)) {
          os << (first ? "" : ", ") << L.names[i];
          first = false;
        }
      os << "}\n";
    } else {
      j["found"] = false;
      os << "no embedded extension shape\n";
    }
    emit(opt, j, os.str());
  } else if (c_grp->parsed()) {
    std::vector<std::vector<int>> table;
    if (cayley.rfind("cyclic:", 0) == 0) {
      int k = std::stoi(cayley.substr(7));
      if (k < 1) throw Error(errc::not_a_group, "order must be positive");
      table.assign(k, std::vector<int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) table[i][j] = (i + j) % k;
    } else {
      std::ifstream in(cayley);
      if (!in) throw Error(errc::parse_error, "cannot open " + cayley);
      ordered_json j;
      try {
        j = ordered_json::parse(in);
      } catch (const std::exception& ex) {
        throw Error(errc::parse_error, ex.what());
      }
      for (auto& row : j) table.push_back(row.get<std::vector<int>>());
    }
    Quantale Q = group_quantale(table);
    write_out(out, model_to_json(Q));
  } else if (c_quot->parsed()) {
    Quantale Q = require_quantale(load_any(file), "quotient");
    std::ifstream in(nucleus_file);
    if (!in) throw Error(errc::parse_error, "cannot open " + nucleus_file);
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const std::exception& ex) {
      throw Error(errc::parse_error, ex.what());
    }
    if (!j.contains("map") || !j["map"].is_object())
      throw Error(errc::parse_error, "nucleus file needs a map object");
    Nucleus c;
    c.map.assign(Q.lattice.n, -1);
    for (auto& [k, v] : j["map"].items()) {
      int x = Q.lattice.index_of(k);
      int y = Q.lattice.index_of(v.get<std::string>());
      if (x < 0 || y < 0)
        throw Error(errc::parse_error, "unknown element in nucleus map");
      c.map[x] = y;
    }
    for (int x = 0; x < Q.lattice.n; ++x)
      if (c.map[x] < 0)
        throw Error(errc::parse_error,
                    "nucleus map misses " + Q.lattice.names[x]);
    auto [quot, fixed] = quotient_by_nucleus(Q, c);
    write_out(out, model_to_json(quot));
  } else if (c_dot->parsed()) {
    Lattice L = model_lattice(load_any(file));
    write_out(out, export_dot(L));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    j["witness"] = e.witness();
    std::cout << j.dump() << "\n";
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
