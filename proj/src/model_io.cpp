#include "qwb/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qwb {

using ordered_json = nlohmann::ordered_json;

namespace {

Model model_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(errc::parse_error, "model must be an object");
  if (!j.contains("schema") || j["schema"] != "1")
    throw Error(errc::parse_error, "unsupported or missing schema");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error(errc::parse_error, "missing kind");
  std::string kind = j["kind"];
  if (kind != "lattice" && kind != "quantale")
    throw Error(errc::parse_error, "kind must be lattice or quantale");
  if (!j.contains("names") || !j["names"].is_array())
    throw Error(errc::parse_error, "missing names");
  std::vector<std::string> names;
  for (auto& v : j["names"]) {
    if (!v.is_string()) throw Error(errc::parse_error, "names must be strings");
    names.push_back(v.get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  if (!j.contains("leq") || !j["leq"].is_array() ||
      static_cast<int>(j["leq"].size()) != n)
    throw Error(errc::parse_error, "leq must be an n*n boolean matrix");
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    auto& row = j["leq"][a];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(errc::parse_error, "leq must be an n*n boolean matrix");
    for (int b = 0; b < n; ++b) {
      if (!row[b].is_boolean())
        throw Error(errc::parse_error, "leq entries must be booleans");
      order[a][b] = row[b].get<bool>();
    }
  }
  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw Error(errc::parse_error, "label must be a string");
    label = j["label"].get<std::string>();
  }
  Lattice L = validate_lattice(order, names);
  if (kind == "lattice") return L;

  if (!j.contains("mul") || !j["mul"].is_array() ||
      static_cast<int>(j["mul"].size()) != n)
    throw Error(errc::parse_error, "mul must be an n*n matrix of element names");
  std::vector<int> mul(n * n, -1);
  for (int a = 0; a < n; ++a) {
    auto& row = j["mul"][a];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(errc::parse_error, "mul must be an n*n matrix of element names");
    for (int b = 0; b < n; ++b) {
      if (!row[b].is_string())
        throw Error(errc::parse_error, "mul entries must be element names");
      int v = L.index_of(row[b].get<std::string>());
      if (v < 0)
        throw Error(errc::parse_error,
                    "unknown element in mul: " + row[b].get<std::string>());
      mul[a * n + b] = v;
    }
  }
  return validate_quantale(std::move(L), std::move(mul), std::move(label));
}

ordered_json lattice_to_json_inner(const Lattice& L) {
  ordered_json names = ordered_json::array();
  for (auto& s : L.names) names.push_back(s);
  ordered_json leq = ordered_json::array();
  for (int a = 0; a < L.n; ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < L.n; ++b) row.push_back(L.leq(a, b));
    leq.push_back(std::move(row));
  }
  ordered_json j;
  j["names"] = std::move(names);
  j["leq"] = std::move(leq);
  return j;
}

ordered_json mul_to_json(const Quantale& Q) {
  ordered_json mul = ordered_json::array();
  for (int a = 0; a < Q.lattice.n; ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < Q.lattice.n; ++b)
      row.push_back(Q.lattice.names[Q.at(a, b)]);
    mul.push_back(std::move(row));
  }
  return mul;
}

}  // namespace

Model parse_model(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& ex) {
    throw Error(errc::parse_error, ex.what());
  }
  return model_from_json(j);
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string model_to_json(const Model& m) {
  const Lattice& L = model_lattice(m);
  ordered_json j;
  j["schema"] = "1";
  j["kind"] = std::holds_alternative<Lattice>(m) ? "lattice" : "quantale";
  ordered_json inner = lattice_to_json_inner(L);
  j["names"] = std::move(inner["names"]);
  j["leq"] = std::move(inner["leq"]);
  if (auto* Q = std::get_if<Quantale>(&m)) {
    j["mul"] = mul_to_json(*Q);
    if (Q->label) j["label"] = *Q->label;
  }
  return j.dump(2) + "\n";
}

void save_model(const Model& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::parse_error, "cannot write " + path);
  out << model_to_json(m);
}

const Lattice& model_lattice(const Model& m) {
  if (auto* L = std::get_if<Lattice>(&m)) return *L;
  return std::get<Quantale>(m).lattice;
}

std::string export_dot(const Lattice& L) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (int a = 0; a < L.n; ++a)
    os << "  n" << a << " [label=" << quote(L.names[a]) << "];\n";
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (L.meet_covers(a, b)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_mul_table(const Quantale& Q) {
  const Lattice& L = Q.lattice;
  std::vector<int> elems;
  for (int a = 0; a < L.n; ++a)
    if (a != L.bottom) elems.push_back(a);
  size_t w = 1;
  for (auto& s : L.names) w = std::max(w, s.size());
  auto pad = [&](const std::string& s) {
    return s + std::string(w - s.size() + 1, ' ');
  };
  std::ostringstream os;
  os << pad("*");
  for (int b : elems) os << pad(L.names[b]);
  os << "\n";
  for (int a : elems) {
    os << pad(L.names[a]);
    for (int b : elems) os << pad(L.names[Q.at(a, b)]);
    os << "\n";
  }
  return os.str();
}

std::string hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

namespace {

ordered_json name_list(const Lattice& L, Mask mask) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < L.n; ++i)
    if (mask & bit(i)) arr.push_back(L.names[i]);
  return arr;
}

ordered_json profile_to_json(const Quantale& Q, const QuantaleProfile& p) {
  const Lattice& L = Q.lattice;
  ordered_json j;
  j["unit"] = p.unit ? ordered_json(L.names[*p.unit]) : ordered_json(nullptr);
  j["semiUnital"] = p.semi_unital;
  j["twoSided"] = p.two_sided;
  j["twoSidedElements"] = name_list(L, p.two_sided_elements);
  j["integral"] = p.integral;
  j["commutative"] = p.commutative;
  j["dualizing"] = name_list(L, p.dualizing);
  j["meetDistributiveMul"] = p.meet_distributive_mul;
  return j;
}

}  // namespace

std::string profile_json(const Quantale& Q, const QuantaleProfile& p) {
  return profile_to_json(Q, p).dump();
}

std::string entry_json(const CatalogueEntry& e) {
  const Lattice& L = e.quantale.lattice;
  ordered_json j;
  j["canonical"] = hex(e.canonical);
  j["label"] =
      e.quantale.label ? ordered_json(*e.quantale.label) : ordered_json(nullptr);
  j["lattice"] = lattice_to_json_inner(L);
  j["mul"] = mul_to_json(e.quantale);
  j["profile"] = profile_to_json(e.quantale, e.profile);
  ordered_json flags;
  flags["und"] = e.und.has_value();
  if (e.und) {
    flags["undSubset"] = name_list(L, e.und->subset);
    flags["undPair"] = ordered_json::array(
        {L.names[e.und->pair.first], L.names[e.und->pair.second]});
  }
  if (e.conditions) {
    flags["propA"] = e.conditions->prop_a;
    flags["propAA"] = e.conditions->prop_aa;
    flags["propB"] = e.conditions->prop_b;
  }
  j["flags"] = std::move(flags);
  return j.dump();
}

}  // namespace qwb
