#include "jordanpers/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace jordanpers {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw SchemaError(where + ": not an integer: '" + s + "'");
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("JSON parse error: ") + e.what());
  }
}

const json& field(const json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError("missing field '" + name + "'");
  return *it;
}

Poset parse_poset(const json& j) {
  if (!j.is_object()) throw SchemaError("poset: expected an object");
  const std::string type = field(j, "type").get<std::string>();
  if (type == "grid") {
    const auto shape = field(j, "shape").get<std::vector<int>>();
    if (shape.empty()) throw SchemaError("poset.shape: must be nonempty");
    if (j.contains("lo")) {
      const auto lo = j["lo"].get<std::vector<int>>();
      if (lo.size() != shape.size())
        throw SchemaError("poset.lo: dimension does not match shape");
      return Poset::make_grid_window(lo, shape);
    }
    return Poset::make_grid(shape);
  }
  if (type == "zigzag") {
    const int n = field(j, "n").get<int>();
    const std::string orient = field(j, "orientation").get<std::string>();
    try {
      return Poset::make_zigzag(n, orient);
    } catch (const InvalidPoset& e) {
      throw SchemaError(std::string("poset: ") + e.what());
    }
  }
  if (type == "poset") {
    const auto elements = field(j, "elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covering;
    for (const auto& pair : field(j, "covering")) {
      if (!pair.is_array() || pair.size() != 2)
        throw SchemaError("poset.covering: entries must be [a, b] pairs");
      covering.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
    try {
      return Poset::make_general(elements, covering);
    } catch (const Error& e) {
      throw SchemaError(std::string("poset: ") + e.what());
    }
  }
  throw SchemaError("poset.type: unknown type '" + type + "'");
}

FieldMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols,
                         std::uint64_t p, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
  if (j.size() != rows && !(rows == 0 && j.empty()))
    throw SchemaError(where + ": expected " + std::to_string(rows) + " rows, got " +
                      std::to_string(j.size()));
  std::vector<std::vector<long long>> data;
  data.reserve(j.size());
  for (const auto& row : j) {
    if (!row.is_array()) throw SchemaError(where + ": rows must be arrays");
    if (row.size() != cols)
      throw SchemaError(where + ": expected " + std::to_string(cols) +
                        " columns, got " + std::to_string(row.size()));
    std::vector<long long> r;
    r.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw SchemaError(where + ": entries must be integers");
      r.push_back(v.get<long long>());
    }
    data.push_back(std::move(r));
  }
  return FieldMatrix::from_rows(data, cols, p);
}

json matrix_to_json(const FieldMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Point>> parse_slice_array(const json& j, const Poset& poset) {
  if (!j.is_array()) throw SchemaError("slices: expected an array of slices");
  std::vector<std::vector<Point>> slices;
  for (const auto& s : j) {
    if (!s.is_array()) throw SchemaError("slices: each slice must be an array of point keys");
    std::vector<Point> slice;
    for (const auto& k : s) slice.push_back(parse_point_key(k.get<std::string>(), poset));
    slices.push_back(std::move(slice));
  }
  return slices;
}

json point_json(const Point& p) {
  json a = json::array();
  for (int c : p) a.push_back(c);
  return a;
}

json extnat_json(ExtNat v) {
  if (v.is_infinite()) return "inf";
  return v.finite();
}

json witness_json(const std::optional<ErosionWitness>& w) {
  if (!w) return nullptr;
  json j;
  j["x"] = point_json(w->x);
  j["y"] = point_json(w->y);
  j["epsilon"] = w->epsilon;
  j["violated"] = w->second_eroded ? "G_eroded_exceeds_F" : "F_eroded_exceeds_G";
  return j;
}

}  // namespace

std::string point_key(const Point& p, const Poset& poset) {
  if (poset.kind() == Poset::Kind::general) return poset.label(p.at(0));
  return point_to_string(p);
}

Point parse_point_key(const std::string& key, const Poset& poset) {
  switch (poset.kind()) {
    case Poset::Kind::grid: {
      std::vector<int> coords;
      std::stringstream ss(key);
      std::string tok;
      while (std::getline(ss, tok, ','))
        coords.push_back(parse_int(trim(tok), "point key '" + key + "'"));
      if (static_cast<int>(coords.size()) != poset.dim())
        throw SchemaError("point key '" + key + "': expected " +
                          std::to_string(poset.dim()) + " coordinates");
      return coords;
    }
    case Poset::Kind::zigzag: {
      const int v = parse_int(trim(key), "point key '" + key + "'");
      if (v < 1 || v > poset.zigzag_n())
        throw SchemaError("point key '" + key + "': vertex out of range 1.." +
                          std::to_string(poset.zigzag_n()));
      return Point{v};
    }
    case Poset::Kind::general: {
      const auto idx = poset.index_of_label(trim(key));
      if (!idx) throw SchemaError("point key '" + key + "': unknown element");
      return Point{*idx};
    }
  }
  throw SchemaError("unreachable");
}

ParsedInput parse_module_text(const std::string& text,
                              std::optional<std::uint64_t> prime_override) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("module file: expected a JSON object");

  std::uint64_t prime = kDefaultPrime;
  if (j.contains("prime")) {
    if (!j["prime"].is_number_unsigned() && !j["prime"].is_number_integer())
      throw SchemaError("prime: expected an integer");
    const long long p = j["prime"].get<long long>();
    if (p < 2) throw SchemaError("prime: must be >= 2");
    prime = static_cast<std::uint64_t>(p);
  }
  if (prime_override) prime = *prime_override;
  try {
    check_prime(prime);
  } catch (const InvalidPrime& e) {
    throw SchemaError(std::string("prime: ") + e.what());
  }

  const Poset poset = parse_poset(field(j, "poset"));

  std::vector<int> dims(poset.size(), 0);
  if (j.contains("dims")) {
    if (!j["dims"].is_object()) throw SchemaError("dims: expected an object");
    for (const auto& [key, v] : j["dims"].items()) {
      const Point pt = parse_point_key(key, poset);
      const auto idx = poset.index(pt);
      if (!idx) throw SchemaError("dims['" + key + "']: point outside the window");
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw SchemaError("dims['" + key + "']: expected a nonnegative integer");
      dims[*idx] = v.get<int>();
    }
  }

  const auto& arrows = poset.hasse_arrows();
  std::map<std::pair<int, int>, std::size_t> arrow_idx;
  for (std::size_t k = 0; k < arrows.size(); ++k) arrow_idx[arrows[k]] = k;

  std::vector<FieldMatrix> maps;
  maps.reserve(arrows.size());
  for (const auto& [s, t] : arrows)
    maps.push_back(FieldMatrix(dims[t], dims[s], prime));

  if (j.contains("maps")) {
    if (!j["maps"].is_object()) throw SchemaError("maps: expected an object");
    for (const auto& [key, v] : j["maps"].items()) {
      const auto sep = key.find("->");
      if (sep == std::string::npos)
        throw SchemaError("maps['" + key + "']: key must look like 'src->dst'");
      const Point src = parse_point_key(trim(key.substr(0, sep)), poset);
      const Point dst = parse_point_key(trim(key.substr(sep + 2)), poset);
      const auto si = poset.index(src), ti = poset.index(dst);
      if (!si || !ti)
        throw SchemaError("maps['" + key + "']: endpoint outside the window");
      auto it = arrow_idx.find({*si, *ti});
      if (it == arrow_idx.end())
        throw SchemaError("maps['" + key + "']: not a Hasse arrow of the poset");
      maps[it->second] = parse_matrix(v, dims[*ti], dims[*si], prime,
                                      "maps['" + key + "']");
    }
  }

  ParsedInput out{PersModule(poset, prime, std::move(dims), std::move(maps)),
                  std::nullopt};
  if (j.contains("slices"))
    out.slices = SliceSequence(parse_slice_array(j["slices"], out.module.poset()));
  return out;
}

std::string module_to_json_text(const PersModule& m, const SliceSequence* slices,
                                int indent) {
  const Poset& p = m.poset();
  json j;
  j["prime"] = m.prime();
  switch (p.kind()) {
    case Poset::Kind::grid: {
      j["poset"] = {{"type", "grid"}, {"shape", p.shape()}};
      bool origin = true;
      for (int c : p.lo()) origin = origin && c == 0;
      if (!origin) j["poset"]["lo"] = p.lo();
      break;
    }
    case Poset::Kind::zigzag:
      j["poset"] = {{"type", "zigzag"}, {"n", p.zigzag_n()},
                    {"orientation", p.orientation()}};
      break;
    case Poset::Kind::general: {
      json elements = json::array();
      for (int i = 0; i < p.size(); ++i) elements.push_back(p.label(i));
      json covering = json::array();
      for (const auto& [s, t] : p.hasse_arrows())
        covering.push_back(json::array({p.label(s), p.label(t)}));
      j["poset"] = {{"type", "poset"}, {"elements", elements}, {"covering", covering}};
      break;
    }
  }
  json dims = json::object();
  for (int i = 0; i < p.size(); ++i)
    if (m.dim_idx(i) > 0) dims[point_key(p.point(i), p)] = m.dim_idx(i);
  j["dims"] = dims;
  json maps = json::object();
  const auto& arrows = p.hasse_arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& f = m.arrow_map(k);
    if (f.is_zero()) continue;
    const std::string key = point_key(p.point(arrows[k].first), p) + "->" +
                            point_key(p.point(arrows[k].second), p);
    maps[key] = matrix_to_json(f);
  }
  j["maps"] = maps;
  if (slices) {
    json sl = json::array();
    for (const auto& s : slices->all()) {
      json one = json::array();
      for (const auto& pt : s) one.push_back(point_key(pt, p));
      sl.push_back(std::move(one));
    }
    j["slices"] = sl;
  }
  return j.dump(indent);
}

SliceSequence parse_slices_text(const std::string& text, const Poset& poset) {
  const json j = parse_json(text);
  if (j.is_object() && j.contains("slices"))
    return SliceSequence(parse_slice_array(j["slices"], poset));
  return SliceSequence(parse_slice_array(j, poset));
}

InterleavingCertificate parse_certificate_text(const std::string& text,
                                               const PersModule& m,
                                               const PersModule& n) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("certificate: expected a JSON object");
  const int eps = field(j, "epsilon").get<int>();
  if (eps < 0) throw SchemaError("certificate.epsilon: must be >= 0");
  if (!m.poset().is_grid() || !n.poset().is_grid())
    throw SchemaError("certificate: modules must be grid-indexed");
  const Point evec(m.poset().dim(), eps);

  InterleavingCertificate cert;
  cert.epsilon = eps;
  cert.phi = ModuleHom{m, shift(n, evec), {}};
  cert.psi = ModuleHom{n, shift(m, evec), {}};
  auto load = [&](const char* name, ModuleHom& hom) {
    if (!j.contains(name)) return;
    if (!j[name].is_object())
      throw SchemaError(std::string("certificate.") + name + ": expected an object");
    for (const auto& [key, v] : j[name].items()) {
      const Point x = parse_point_key(key, hom.source.poset());
      hom.components.emplace(
          x, parse_matrix(v, hom.target.dim_at(x), hom.source.dim_at(x), m.prime(),
                          std::string("certificate.") + name + "['" + key + "']"));
    }
  };
  load("phi", cert.phi);
  load("psi", cert.psi);
  return cert;
}

std::string jordan_type_to_json(const JordanType& jt, int indent) {
  json j;
  j["jordan_type"] = jt.counts;
  j["total_dim"] = jt.total_dim();
  return j.dump(indent);
}

std::string multirank_to_json(const MultirankVector& r, int indent) {
  json entries = json::array();
  for (const auto& [ij, v] : r.values)
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"value", v}});
  json j;
  j["n"] = r.n;
  j["entries"] = entries;
  j["flat"] = r.flatten();
  return j.dump(indent);
}

std::string barcode_to_json(const Barcode& b, int indent) {
  json bars = json::array();
  for (const auto& [ij, mult] : b.multiplicities)
    bars.push_back({{"i", ij.first}, {"j", ij.second}, {"multiplicity", mult}});
  return bars.dump(indent);
}

std::string filtered_rank_to_json(const std::vector<RankInvariantTable>& tables,
                                  const Poset& poset, int indent) {
  (void)poset;
  json degrees = json::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    json entries = json::array();
    for (const auto& [pair, v] : tables[i].entries())
      entries.push_back(
          {{"x", point_json(pair.first)}, {"y", point_json(pair.second)}, {"value", v}});
    degrees.push_back({{"degree", i}, {"entries", entries}});
  }
  json j;
  j["degrees"] = degrees;
  j["incomparable_value"] = "inf";
  return j.dump(indent);
}

std::string erosion_report_to_json(const std::vector<DegreeErosion>& profile,
                                   ExtNat total, int indent) {
  json per = json::array();
  for (const auto& de : profile)
    per.push_back({{"degree", de.degree},
                   {"value", extnat_json(de.result.value)},
                   {"witness", witness_json(de.result.witness)}});
  json j;
  j["d_E"] = extnat_json(total);
  j["per_degree"] = per;
  return j.dump(indent);
}

std::string stability_report_to_json(const StabilityReport& rep, int indent) {
  json witnesses = json::array();
  for (const auto& de : rep.degree_erosions)
    witnesses.push_back({{"degree", de.degree},
                         {"value", extnat_json(de.result.value)},
                         {"witness", witness_json(de.result.witness)}});
  json j;
  j["d_L"] = rep.d_l;
  j["d_E"] = extnat_json(rep.d_e);
  j["epsilon"] = rep.epsilon;
  j["chain_ok"] = rep.chain_ok;
  j["witnesses"] = witnesses;
  return j.dump(indent);
}

std::string validation_report_to_json(const ValidationReport& rep,
                                      const std::vector<std::string>& warnings,
                                      int indent) {
  json j;
  j["ok"] = rep.ok;
  if (!rep.ok) j["violation"] = rep.describe();
  j["warnings"] = warnings;
  return j.dump(indent);
}

}  // namespace jordanpers
