#include <fstream>
#include <nlohmann/json.hpp>
#include <limits>

#include "tropmc/errors.hpp"
#include "tropmc/rational.hpp"
#include "tropmc/tables.hpp"

namespace tropmc {

namespace {

constexpr int kFormatVersion = 1;

// NaN marks singular cells; JSON has no NaN, so it is written as null.
nlohmann::json grid_to_json(const std::vector<std::vector<double>>& grid) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : grid) {
    nlohmann::json r = nlohmann::json::array();
    for (double x : row) {
      if (std::isnan(x))
        r.push_back(nullptr);
      else
        r.push_back(x);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<double>> grid_from_json(const nlohmann::json& doc, const char* name) {
  if (!doc.contains(name) || !doc[name].is_array())
    throw FormatError(std::string("table file lacks grid '") + name + "'");
  std::vector<std::vector<double>> grid;
  for (const auto& row : doc[name]) {
    if (!row.is_array()) throw FormatError(std::string("grid '") + name + "' has a non-array row");
    std::vector<double> r;
    r.reserve(row.size());
    for (const auto& x : row) {
      if (x.is_null())
        r.push_back(std::numeric_limits<double>::quiet_NaN());
      else if (x.is_number())
        r.push_back(x.get<double>());
      else
        throw FormatError(std::string("grid '") + name + "' holds a non-numeric entry");
    }
    grid.push_back(std::move(r));
  }
  return grid;
}

}  // namespace

void save_tables(const CoefficientTables& tables, const std::string& path) {
  const TableSpec& spec = tables.spec();
  nlohmann::json doc;
  doc["format_version"] = kFormatVersion;
  doc["k"] = spec.k;
  doc["dimension"] = format_double(spec.dimension);
  doc["mode"] = to_string(spec.mode);
  doc["l_max"] = spec.l_max;
  doc["n_max"] = spec.n_max;
  doc["z"] = grid_to_json(tables.z_rows());
  doc["b"] = grid_to_json(tables.b_rows());
  doc["z_top"] = grid_to_json(tables.z_top_rows());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << doc.dump() << '\n';
  if (!out) throw FormatError("failed writing '" + path + "'");
}

CoefficientTables load_tables(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open table file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("table file '" + path + "' is not valid: " + e.what());
  }
  try {
    if (doc.at("format_version").get<int>() != kFormatVersion)
      throw FormatError("unsupported table format version");
    TableSpec spec;
    spec.k = doc.at("k").get<int>();
    spec.dimension = parse_double(doc.at("dimension").get<std::string>());
    spec.mode = parse_mode(doc.at("mode").get<std::string>());
    spec.l_max = doc.at("l_max").get<int>();
    spec.n_max = doc.at("n_max").get<int>();
    return CoefficientTables::from_grids(spec, grid_from_json(doc, "z"), grid_from_json(doc, "b"),
                                         grid_from_json(doc, "z_top"));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("table file '" + path + "' has a bad header: " + e.what());
  } catch (const ContractError& e) {
    throw FormatError("table file '" + path + "' has bad parameters: " + e.what());
  }
}

CoefficientTables load_tables(const std::string& path, const TableSpec& expected) {
  CoefficientTables t = load_tables(path);
  const TableSpec& got = t.spec();
  if (got.k != expected.k) throw FormatError("table file is for k=" + std::to_string(got.k));
  if (got.dimension != expected.dimension) throw FormatError("table file is for another dimension");
  if (got.mode != expected.mode) throw FormatError("table file is for " + to_string(got.mode) + " mode");
  if (got.l_max < expected.l_max || got.n_max < expected.n_max)
    throw FormatError("table file does not cover the requested range");
  return t;
}

}  // namespace tropmc
