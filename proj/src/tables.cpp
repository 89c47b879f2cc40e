#include "gluings/tables.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gluings {

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "family,g,N,K,M,value\n";
  for (const TableRow& r : rows) {
    out << r.family << ',' << r.g << ',' << r.N << ',' << r.K << ',';
    if (r.M) out << *r.M;
    out << ',' << to_decimal(r.value) << '\n';
  }
  return out.str();
}

namespace {

nlohmann::json rows_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TableRow& r : rows) {
    nlohmann::json jr;
    jr["family"] = r.family;
    jr["g"] = r.g;
    jr["N"] = r.N;
    jr["K"] = r.K;
    if (r.M)
      jr["M"] = *r.M;
    else
      jr["M"] = nullptr;
    jr["value"] = to_decimal(r.value);
    arr.push_back(std::move(jr));
  }
  return arr;
}

std::optional<std::vector<TableRow>> rows_from_json(const nlohmann::json& arr) {
  std::vector<TableRow> rows;
  for (const auto& jr : arr) {
    TableRow r;
    r.family = jr.at("family").get<std::string>();
    r.g = jr.at("g").get<int>();
    r.N = jr.at("N").get<int>();
    r.K = jr.at("K").get<int>();
    if (!jr.at("M").is_null()) r.M = jr.at("M").get<int>();
    r.value = BigInt(jr.at("value").get<std::string>());
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string table_json(const std::vector<TableRow>& rows) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["rows"] = rows_to_json(rows);
  return j.dump(2);
}

std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  for (const TableRow& r : rows) {
    out << r.family << " g=" << r.g << " N=" << r.N << " K=" << r.K;
    if (r.M) out << " M=" << *r.M;
    out << " value=" << to_decimal(r.value) << '\n';
  }
  return out.str();
}

std::optional<std::vector<TableRow>> CacheStore::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(dir_ / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != 1) return std::nullopt;
    return rows_from_json(j.at("rows"));
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void CacheStore::store(const std::string& key, const std::vector<TableRow>& rows,
                       const std::string& provenance) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  nlohmann::json j;
  j["schema_version"] = 1;
  j["key"] = key;
  if (!provenance.empty()) j["provenance"] = provenance;
  j["rows"] = rows_to_json(rows);
  std::ofstream out(dir_ / (key + ".json"));
  out << j.dump(2) << '\n';
}

}  // namespace gluings
