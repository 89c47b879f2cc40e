#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gluings/bigint.hpp"

namespace gluings {

// One table entry. For the eps-tilde family N is the total arc count and M
// the face-1 arc count; elsewhere N counts edges and M stays empty.
struct TableRow {
  std::string family;
  int g = 0;
  int N = 0;
  int K = 1;
  std::optional<int> M;
  BigInt value;

  bool operator==(const TableRow& o) const = default;
};

// CSV with header family,g,N,K,M,value; M left empty when inapplicable.
std::string table_csv(const std::vector<TableRow>& rows);
// JSON mirror of the CSV: values as decimal strings, M null when absent.
std::string table_json(const std::vector<TableRow>& rows);
std::string table_text(const std::vector<TableRow>& rows);

// JSON-file cache keyed by family and parameter block. An empty directory
// path disables caching.
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  std::optional<std::vector<TableRow>> load(const std::string& key) const;
  // provenance: brute_force, formula or recurrence
  void store(const std::string& key, const std::vector<TableRow>& rows,
             const std::string& provenance = {}) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace gluings
