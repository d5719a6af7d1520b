#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "orbitcone/invariants.hpp"

namespace orbitcone::cli {

inline constexpr const char* kEngineVersion = "orbitcone-1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnknown = 2;

struct RunConfig {
  std::string series;       // "A3" .. "D5"
  std::string weight;       // "c1,c2,...", rational entries allowed
  bool json = false;
  int r_max = 0;            // 0 = default Caratheodory bound
  int d_max = 8;
  int q_max = 3;
  std::vector<int> q_set;   // empty = series default
  int threads = 1;
  std::string cache_path;   // empty = no cache
};

RootSystem parse_series(const std::string& text);
Vec parse_weight(const std::string& text, int rank);

// Canonical cache key: series, rank and the normalized weight string.
std::string canonical_key(const RootSystem& rs, const Vec& fund);

// Append-only JSON-lines journal; corrupt lines are skipped with a warning
// on stderr. Hits require identical key, operation and engine version.
class CacheJournal {
 public:
  explicit CacheJournal(std::string path);
  std::optional<nlohmann::json> get(const std::string& key, const std::string& op) const;
  void put(const std::string& key, const std::string& op, const nlohmann::json& payload);

 private:
  std::string path_;
  std::vector<std::pair<std::string, nlohmann::json>> records_;
};

nlohmann::json bound_result_json(const RootSystem& rs, const Vec& fund, const std::string& op,
                                 const BoundResult& res);

int cmd_r0(const RunConfig& cfg);
int cmd_r(const RunConfig& cfg);
int cmd_d1(const RunConfig& cfg);
int cmd_b1(const RunConfig& cfg);
int cmd_scan(const RunConfig& cfg, int max_coeff, const std::string& which);
int cmd_verify_paper(bool json, int su_max_n, bool check_r_tables);

}  // namespace orbitcone::cli
