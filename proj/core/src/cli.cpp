#include "orbitcone/cli.hpp"

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace orbitcone::cli {

using nlohmann::json;

RootSystem parse_series(const std::string& text) {
  if (text.size() < 2) throw ConfigError("series syntax is like 'A3' or 'D5': got '" + text + "'");
  Series s = series_from_letter(text[0]);
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(text.substr(1), &pos);
    if (pos + 1 != text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ConfigError("bad rank in series '" + text + "'");
  }
  return RootSystem::build(s, rank);
}

Vec parse_weight(const std::string& text, int rank) {
  Vec fund;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) fund.push_back(parse_rational(part));
  if (static_cast<int>(fund.size()) != rank)
    throw ConfigError("weight has " + std::to_string(fund.size()) + " coordinates, expected " +
                      std::to_string(rank));
  for (const auto& c : fund)
    if (c < 0) throw ConfigError("weight must be dominant: all coordinates >= 0");
  return fund;
}

std::string canonical_key(const RootSystem& rs, const Vec& fund) {
  std::string key = rs.name() + ":";
  for (size_t i = 0; i < fund.size(); ++i) {
    Rat c = fund[i];
    c.canonicalize();
    key += (i ? "," : "") + rat_str(c);
  }
  return key;
}

CacheJournal::CacheJournal(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.contains("key") || !rec.contains("op") ||
        !rec.contains("engine") || !rec.contains("payload")) {
      std::cerr << "warning: skipping corrupt cache line\n";
      continue;
    }
    if (rec["engine"] != kEngineVersion) continue;
    records_.emplace_back(rec["key"].get<std::string>() + "\x1f" + rec["op"].get<std::string>(),
                          rec["payload"]);
  }
}

std::optional<json> CacheJournal::get(const std::string& key, const std::string& op) const {
  for (auto it = records_.rbegin(); it != records_.rend(); ++it)
    if (it->first == key + "\x1f" + op) return std::optional<json>(it->second);
  return std::nullopt;
}

void CacheJournal::put(const std::string& key, const std::string& op, const json& payload) {
  if (get(key, op) == payload) return;  // idempotent re-put
  std::ofstream out(path_, std::ios::app);
  if (!out) throw ConfigError("cache path is not writable: " + path_);
  json rec{{"key", key}, {"op", op}, {"engine", kEngineVersion}, {"payload", payload}};
  out << rec.dump() << "\n";
  records_.emplace_back(key + "\x1f" + op, payload);
}

namespace {

json vec_json(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rat_str(x));
  return arr;
}

json input_json(const RootSystem& rs, const Vec& fund) {
  return json{{"series", std::string(1, series_letter(rs.series()))},
              {"rank", rs.rank()},
              {"weight", vec_json(fund)}};
}

int exit_code_for(const BoundResult& res) {
  if (!res.value || res.status == BoundStatus::UpperBoundOnly) return kExitUnknown;
  return kExitOk;
}

void print_bound(const json& payload) {
  std::cout << payload["operation"].get<std::string>() << "("
            << payload["input"]["series"].get<std::string>()
            << payload["input"]["rank"].get<int>() << ", [";
  const auto& w = payload["input"]["weight"];
  for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i].get<std::string>();
  std::cout << "]) = ";
  if (payload["value"].is_null())
    std::cout << "unknown";
  else
    std::cout << payload["value"].get<int>();
  std::cout << "  [" << payload["status"].get<std::string>() << "]\n";
  if (!payload["lower_bound_reason"].get<std::string>().empty())
    std::cout << "  lower bound: " << payload["lower_bound_reason"].get<std::string>() << "\n";
  if (payload["certificates"].contains("tensor")) {
    const auto& t = payload["certificates"]["tensor"];
    std::cout << "  tensor certificate: q=" << t["q"].get<int>() << " r=" << t["r"].get<int>()
              << " dim=" << t["dim"].get<std::string>() << "\n";
  }
  if (payload["certificates"].contains("weyl"))
    std::cout << "  Weyl certificate: " << payload["certificates"]["weyl"]["points"].size()
              << " orbit points\n";
  for (const auto& line : payload["transcript"])
    std::cout << "  | " << line.get<std::string>() << "\n";
}

SearchOptions options_of(const RunConfig& cfg) {
  SearchOptions opts;
  opts.r_max = cfg.r_max;
  opts.q_set = cfg.q_set;
  return opts;
}

void validate(const RunConfig& cfg) {
  if (cfg.r_max < 0) throw ConfigError("--rmax must be positive");
  if (cfg.d_max < 1) throw ConfigError("--dmax must be >= 1");
  if (cfg.threads < 1) throw ConfigError("--threads must be >= 1");
  for (int q : cfg.q_set)
    if (q < 1) throw ConfigError("--qset entries must be positive");
}

int run_bound_command(const RunConfig& cfg, const std::string& op) {
  validate(cfg);
  RootSystem rs = parse_series(cfg.series);
  Vec fund = parse_weight(cfg.weight, rs.rank());
  std::string key = canonical_key(rs, fund);

  std::optional<CacheJournal> cache;
  if (!cfg.cache_path.empty()) cache.emplace(cfg.cache_path);
  json payload;
  if (cache) {
    if (auto hit = cache->get(key, op)) payload = *hit;
  }
  if (payload.is_null()) {
    Weight w = rs.weight_from_fund(fund);
    BoundResult res = op == "r0" ? r0(rs, w, options_of(cfg)) : r_invariant(rs, w, options_of(cfg));
    payload = bound_result_json(rs, fund, op, res);
    if (cache) cache->put(key, op, payload);
  }
  if (cfg.json)
    std::cout << payload.dump(2) << "\n";
  else
    print_bound(payload);
  if (payload["value"].is_null() || payload["status"] == status_name(BoundStatus::UpperBoundOnly))
    return kExitUnknown;
  return kExitOk;
}

FundVec integral_fund(const RootSystem& rs, const Vec& fund) {
  FundVec out(fund.size());
  for (size_t i = 0; i < fund.size(); ++i) {
    if (!is_integer(fund[i]))
      throw ConfigError("this command needs an integral weight; coordinate " + rat_str(fund[i]) +
                        " is not an integer");
    out[i] = to_long(fund[i]);
  }
  return out;
}

int run_degree_command(const RunConfig& cfg, const std::string& op) {
  validate(cfg);
  RootSystem rs = parse_series(cfg.series);
  Vec fund = parse_weight(cfg.weight, rs.rank());
  FundVec lam = integral_fund(rs, fund);
  std::string key = canonical_key(rs, fund);
  std::string op_key = op + "@d" + std::to_string(cfg.d_max) +
                       (op == "b1" ? "q" + std::to_string(cfg.q_max) : "");

  std::optional<CacheJournal> cache;
  if (!cfg.cache_path.empty()) cache.emplace(cfg.cache_path);
  json payload;
  if (cache) {
    if (auto hit = cache->get(key, op_key)) payload = *hit;
  }
  if (payload.is_null()) {
    std::optional<int> v = op == "d1" ? d1(rs, lam, cfg.d_max) : b1(rs, lam, cfg.d_max, cfg.q_max);
    payload = json{{"input", input_json(rs, fund)},
                   {"operation", op},
                   {"d_max", cfg.d_max},
                   {"value", v ? json(*v) : json(nullptr)},
                   {"status", "exact"},
                   {"certificates", json::object()},
                   {"lower_bound_reason", ""},
                   {"transcript", json::array()}};
    if (op == "b1") payload["q_max"] = cfg.q_max;
    if (cache) cache->put(key, op_key, payload);
  }
  if (cfg.json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << op << " = ";
    if (payload["value"].is_null())
      std::cout << "none within bounds (d_max=" << cfg.d_max << ")\n";
    else
      std::cout << payload["value"].get<int>() << "\n";
  }
  return kExitOk;
}

}  // namespace

json bound_result_json(const RootSystem& rs, const Vec& fund, const std::string& op,
                       const BoundResult& res) {
  json certs = json::object();
  if (res.weyl_certificate) {
    json pts = json::array();
    for (const auto& p : res.weyl_certificate->points) pts.push_back(vec_json(p));
    certs["weyl"] = json{{"points", pts}, {"coefficients", vec_json(res.weyl_certificate->coefficients)}};
  }
  if (res.tensor_certificate)
    certs["tensor"] = json{{"q", res.tensor_certificate->q},
                           {"r", res.tensor_certificate->r},
                           {"dim", res.tensor_certificate->dim.get_str()}};
  json transcript = json::array();
  for (const auto& line : res.transcript) transcript.push_back(line);
  return json{{"input", input_json(rs, fund)},
              {"operation", op},
              {"value", res.value ? json(*res.value) : json(nullptr)},
              {"status", status_name(res.status)},
              {"certificates", certs},
              {"lower_bound_reason", res.lower_bound_reason},
              {"transcript", transcript},
              {"engine_version", kEngineVersion}};
}

int cmd_r0(const RunConfig& cfg) { return run_bound_command(cfg, "r0"); }
int cmd_r(const RunConfig& cfg) { return run_bound_command(cfg, "r"); }
int cmd_d1(const RunConfig& cfg) { return run_degree_command(cfg, "d1"); }
int cmd_b1(const RunConfig& cfg) { return run_degree_command(cfg, "b1"); }

int cmd_scan(const RunConfig& cfg, int max_coeff, const std::string& which) {
  validate(cfg);
  if (which != "r0" && which != "r" && which != "d1")
    throw ConfigError("scan target must be one of r0, r, d1");
  if (max_coeff < 0) throw ConfigError("max coefficient must be >= 0");
  RootSystem rs = parse_series(cfg.series);
  const int n = rs.rank();
  double grid = 1;
  for (int i = 0; i < n; ++i) grid *= max_coeff + 1;
  if (grid > 20000) throw ResourceError("scan grid too large (cap 20000 points)");

  std::optional<CacheJournal> cache;
  if (!cfg.cache_path.empty()) cache.emplace(cfg.cache_path);

  json table = json::array();
  FundVec coeffs(n, 0);
  for (;;) {
    Vec fund(n);
    for (int i = 0; i < n; ++i) fund[i] = Rat(static_cast<long>(coeffs[i]));
    std::string key = canonical_key(rs, fund);
    std::string op_key = which == "d1" ? "d1@d" + std::to_string(cfg.d_max) : which;
    json payload;
    if (cache) {
      if (auto hit = cache->get(key, op_key)) payload = *hit;
    }
    if (payload.is_null()) {
      if (which == "d1") {
        std::optional<int> v = d1(rs, coeffs, cfg.d_max);
        payload = json{{"input", input_json(rs, fund)},
                       {"operation", "d1"},
                       {"d_max", cfg.d_max},
                       {"value", v ? json(*v) : json(nullptr)},
                       {"status", "exact"},
                       {"certificates", json::object()},
                       {"lower_bound_reason", ""},
                       {"transcript", json::array()}};
      } else {
        Weight w = rs.weight_from_fund(fund);
        BoundResult res =
            which == "r0" ? r0(rs, w, options_of(cfg)) : r_invariant(rs, w, options_of(cfg));
        payload = bound_result_json(rs, fund, which, res);
      }
      if (cache) cache->put(key, op_key, payload);
    }
    if (cfg.json) {
      table.push_back(payload);
    } else {
      std::cout << "(";
      for (int i = 0; i < n; ++i) std::cout << (i ? "," : "") << coeffs[i];
      std::cout << ") -> ";
      if (payload["value"].is_null())
        std::cout << "none";
      else
        std::cout << payload["value"].get<int>();
      std::cout << "\n";
    }
    int pos = n - 1;
    while (pos >= 0 && coeffs[pos] == max_coeff) coeffs[pos--] = 0;
    if (pos < 0) break;
    ++coeffs[pos];
  }
  if (cfg.json) std::cout << table.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify_paper(bool json_out, int su_max_n, bool check_r_tables) {
  TablesReport rep = verify_paper_tables(su_max_n, check_r_tables);
  if (json_out) {
    json rows = json::array();
    for (const auto& row : rep.rows)
      rows.push_back(json{{"label", row.label},
                          {"expected", row.expected},
                          {"computed", row.computed},
                          {"ok", row.ok}});
    json out{{"rows", rows}, {"all_ok", rep.all_ok}, {"notes", rep.notes}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : rep.rows)
      std::cout << (row.ok ? "PASS " : "FAIL ") << row.label << ": expected " << row.expected
                << ", computed " << row.computed << "\n";
    for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    std::cout << (rep.all_ok ? "all table rows match\n" : "TABLE MISMATCH\n");
  }
  return rep.all_ok ? kExitOk : kExitError;
}

}  // namespace orbitcone::cli
