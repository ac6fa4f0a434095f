#include "lls/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "lls/config.hpp"
#include "lls/metrics.hpp"

namespace lls {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
  return std::stoull(s, nullptr, 16);
}

ordered_json opt_num(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

std::optional<double> num_opt(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

void write_report_json(const std::string& path, const RunLog& log) {
  ordered_json j;
  j["version"] = kVersionString;
  j["seed"] = log.seed;
  j["cells"] = log.cells;
  j["measured_s"] = log.measured_s;
  j["env_digest"] = hex64(log.env_digest);
  ordered_json met;
  met["t_net_bps"] = log.report.t_net_bps;
  met["j_net"] = opt_num(log.report.j_net);
  met["t_slot10_bps"] = opt_num(log.report.t_slot10_bps);
  met["f_lt_avg"] = log.report.f_lt_avg;
  met["j_f_net"] = opt_num(log.report.j_f_net);
  met["r_log_net"] = log.report.r_log_net;
  j["metrics"] = std::move(met);
  j["handover_count"] = log.handovers.size();
  ordered_json users = ordered_json::array();
  for (size_t u = 0; u < log.traces.size(); ++u) {
    const UserTrace& t = log.traces[u];
    ordered_json e;
    e["id"] = u;
    e["total_bits"] = t.total_bits;
    e["measured_s"] = t.measured_s;
    e["mean_rate_bps"] = user_mean_rate_bps(t);
    e["frozen_s"] = t.frozen_s;
    e["session_s"] = t.session_s;
    e["handovers"] = t.handovers;
    e["bins"] = t.bins.size();
    users.push_back(std::move(e));
  }
  j["users"] = std::move(users);
  open_out(path) << j.dump(2) << '\n';
}

void write_bins_csv(const std::string& path, const RunLog& log) {
  auto out = open_out(path);
  out << "user_id,t_bin,bits,serving_cell,frozen_flag\n";
  for (size_t u = 0; u < log.traces.size(); ++u) {
    const auto& bins = log.traces[u].bins;
    for (size_t k = 0; k < bins.size(); ++k) {
      out << u << ',' << k << ',' << format_double(bins[k].bits) << ','
          << bins[k].serving_cell << ',' << (bins[k].frozen ? 1 : 0) << '\n';
    }
  }
}

void write_handover_csv(const std::string& path, const RunLog& log) {
  auto out = open_out(path);
  out << "t_s,user,from,to,long_avg_bps,freeze\n";
  for (const auto& r : log.handovers) {
    out << format_double(r.t_s) << ',' << r.user << ',' << r.from << ',' << r.to
        << ',' << format_double(r.long_avg_bps) << ',' << format_double(r.freeze)
        << '\n';
  }
}

void write_manifest_json(const std::string& path, const RunLog& log) {
  ordered_json j;
  j["version"] = kVersionString;
  j["seed"] = log.seed;
  j["cells"] = log.cells;
  j["env_digest"] = hex64(log.env_digest);
  ordered_json cfg;
  for (const auto& [k, v] : log.config_echo) cfg[k] = v;
  j["config"] = std::move(cfg);
  open_out(path) << j.dump(2) << '\n';
}

void write_run_outputs(const std::string& dir, const RunLog& log) {
  std::filesystem::create_directories(dir);
  write_report_json(dir + "/report.json", log);
  write_bins_csv(dir + "/bins.csv", log);
  write_handover_csv(dir + "/handover.csv", log);
  write_manifest_json(dir + "/manifest.json", log);
}

ParsedRun read_run_outputs(const std::string& dir) {
  ParsedRun out;

  std::ifstream rep(dir + "/report.json");
  if (!rep) throw std::runtime_error("cannot read " + dir + "/report.json");
  const auto j = nlohmann::json::parse(rep);
  out.seed = j.at("seed").get<std::uint64_t>();
  out.env_digest = parse_hex64(j.at("env_digest").get<std::string>());
  out.measured_s = j.at("measured_s").get<double>();
  const auto& met = j.at("metrics");
  out.report.t_net_bps = met.at("t_net_bps").get<double>();
  out.report.j_net = num_opt(met.at("j_net"));
  out.report.t_slot10_bps = num_opt(met.at("t_slot10_bps"));
  out.report.f_lt_avg = met.at("f_lt_avg").get<double>();
  out.report.j_f_net = num_opt(met.at("j_f_net"));
  out.report.r_log_net = met.at("r_log_net").get<double>();
  for (const auto& e : j.at("users")) {
    UserTrace t;
    t.total_bits = e.at("total_bits").get<double>();
    t.measured_s = e.at("measured_s").get<double>();
    t.frozen_s = e.at("frozen_s").get<double>();
    t.session_s = e.at("session_s").get<double>();
    t.handovers = e.at("handovers").get<int>();
    out.traces.push_back(std::move(t));
  }

  std::ifstream bins(dir + "/bins.csv");
  if (!bins) throw std::runtime_error("cannot read " + dir + "/bins.csv");
  std::string line;
  std::getline(bins, line);  // header
  while (std::getline(bins, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 5) throw std::runtime_error("bins.csv: malformed row: " + line);
    const auto u = static_cast<size_t>(std::stoul(f[0]));
    if (u >= out.traces.size()) throw std::runtime_error("bins.csv: bad user id");
    BinRow row;
    row.bits = std::stod(f[2]);
    row.serving_cell = std::stoi(f[3]);
    row.frozen = f[4] == "1";
    out.traces[u].bins.push_back(row);
  }

  std::ifstream ho(dir + "/handover.csv");
  if (!ho) throw std::runtime_error("cannot read " + dir + "/handover.csv");
  std::getline(ho, line);  // header
  while (std::getline(ho, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 6) throw std::runtime_error("handover.csv: malformed row: " + line);
    HandoverRecord r;
    r.t_s = std::stod(f[0]);
    r.user = std::stoi(f[1]);
    r.from = std::stoi(f[2]);
    r.to = std::stoi(f[3]);
    r.long_avg_bps = std::stod(f[4]);
    r.freeze = std::stod(f[5]);
    out.handovers.push_back(r);
  }
  return out;
}

}  // namespace lls
