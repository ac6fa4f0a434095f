#include "lls/sweep.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "lls/engine.hpp"
#include "lls/report_io.hpp"

namespace lls {

namespace {

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == '/' || c == ' ' || c == '=') c = '_';
  }
  return s;
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec, const std::string& out_dir) {
  const std::string key = axis_key(spec.axis);
  if (spec.seeds.empty()) throw std::invalid_argument("sweep: need at least one seed");

  std::filesystem::create_directories(out_dir);
  std::ofstream summary(out_dir + "/summary.csv", std::ios::binary);
  if (!summary) throw std::runtime_error("cannot write " + out_dir + "/summary.csv");
  summary << "axis,value,seed,t_net_bps,j_net,t_slot10_bps,f_lt_avg,j_f_net,"
             "r_log_net\n";
  summary.flush();

  std::vector<SweepRow> rows;
  for (const std::string& value : spec.values) {
    ScenarioConfig cfg = spec.base;
    apply_kv(cfg, key, value);
    for (const std::uint64_t seed : spec.seeds) {
      cfg.seed = seed;
      const RunLog log = run(cfg);
      SweepRow row{value, seed, log.report, {}};
      if (spec.write_outputs) {
        row.run_dir = out_dir + "/" + sanitize(spec.axis) + "=" + sanitize(value) +
                      "/seed=" + std::to_string(seed);
        write_run_outputs(row.run_dir, log);
      }
      const MetricsReport& r = log.report;
      summary << spec.axis << ',' << value << ',' << seed << ','
              << format_double(r.t_net_bps) << ',' << opt_cell(r.j_net) << ','
              << opt_cell(r.t_slot10_bps) << ',' << format_double(r.f_lt_avg) << ','
              << opt_cell(r.j_f_net) << ',' << format_double(r.r_log_net) << '\n';
      summary.flush();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace lls
