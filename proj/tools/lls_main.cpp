#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lls/config.hpp"
#include "lls/engine.hpp"
#include "lls/report_io.hpp"
#include "lls/sweep.hpp"

namespace {

struct CommonArgs {
  std::string preset = "full";
  std::string config_path;
  std::string rule;
  std::vector<std::string> sets;
  std::string out_dir = "out";
  std::int64_t seed = -1;  // -1: keep preset/config value
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--preset", a.preset, "Base parameter set: full or desk")
      ->check(CLI::IsMember({"full", "desk"}));
  cmd->add_option("--config", a.config_path, "Config file (key = value lines)");
  cmd->add_option("--rule", a.rule, "Scheduler rule name");
  cmd->add_option("--set", a.sets, "Override, key=value (repeatable)");
  cmd->add_option("--out", a.out_dir, "Output directory");
  cmd->add_option("--seed", a.seed, "Master random seed");
}

lls::ScenarioConfig build_config(const CommonArgs& a) {
  lls::ScenarioConfig cfg = lls::preset(a.preset);
  if (!a.config_path.empty()) lls::load_config_file(cfg, a.config_path);
  if (!a.rule.empty()) lls::apply_kv(cfg, "scheduler.rule", a.rule);
  if (a.seed >= 0) cfg.seed = static_cast<std::uint64_t>(a.seed);
  for (const std::string& kv : a.sets) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects key=value, got: " + kv);
    lls::apply_kv(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  lls::validate(cfg);
  return cfg;
}

std::string opt_str(const std::optional<double>& v) {
  return v ? lls::format_double(*v) : std::string("n/a");
}

int cmd_run(const CommonArgs& a) {
  const lls::ScenarioConfig cfg = build_config(a);
  const lls::RunLog log = lls::run(cfg);
  lls::write_run_outputs(a.out_dir, log);
  const auto& r = log.report;
  std::cout << "rule=" << lls::rule_name(cfg.sched.rule) << " seed=" << log.seed
            << " users=" << cfg.users << " cells=" << log.cells << '\n'
            << "T_Net=" << lls::format_double(r.t_net_bps)
            << " J_Net=" << opt_str(r.j_net)
            << " T_Slot10=" << opt_str(r.t_slot10_bps)
            << " F_LT=" << lls::format_double(r.f_lt_avg)
            << " J_F=" << opt_str(r.j_f_net)
            << " R_log=" << lls::format_double(r.r_log_net) << '\n'
            << "outputs: " << a.out_dir << "/report.json (+bins, handover, manifest)"
            << '\n';
  return 0;
}

int cmd_sweep(const CommonArgs& a, const std::string& axis,
              const std::vector<std::string>& values,
              const std::vector<std::uint64_t>& seeds, bool no_run_outputs) {
  lls::SweepSpec spec;
  spec.base = build_config(a);
  spec.axis = axis;
  spec.values = values;
  spec.seeds = seeds.empty() ? std::vector<std::uint64_t>{1, 2, 3} : seeds;
  spec.write_outputs = !no_run_outputs;
  const auto rows = lls::sweep(spec, a.out_dir);
  std::cout << rows.size() << " runs -> " << a.out_dir << "/summary.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-cell downlink scheduling simulator"};
  app.require_subcommand(1);

  CommonArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute one scenario");
  add_common(run_cmd, run_args);

  CommonArgs sweep_args;
  std::string axis;
  std::vector<std::string> values;
  std::vector<std::uint64_t> seeds;
  bool no_run_outputs = false;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a parameter grid");
  add_common(sweep_cmd, sweep_args);
  sweep_cmd->add_option("--axis", axis, "Swept parameter (W, alpha, N, lambda, rule, handover or a dotted key)")
      ->required();
  sweep_cmd->add_option("--values", values, "Values for the axis")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--seeds", seeds, "Replication seeds (default 1,2,3)")
      ->delimiter(',');
  sweep_cmd->add_flag("--summary-only", no_run_outputs,
                      "Skip per-run output files, keep only summary.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(run_args);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, axis, values, seeds, no_run_outputs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
