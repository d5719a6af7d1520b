#include <CLI11.hpp>
#include <iostream>

#include "orbitcone/cli.hpp"

namespace oc = orbitcone::cli;

namespace {

void add_common(CLI::App* sub, oc::RunConfig& cfg, bool with_weight = true) {
  sub->add_option("series", cfg.series, "series and rank, e.g. A3, B2, D5")->required();
  if (with_weight)
    sub->add_option("weight", cfg.weight, "fundamental coordinates, e.g. 1,0,3/2")->required();
  sub->add_flag("--json", cfg.json, "emit the JSON report schema");
  sub->add_option("--rmax", cfg.r_max, "search bound for r (default: rank+1)")
      ->envname("ORBITCONE_RMAX");
  sub->add_option("--dmax", cfg.d_max, "degree bound for d1/b1 (default 8)")
      ->envname("ORBITCONE_DMAX");
  sub->add_option("--qmax", cfg.q_max, "scaling bound for b1 (default 3)")
      ->envname("ORBITCONE_QMAX");
  sub->add_option("--qset", cfg.q_set, "tensor oracle q values (default: saturation set)")
      ->delimiter(',')
      ->envname("ORBITCONE_QSET");
  sub->add_option("--threads", cfg.threads, "worker threads (results are deterministic)")
      ->envname("ORBITCONE_THREADS");
  sub->add_option("--cache", cfg.cache_path, "JSON-lines result cache path")
      ->envname("ORBITCONE_CACHE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical invariants r0 and r of coadjoint orbits of compact classical groups"};
  app.require_subcommand(1);

  oc::RunConfig cfg_r0, cfg_r, cfg_d1, cfg_b1, cfg_scan;
  int scan_max = 1;
  std::string scan_which = "r0";
  bool vp_json = false, vp_skip_r = false;
  int vp_su_max = 9;

  add_common(app.add_subcommand("r0", "smallest r with 0 in C_r(K lambda)"), cfg_r0);
  add_common(app.add_subcommand("r", "smallest r with C_r(K lambda) convex"), cfg_r);
  add_common(app.add_subcommand("d1", "minimal positive degree of an invariant polynomial"),
             cfg_d1);
  add_common(app.add_subcommand("b1", "minimal degree over all scalings q"), cfg_b1);

  CLI::App* scan = app.add_subcommand("scan", "tabulate over a grid of dominant weights");
  add_common(scan, cfg_scan, false);
  scan->add_option("--max-coeff", scan_max, "largest fundamental coordinate")->required();
  scan->add_option("--which", scan_which, "one of r0, r, d1");

  CLI::App* verify = app.add_subcommand("verify-paper", "closed-form regression tables");
  verify->add_flag("--json", vp_json, "emit JSON");
  verify->add_option("--su-max", vp_su_max, "largest SU_n checked (default 9)");
  verify->add_flag("--skip-r-tables", vp_skip_r, "only check the r0 tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("r0")) return oc::cmd_r0(cfg_r0);
    if (app.got_subcommand("r")) return oc::cmd_r(cfg_r);
    if (app.got_subcommand("d1")) return oc::cmd_d1(cfg_d1);
    if (app.got_subcommand("b1")) return oc::cmd_b1(cfg_b1);
    if (app.got_subcommand("scan")) return oc::cmd_scan(cfg_scan, scan_max, scan_which);
    if (app.got_subcommand("verify-paper"))
      return oc::cmd_verify_paper(vp_json, vp_su_max, !vp_skip_r);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return oc::kExitError;
  }
  return oc::kExitError;
}
