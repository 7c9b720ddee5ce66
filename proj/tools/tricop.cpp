// tricop: sample triples with symmetric beta marginals and any 3x3
// correlation matrix, and inspect the Gaussian-copula alternative.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using tricop::cli::RunConfig;

void add_matrix_flags(CLI::App* cmd, RunConfig& cfg, bool required = true) {
  auto* p = cmd->add_option("-p", cfg.target.p, "correlation of coordinates 2 and 3");
  auto* q = cmd->add_option("-q", cfg.target.q, "correlation of coordinates 1 and 3");
  auto* r = cmd->add_option("-r", cfg.target.r, "correlation of coordinates 1 and 2");
  if (required) {
    p->required();
    q->required();
    r->required();
  }
}

void add_tol_flag(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tol", cfg.tol, "tolerance for validity and classification")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_sampling_flags(CLI::App* cmd, RunConfig& cfg, bool with_k) {
  if (with_k) cmd->add_option("-k", cfg.k, "beta shape k >= 1/2 (1 = uniform)")->capture_default_str();
  cmd->add_option("-n", cfg.n, "number of samples")->required();
  cmd->add_option("--seed", cfg.seed, "RNG seed (default: $TRICOP_SEED, else 0)");
  cmd->add_option("-o", cfg.output, "output CSV path; writes <path>.json metadata too");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Copula sampler for arbitrary 3x3 correlation matrices"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("TRICOP_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: TRICOP_SEED is not an unsigned integer\n";
      return tricop::cli::kExitUsage;
    }
  }

  auto* check = app.add_subcommand("check", "print delta, validity and class of a matrix");
  add_matrix_flags(check, cfg);
  add_tol_flag(check, cfg);

  auto* decompose = app.add_subcommand("decompose", "split a matrix into extreme points");
  add_matrix_flags(decompose, cfg);
  add_tol_flag(decompose, cfg);

  auto* sample = app.add_subcommand("sample", "draw triples with the target correlation");
  add_matrix_flags(sample, cfg);
  add_tol_flag(sample, cfg);
  add_sampling_flags(sample, cfg, true);
  sample->add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();

  double r2 = 0.0;
  auto* sample2d = app.add_subcommand("sample2d", "draw pairs with correlation r");
  sample2d->add_option("-r", r2, "target correlation")->required();
  add_sampling_flags(sample2d, cfg, true);

  auto* gaussian = app.add_subcommand("gaussian", "Gaussian copula correlation map");
  gaussian->require_subcommand(1);
  double map_r = 0.0;
  auto* gmap = gaussian->add_subcommand("map", "r -> 3 - (6/pi) arccos(r/2)");
  gmap->add_option("-r", map_r, "normal correlation")->required();
  double inv_r = 0.0;
  auto* ginvert = gaussian->add_subcommand("invert", "r* -> 2 sin(pi r*/6)");
  ginvert->add_option("-r", inv_r, "copula correlation")->required();
  auto* gattain = gaussian->add_subcommand("attainable", "is the matrix reachable by a Gaussian copula");
  add_matrix_flags(gattain, cfg);
  add_tol_flag(gattain, cfg);
  auto* gsample = gaussian->add_subcommand("sample", "draw (phi(X1), phi(X2), phi(X3)), X ~ N(0, R)");
  add_matrix_flags(gsample, cfg);
  add_sampling_flags(gsample, cfg, false);

  tricop::cli::VerifyOptions vopts;
  RunConfig vcfg;
  auto* verify = app.add_subcommand("verify", "test a sample CSV against its target");
  verify->add_option("csv", vopts.csv, "CSV with header x,y,z")->required();
  auto* vp = verify->add_option("-p", vcfg.target.p);
  auto* vq = verify->add_option("-q", vcfg.target.q);
  auto* vr = verify->add_option("-r", vcfg.target.r);
  vp->needs(vq, vr);
  vq->needs(vp, vr);
  vr->needs(vp, vq);
  auto* vk = verify->add_option("-k", vcfg.k, "beta shape");

  int steps = 21;
  bool valid_only = false;
  std::string region_out;
  auto* region = app.add_subcommand("region", "emit a (p,q,r,delta) lattice on [-1,1]^3");
  region->add_option("--steps", steps, "points per axis")->capture_default_str();
  region->add_flag("--valid-only", valid_only, "drop lattice points with delta < 0");
  region->add_option("-o", region_out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? tricop::cli::kExitOk : tricop::cli::kExitUsage;
  }

  using namespace tricop::cli;
  if (*check) return cmd_check(cfg, std::cout, std::cerr);
  if (*decompose) return cmd_decompose(cfg, std::cout, std::cerr);
  if (*sample) return cmd_sample(cfg, std::cout, std::cerr);
  if (*sample2d) return cmd_sample2d(r2, cfg, std::cout, std::cerr);
  if (*gmap) return cmd_gaussian_map(map_r, std::cout, std::cerr);
  if (*ginvert) return cmd_gaussian_invert(inv_r, std::cout, std::cerr);
  if (*gattain) return cmd_gaussian_attainable(cfg, std::cout, std::cerr);
  if (*gsample) return cmd_gaussian_sample(cfg, std::cout, std::cerr);
  if (*verify) {
    if (*vp) vopts.target = vcfg.target;
    if (*vk) vopts.k = vcfg.k;
    return cmd_verify(vopts, std::cout, std::cerr);
  }
  if (*region) return cmd_region(steps, valid_only, region_out, std::cout, std::cerr);
  return kExitUsage;
}
