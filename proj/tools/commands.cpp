#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "tricop/error.hpp"
#include "tricop/io.hpp"

namespace tricop::cli {

namespace {

using nlohmann::json;

int report(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  switch (e.code()) {
    case ErrorCode::MalformedData: return kExitData;
    case ErrorCode::TooFewSamples: return kExitData;
    default: return kExitInvalid;
  }
}

// Runs `body`, mapping library errors onto exit statuses.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return report(e, err);
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

std::string sidecar_path(const std::string& csv) { return csv + ".json"; }

void emit_batch(const SampleBatch& batch, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    write_csv(out, batch);
    return;
  }
  {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::MalformedData, "cannot open " + cfg.output);
    write_csv(file, batch);
  }
  std::ofstream meta(sidecar_path(cfg.output), std::ios::binary);
  if (!meta) throw Error(ErrorCode::MalformedData, "cannot open " + sidecar_path(cfg.output));
  meta << batch_metadata(batch).dump(2) << '\n';
}

}  // namespace

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const bool valid = is_valid(cfg.target, cfg.tol);
    const json j{{"delta", delta(cfg.target)},
                 {"valid", valid},
                 {"class", std::string(to_string(classify(cfg.target, cfg.tol)))}};
    out << j.dump() << '\n';
    return valid ? kExitOk : kExitInvalid;
  });
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << json(decompose(cfg.target, cfg.tol)).dump() << '\n';
    return kExitOk;
  });
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BetaParameter k(cfg.k);
    const MixtureDecomposition d = decompose(cfg.target, cfg.tol);
    emit_batch(sample_mixture_seeded(d, k, cfg.n, cfg.seed, cfg.threads), cfg, out);
    return kExitOk;
  });
}

int cmd_sample2d(double r, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BetaParameter k(cfg.k);
    RngStream rng(cfg.seed);
    const SampleBatch2D batch = sample_2d(r, k, cfg.n, rng);
    if (cfg.output.empty()) {
      write_csv(out, batch);
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw Error(ErrorCode::MalformedData, "cannot open " + cfg.output);
      write_csv(file, batch);
    }
    return kExitOk;
  });
}

int cmd_gaussian_map(double r, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << format_double(corr_transfer(GaussianCorrelation(r))) << '\n';
    return kExitOk;
  });
}

int cmd_gaussian_invert(double r_star, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << format_double(corr_transfer_inverse(r_star).value()) << '\n';
    return kExitOk;
  });
}

int cmd_gaussian_attainable(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << json(gaussian_attainable(cfg.target, cfg.tol)).dump() << '\n';
    return kExitOk;
  });
}

int cmd_gaussian_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RngStream rng(cfg.seed);
    emit_batch(sample_gaussian_copula(cfg.target, cfg.n, rng), cfg, out);
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream file(opts.csv, std::ios::binary);
    if (!file) throw Error(ErrorCode::MalformedData, "cannot open " + opts.csv);
    CsvTriples rows = read_csv(file);

    std::optional<CorrelationMatrix3> target = opts.target;
    std::optional<double> k = opts.k;
    if (!target || !k) {
      const std::string meta_path = sidecar_path(opts.csv);
      if (std::filesystem::exists(meta_path)) {
        std::ifstream meta_file(meta_path, std::ios::binary);
        const json meta = json::parse(meta_file);
        if (!target) target = meta.at("target").get<CorrelationMatrix3>();
        if (!k) k = meta.at("k").get<double>();
      }
    }
    if (!target || !k) {
      err << "error: verify needs -p -q -r -k or a metadata sidecar " << sidecar_path(opts.csv) << '\n';
      return kExitUsage;
    }

    SampleBatch batch;
    batch.xs = std::move(rows.xs);
    batch.ys = std::move(rows.ys);
    batch.zs = std::move(rows.zs);
    batch.k = BetaParameter(*k);
    batch.target = *target;

    const CorrelationEstimate est = estimate_correlation(batch);
    const CorrelationCheck corr = check_correlation(est, *target);
    const MarginalTestReport marg = test_marginals(batch);
    const bool pass = corr.pass && marg.pass();
    const json j{{"target", *target},
                 {"k", *k},
                 {"correlation", est},
                 {"correlation_check", corr},
                 {"marginals", marg},
                 {"pass", pass}};
    out << j.dump(2) << '\n';
    return pass ? kExitOk : kExitFailed;
  });
}

int cmd_region(int steps, bool valid_only, const std::string& output, std::ostream& out,
               std::ostream& err) {
  if (steps < 2) {
    err << "error: --steps must be at least 2\n";
    return kExitUsage;
  }
  return guarded(err, [&] {
    std::ofstream file;
    if (!output.empty()) {
      file.open(output, std::ios::binary);
      if (!file) throw Error(ErrorCode::MalformedData, "cannot open " + output);
    }
    std::ostream& sink = output.empty() ? out : file;
    sink << "p,q,r,delta\n";
    const auto at = [&](int i) { return -1.0 + 2.0 * i / (steps - 1); };
    for (int i = 0; i < steps; ++i)
      for (int j = 0; j < steps; ++j)
        for (int l = 0; l < steps; ++l) {
          const CorrelationMatrix3 m{at(i), at(j), at(l)};
          const double d = delta(m);
          if (valid_only && d < 0.0) continue;
          sink << format_double(m.p) << ',' << format_double(m.q) << ',' << format_double(m.r) << ','
               << format_double(d) << '\n';
        }
    return kExitOk;
  });
}

}  // namespace tricop::cli
