#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "tricop/corrmat.hpp"

namespace tricop::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verify: a statistical check failed
inline constexpr int kExitInvalid = 2;  // domain-invalid input
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

struct RunConfig {
  CorrelationMatrix3 target;
  double k = 1.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;  // empty: stdout
  double tol = kUserTol;
  unsigned threads = 1;
};

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample2d(double r, const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_gaussian_map(double r, std::ostream& out, std::ostream& err);
int cmd_gaussian_invert(double r_star, std::ostream& out, std::ostream& err);
int cmd_gaussian_attainable(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gaussian_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string csv;
  std::optional<CorrelationMatrix3> target;  // falls back to the sidecar
  std::optional<double> k;
};
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

int cmd_region(int steps, bool valid_only, const std::string& output, std::ostream& out,
               std::ostream& err);

}  // namespace tricop::cli
