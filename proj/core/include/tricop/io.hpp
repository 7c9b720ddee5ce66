#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "tricop/corrmat.hpp"
#include "tricop/decompose.hpp"
#include "tricop/gaussian.hpp"
#include "tricop/sampler.hpp"
#include "tricop/stats.hpp"

namespace tricop {

// JSON shapes:
//   CorrelationMatrix3     {"p":..,"q":..,"r":..}
//   ExtremePoint3          {"a":..,"b":..,"c":..}
//   MixtureDecomposition   {"target":{..},"components":[{"weight":..,"angles":{..}}]}
//   SampleBatch metadata   {"seed":..,"k":..,"target":{..},"n":..}
void to_json(nlohmann::json& j, const CorrelationMatrix3& m);
void from_json(const nlohmann::json& j, CorrelationMatrix3& m);
void to_json(nlohmann::json& j, const ExtremePoint3& e);
ExtremePoint3 extreme_point_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const MixtureDecomposition& d);
MixtureDecomposition decomposition_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const CorrelationEstimate& e);
void to_json(nlohmann::json& j, const CorrelationCheck& c);
void to_json(nlohmann::json& j, const KsResult& r);
void to_json(nlohmann::json& j, const MellinMoment& m);
void to_json(nlohmann::json& j, const MarginalTestReport& r);
void to_json(nlohmann::json& j, const GaussianAttainability& a);
void to_json(nlohmann::json& j, const PairDensityNormalization& n);

nlohmann::json batch_metadata(const SampleBatch& batch);

/// 17 significant digits (trailing zeros dropped); reads back to the same double.
std::string format_double(double x);

/// Header `x,y,z`, then one line per triple. Throws Error(MalformedData) on
/// stream failure.
void write_csv(std::ostream& os, const SampleBatch& batch);
void write_csv(std::ostream& os, const SampleBatch2D& batch);

struct CsvTriples {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> zs;
};

/// Reads a `x,y,z` CSV. Throws Error(MalformedData) on a bad header, a short
/// row or a field that does not parse as a number.
CsvTriples read_csv(std::istream& is);

}  // namespace tricop
