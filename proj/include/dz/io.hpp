#pragma once

// CSV and JSON serialization. Numbers carry 12 significant digits; CSV
// files start with a version line.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dz/deformation.hpp"

namespace dz::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kCsvVersion = "# deform-zeros v1";

std::string number(double x);
// x rounded to 12 significant digits; null for non-finite values.
json number_json(double x);

struct GridValue {
  cplx s;
  Evaluation f;
};

void write_grid_csv(std::ostream& os, const std::vector<GridValue>& values);
void write_residual_csv(std::ostream& os, const ResidualSweep& sweep);
void write_hardy_csv(std::ostream& os, const std::vector<HardySample>& samples);
void write_zero_csv(std::ostream& os, const std::vector<ZeroRecord>& zeros);
void write_trajectory_csv(std::ostream& os, const std::vector<Trajectory>& trajectories);

json to_json(const Rect& r);
json to_json(const BoxCountReport& report);
json to_json(const LineVerification& v);
json to_json(const ZeroRecord& z);
json to_json(const Trajectory& tr);
json to_json(const PairingReport& p);

json catalog_json(const std::vector<CatalogEntry>& entries);
void write_catalog_table(std::ostream& os, const std::vector<CatalogEntry>& entries);

}  // namespace dz::io
