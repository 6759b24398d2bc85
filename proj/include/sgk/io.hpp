#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sgk/floquet.hpp"
#include "sgk/periods.hpp"
#include "sgk/solutions.hpp"

namespace sgk {

using json = nlohmann::ordered_json;

// 17 significant digits, '.' separator, independent of the C locale.
std::string format_double(double v);

json to_json(cplx z);
json to_json(const Mat2c& m);
json to_json(const Spectrum& s);
json to_json(const CyclePeriods& p);
json to_json(const std::vector<Relation>& rel);
json to_json(const SolutionModel& m);
json to_json(const ResidualReport& r);

// Pretty JSON with a trailing newline; non-finite numbers become null.
std::string dump(const json& j);

// Header "x,t,u", one row per grid point, t-major.
std::string grid_csv(const FieldGrid& g);

struct ScanRow {
  cplx E, delta;
  double defect = 0.0;
};
// Header "Re_E,Im_E,Re_Delta,Im_Delta,defect".
std::string scan_csv(const std::vector<ScanRow>& rows);

// Writes bytes as given (LF stays LF).  Throws InvalidConfig on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace sgk
