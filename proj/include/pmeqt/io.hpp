#ifndef PMEQT_IO_HPP
#define PMEQT_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pmeqt/core.hpp"
#include "pmeqt/integrate.hpp"
#include "pmeqt/monotonicity.hpp"
#include "pmeqt/pme.hpp"
#include "pmeqt/yd.hpp"

namespace pmeqt::io {

using Json = nlohmann::ordered_json;

// {"n": <int>, "rates": [[...], ...]}, rows are destinations, diagonal 0.
RateMatrix rates_from_json(const Json& doc);
RateMatrix read_rates_file(const std::string& path);
Json to_json(const RateMatrix& w);

Json to_json(const QTDecomposition& qt);
Json to_json(const StructureReport& report);
Json to_json(const SpectralInfo& info);
Json to_json(const YDConsistency& report);
// classify output: {class, D, xi, q, u, v, omega}.
Json classify_json(const RelaxationClass& cls, const UVWCoordinates& coords);
Json error_json(const Error& err);

// 17 significant digits.
std::string csv_number(double v);

// Header t,p1..pN and, with a monitor, H,S,S_BS (S omitted when the monitor
// carries no quadratic entropy).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const MonitorSeries* mon = nullptr);
void write_region_csv(std::ostream& os, const RegionMap& map);
void write_yd_curve_csv(std::ostream& os, const YDCurve& curve);

}  // namespace pmeqt::io

#endif
