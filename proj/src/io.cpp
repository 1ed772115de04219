#include "pmeqt/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

namespace pmeqt::io {

namespace {

// Adding 0.0 folds -0.0 into 0.0.
Json number(double v) { return Json(v + 0.0); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

}  // namespace

RateMatrix rates_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rates")) {
    throw Error(ErrorKind::BadShape, "rate document needs keys \"n\" and \"rates\"");
  }
  if (!doc["n"].is_number_integer()) {
    throw Error(ErrorKind::BadShape, "\"n\" must be an integer");
  }
  const auto n = doc["n"].get<long long>();
  const Json& rows = doc["rates"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n || n < 2) {
    throw Error(ErrorKind::BadShape, "\"rates\" must hold n >= 2 rows");
  }
  std::vector<std::vector<double>> raw;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::BadShape, "each rate row must be an array");
    std::vector<double> vals;
    for (const auto& v : row) {
      if (!v.is_number()) throw Error(ErrorKind::BadShape, "rates must be numbers");
      vals.push_back(v.get<double>());
    }
    raw.push_back(std::move(vals));
  }
  return validate_rates(raw);
}

RateMatrix read_rates_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::BadShape, path + ": " + e.what());
  }
  return rates_from_json(doc);
}

Json to_json(const RateMatrix& w) {
  return Json{{"n", w.n()}, {"rates", matrix_json(w.w())}};
}

Json to_json(const QTDecomposition& qt) {
  Json out;
  out["n"] = qt.n;
  out["sigma"] = matrix_json(qt.entropy.sigma);
  out["k"] = matrix_json(qt.k_mat);
  out["r"] = qt.r ? number(*qt.r) : Json(nullptr);
  out["residual"] = number(qt.residual);
  if (!qt.warning.empty()) out["warning"] = qt.warning;
  return out;
}

Json to_json(const StructureReport& report) {
  Json out;
  out["symmetric"] = report.symmetric;
  out["doubly_stochastic"] = report.doubly_stochastic;
  out["detailed_balance"] = report.detailed_balance;
  out["stationary"] = vector_json(report.stationary.entries());
  out["null_dim"] = report.null_dim;
  return out;
}

Json to_json(const SpectralInfo& info) {
  Json vals = Json::array();
  for (const auto& z : info.eigenvalues) vals.push_back(Json{{"re", number(z.real())}, {"im", number(z.imag())}});
  Json out;
  out["eigenvalues"] = std::move(vals);
  out["zero_index"] = info.zero_index;
  out["gap"] = number(info.gap);
  out["null_dim"] = info.null_dim;
  return out;
}

Json to_json(const YDConsistency& report) {
  Json out;
  out["lhs"] = number(report.lhs);
  out["rhs"] = number(report.rhs);
  out["satisfied"] = report.satisfied;
  out["omega_at_kopt"] = number(report.omega_at_kopt);
  return out;
}

Json classify_json(const RelaxationClass& cls, const UVWCoordinates& coords) {
  Json out;
  out["class"] = to_code(cls.cls);
  out["D"] = number(cls.discriminant);
  out["xi"] = number(cls.xi);
  out["q"] = number(cls.q);
  out["u"] = number(coords.u);
  out["v"] = number(coords.v);
  out["omega"] = number(coords.omega);
  return out;
}

Json error_json(const Error& err) {
  Json detail;
  detail["kind"] = to_string(err.kind());
  detail["message"] = err.what();
  if (err.row() > 0) detail["row"] = err.row();
  if (err.col() > 0) detail["col"] = err.col();
  return Json{{"error", std::move(detail)}};
}

std::string csv_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v + 0.0, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const MonitorSeries* mon) {
  const bool with_s = mon != nullptr && !mon->s_vals.empty();
  os << "t";
  for (int i = 0; i < traj.n(); ++i) os << ",p" << i + 1;
  if (mon != nullptr) {
    os << ",H";
    if (with_s) os << ",S";
    os << ",S_BS";
  }
  os << '\n';
  for (int t = 0; t < traj.size(); ++t) {
    os << csv_number(traj.times[t]);
    for (int i = 0; i < traj.n(); ++i) os << ',' << csv_number(traj.states(t, i));
    if (mon != nullptr) {
      os << ',' << csv_number(mon->h_vals[t]);
      if (with_s) os << ',' << csv_number(mon->s_vals[t]);
      os << ',' << csv_number(mon->s_bs_vals[t]);
    }
    os << '\n';
  }
}

void write_region_csv(std::ostream& os, const RegionMap& map) {
  os << "axis1,axis2,class,D\n";
  for (std::size_t i = 0; i < map.grid1.size(); ++i) {
    for (std::size_t j = 0; j < map.grid2.size(); ++j) {
      const RelaxationClass& c = map.at(i, j);
      os << csv_number(map.grid1[i]) << ',' << csv_number(map.grid2[j]) << ','
         << to_code(c.cls) << ',' << csv_number(c.discriminant) << '\n';
    }
  }
}

void write_yd_curve_csv(std::ostream& os, const YDCurve& curve) {
  os << "k,rho1,rho2,rho3\n";
  for (std::size_t i = 0; i < curve.k_grid.size(); ++i) {
    os << csv_number(curve.k_grid[i]) << ',' << csv_number(curve.rho1[i]) << ','
       << csv_number(curve.rho2[i]) << ',' << csv_number(curve.rho3[i]) << '\n';
  }
}

}  // namespace pmeqt::io
