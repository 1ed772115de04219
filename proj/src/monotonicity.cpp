#include "pmeqt/monotonicity.hpp"

#include <array>
#include <cmath>

namespace pmeqt {

namespace {

using Rates6 = std::array<double, 6>;

// (a, b, c, d, e, f)
Rates6 named_rates(const RateMatrix& w) {
  return {w.a(), w.b(), w.c(), w.d(), w.e(), w.f()};
}

RelaxationClass classify_rates(const Rates6& r, std::optional<double> tol) {
  const auto [a, b, c, d, e, f] = r;
  RelaxationClass out;
  out.xi = a + b + c + d + e + f;
  out.eta = c + d + f;
  // Principal 2x2 minors of [[-(a+b), c, e], [a, -(c+d), f], [b, d, -(e+f)]].
  out.q = ((a + b) * (c + d) - c * a) + ((a + b) * (e + f) - e * b) +
          ((c + d) * (e + f) - f * d);
  out.discriminant = out.xi * out.xi - 4.0 * out.q;
  const double band = tol.value_or(1e-9 * std::max(1.0, out.xi * out.xi));
  if (out.discriminant < -band) {
    out.cls = Relaxation::Oscillatory;
  } else if (out.discriminant > band) {
    out.cls = Relaxation::Monotonic;
  } else {
    out.cls = Relaxation::Boundary;
  }
  return out;
}

RegionMap prepare(const RateMatrix& tmpl, RateName axis1, RateName axis2,
                  const AxisRange& range1, const AxisRange& range2) {
  if (tmpl.n() != 3) throw Error(ErrorKind::BadShape, "sweep needs a 3-state template");
  if (axis1 == axis2) throw Error(ErrorKind::BadAxis, "sweep axes must differ");
  for (const AxisRange* r : {&range1, &range2}) {
    if (!(r->lo >= 0.0) || !(r->hi >= r->lo) || r->steps < 1 || !std::isfinite(r->hi)) {
      throw Error(ErrorKind::InvalidArgument,
                  "sweep ranges need 0 <= lo <= hi and steps >= 1");
    }
  }
  RegionMap map;
  map.axis1 = axis1;
  map.axis2 = axis2;
  map.grid1 = range1.grid();
  map.grid2 = range2.grid();
  map.classes.resize(map.grid1.size() * map.grid2.size());
  return map;
}

RelaxationClass classify_cell(const Rates6& base, const RegionMap& map, std::size_t cell) {
  const std::size_t cols = map.grid2.size();
  Rates6 r = base;
  r[static_cast<int>(map.axis1)] = map.grid1[cell / cols];
  r[static_cast<int>(map.axis2)] = map.grid2[cell % cols];
  return classify_rates(r, std::nullopt);
}

void finish(RegionMap& map) {
  std::size_t osc = 0;
  for (const auto& c : map.classes) {
    if (c.cls == Relaxation::Oscillatory) ++osc;
  }
  map.fraction_oscillatory =
      static_cast<double>(osc) / static_cast<double>(map.classes.size());
}

}  // namespace

RelaxationClass discriminant(const RateMatrix& w, std::optional<double> tol) {
  if (w.n() != 3) throw Error(ErrorKind::BadShape, "discriminant needs n = 3");
  return classify_rates(named_rates(w), tol);
}

UVWCoordinates uvw(const RateMatrix& w) {
  UVWCoordinates c;
  c.k_c = w.e() - w.c();
  c.l = w.f() - w.a();
  c.m_c = w.b() - w.d();
  c.omega = (w.a() + w.d() + w.e()) - (w.b() + w.c() + w.f());
  c.u = c.l + c.m_c;
  c.v = c.l - c.m_c;
  return c;
}

double ellipse_value(const UVWCoordinates& c) {
  return 3.0 * c.u * c.u + c.v * c.v + 4.0 * c.omega * c.u + c.omega * c.omega;
}

RateName parse_rate_name(const std::string& name) {
  if (name == "a") return RateName::a;
  if (name == "b") return RateName::b;
  if (name == "c") return RateName::c;
  if (name == "d") return RateName::d;
  if (name == "e") return RateName::e;
  if (name == "f") return RateName::f;
  throw Error(ErrorKind::BadAxis, "unknown rate name '" + name + "', expected a..f");
}

const char* to_string(RateName name) {
  static constexpr const char* names[] = {"a", "b", "c", "d", "e", "f"};
  return names[static_cast<int>(name)];
}

std::vector<double> AxisRange::grid() const {
  if (lo == hi || steps == 1) return {lo};
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  out.back() = hi;
  return out;
}

RegionMap sweep(const RateMatrix& tmpl, RateName axis1, RateName axis2,
                const AxisRange& range1, const AxisRange& range2) {
  RegionMap map = prepare(tmpl, axis1, axis2, range1, range2);
  const Rates6 base = named_rates(tmpl);
  const auto cells = static_cast<std::ptrdiff_t>(map.classes.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
    map.classes[cell] = classify_cell(base, map, static_cast<std::size_t>(cell));
  }
  finish(map);
  return map;
}

RegionMap sweep_serial(const RateMatrix& tmpl, RateName axis1, RateName axis2,
                       const AxisRange& range1, const AxisRange& range2) {
  RegionMap map = prepare(tmpl, axis1, axis2, range1, range2);
  const Rates6 base = named_rates(tmpl);
  for (std::size_t cell = 0; cell < map.classes.size(); ++cell) {
    map.classes[cell] = classify_cell(base, map, cell);
  }
  finish(map);
  return map;
}

}  // namespace pmeqt
