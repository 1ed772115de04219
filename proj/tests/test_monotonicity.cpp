#include <doctest.h>

#include <cmath>

#include "pmeqt/monotonicity.hpp"
#include "pmeqt/pme.hpp"
#include "support.hpp"

using namespace pmeqt;
using doctest::Approx;

TEST_CASE("discriminant worked examples") {
  const auto m = discriminant(RateMatrix::from_abcdef(1, 2, 3, 4, 5, 6));
  CHECK(m.xi == 21.0);
  CHECK(m.q == 94.0);
  CHECK(m.eta == 13.0);
  CHECK(m.discriminant == 65.0);
  CHECK(m.cls == Relaxation::Monotonic);

  const auto b = discriminant(RateMatrix::from_abcdef(1, 0, 0, 1, 0, 0));
  CHECK(b.xi == 2.0);
  CHECK(b.q == 1.0);
  CHECK(b.discriminant == 0.0);
  CHECK(b.cls == Relaxation::Boundary);

  const auto o = discriminant(RateMatrix::from_abcdef(1, 0, 0, 1, 1, 0));
  CHECK(o.discriminant == -3.0);
  CHECK(o.cls == Relaxation::Oscillatory);
}

TEST_CASE("discriminant tolerance band") {
  const RateMatrix w = RateMatrix::from_abcdef(1, 0, 0, 1, 0, 0);
  CHECK(discriminant(w, 0.0).cls == Relaxation::Boundary);
  // a = 1, d = 1 + eps: D = eps^2 > 0 but inside the default band.
  const auto near = discriminant(RateMatrix::from_abcdef(1, 0, 0, 1 + 1e-6, 0, 0));
  CHECK(near.cls == Relaxation::Boundary);
  CHECK(discriminant(RateMatrix::from_abcdef(1, 0, 0, 1 + 1e-6, 0, 0), 0.0).cls == Relaxation::Monotonic);
  CHECK_THROWS_AS(discriminant(validate_rates({{0, 1}, {1, 0}})), Error);
}

TEST_CASE("uvw worked examples") {
  const auto c = uvw(RateMatrix::from_abcdef(1, 2, 3, 4, 5, 6));
  CHECK(c.k_c == 2.0);
  CHECK(c.l == 5.0);
  CHECK(c.m_c == -2.0);
  CHECK(c.omega == -1.0);
  CHECK(c.u == 3.0);
  CHECK(c.v == 7.0);
  CHECK(ellipse_value(c) == 65.0);

  const auto cyc = uvw(RateMatrix::from_abcdef(1, 0, 0, 1, 1, 0));
  CHECK(cyc.omega == 3.0);
  CHECK(cyc.u == -2.0);
  CHECK(cyc.v == 0.0);
  CHECK(ellipse_value(cyc) == -3.0);

  testing::Rng rng(3);
  const auto sym = uvw(testing::random_symmetric_rates(rng, 3));
  CHECK(std::abs(sym.omega) <= 1e-15);

  UVWCoordinates origin;
  CHECK(ellipse_value(origin) == 0.0);
}

TEST_CASE("ellipse form equals the discriminant and classes match the spectrum") {
  testing::Rng rng(17);
  int osc = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const RateMatrix w = testing::random_rates(rng, 3);
    const auto cls = discriminant(w);
    const auto c = uvw(w);
    CHECK(std::abs(c.k_c - (c.omega + c.l + c.m_c)) <= 1e-14);
    // completed-square form of the ellipse
    const double ellipse = std::pow(std::sqrt(3.0) * c.u + 2 * c.omega / std::sqrt(3.0), 2) +
                           c.v * c.v - c.omega * c.omega / 3;
    CHECK(testing::rel_err(ellipse_value(c), cls.discriminant) <= 1e-9);
    CHECK(testing::rel_err(ellipse, cls.discriminant) <= 1e-9);
    CHECK(testing::rel_err(cls.q, principal_minor_sum(generator_from_rates(w))) <= 1e-13);
    if (trial % 100 == 0) {
      const SpectralInfo info = spectrum(generator_from_rates(w));
      const bool complex_pair = std::abs(info.eigenvalues[1].imag()) > 0.0;
      if (cls.cls == Relaxation::Oscillatory) CHECK(complex_pair);
      if (cls.cls == Relaxation::Monotonic) CHECK_FALSE(complex_pair);
    }
    if (cls.cls == Relaxation::Oscillatory) ++osc;
  }
  CHECK(osc > 0);
}

TEST_CASE("parse_rate_name") {
  CHECK(parse_rate_name("e") == RateName::e);
  CHECK(std::string(to_string(RateName::c)) == "c");
  CHECK_THROWS_AS(parse_rate_name("g"), Error);
}

TEST_CASE("sweep: only a and d nonzero is never oscillatory") {
  const RateMatrix zero = validate_rates(Matrix::Zero(3, 3));
  const RegionMap map = sweep(zero, RateName::a, RateName::d, {0, 2, 21}, {0, 2, 21});
  CHECK(map.classes.size() == 441);
  CHECK(map.fraction_oscillatory == 0.0);
  for (std::size_t i = 0; i < map.grid1.size(); ++i) {
    for (std::size_t j = 0; j < map.grid2.size(); ++j) {
      const double diff = map.grid1[i] - map.grid2[j];
      CHECK(map.at(i, j).discriminant == Approx(diff * diff).epsilon(1e-12).scale(1.0));
      CHECK(map.at(i, j).cls != Relaxation::Oscillatory);
    }
  }
}

TEST_CASE("sweep around the cyclic instance finds oscillation") {
  const RateMatrix cyc = RateMatrix::from_abcdef(1, 0, 0, 1, 1, 0);
  const RegionMap map = sweep(cyc, RateName::e, RateName::c, {0, 2, 41}, {0, 2, 41});
  // e = 1 is grid index 20, c = 0 is index 0.
  CHECK(map.at(20, 0).cls == Relaxation::Oscillatory);
  CHECK(map.at(20, 0).discriminant == Approx(-3.0));
  CHECK(map.fraction_oscillatory > 0.0);
  CHECK(map.fraction_oscillatory < 1.0);
}

TEST_CASE("sweep argument handling") {
  const RateMatrix cyc = RateMatrix::from_abcdef(1, 0, 0, 1, 1, 0);
  const RegionMap single = sweep(cyc, RateName::a, RateName::b, {0.5, 0.5, 100}, {1, 1, 7});
  CHECK(single.classes.size() == 1);
  CHECK(single.grid1 == std::vector<double>{0.5});
  CHECK_THROWS_AS(sweep(cyc, RateName::a, RateName::a, {0, 1, 3}, {0, 1, 3}), Error);
  CHECK_THROWS_AS(sweep(cyc, RateName::a, RateName::b, {-1, 1, 3}, {0, 1, 3}), Error);
  CHECK_THROWS_AS(sweep(cyc, RateName::a, RateName::b, {1, 0, 3}, {0, 1, 3}), Error);
}

TEST_CASE("sweep cells match the eigen-oracle on a 1% sample") {
  testing::Rng rng(23);
  const RateMatrix tmpl = testing::random_rates(rng, 3);
  const RegionMap map = sweep(tmpl, RateName::b, RateName::f, {0, 3, 60}, {0, 3, 60});
  for (std::size_t cell = 0; cell < map.classes.size(); cell += 100) {
    const std::size_t i = cell / 60, j = cell % 60;
    Matrix w = tmpl.w();
    w(2, 0) = map.grid1[i];
    w(1, 2) = map.grid2[j];
    const SpectralInfo info = spectrum(generator_from_rates(validate_rates(w)));
    const bool complex_pair = std::abs(info.eigenvalues[1].imag()) > 0.0;
    const auto& c = map.classes[cell];
    if (c.cls == Relaxation::Oscillatory) CHECK(complex_pair);
    if (c.cls == Relaxation::Monotonic) CHECK_FALSE(complex_pair);
  }
}

TEST_CASE("balanced rates never oscillate") {
  // f chosen so that a + d + e = b + c + f.
  testing::Rng rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    double a = testing::uniform(rng), b = testing::uniform(rng), c = testing::uniform(rng),
           d = testing::uniform(rng), e = testing::uniform(rng);
    const double f = a + d + e - b - c;
    if (f < 0) continue;
    const auto cls = discriminant(RateMatrix::from_abcdef(a, b, c, d, e, f));
    CHECK(cls.cls != Relaxation::Oscillatory);
  }
}
