#include <doctest.h>

#include <stdexcept>

#include "contact3/finite_difference.hpp"
#include "contact3/model_spaces.hpp"
#include "contact3/verifier.hpp"
#include "oracles.hpp"

using namespace contact3;

TEST_CASE("sasakian model data") {
  auto m = sasakian_model(0);
  CHECK(m.ricci(kE1, kE1) == -2);
  CHECK(m.ricci(kXi, kXi) == 2);

  m = sasakian_model(2);
  CHECK(m.ricci.matrix() == 2 * Eigen::Matrix3d::Identity());

  m = sasakian_model(1);
  for (int k = 0; k < 3; ++k) CHECK(m.connection(kXi, kE1, k) == 0);
  CHECK(m.tensors.h.isZero(0));
}

TEST_CASE("sasakian connection matches the Koszul connection of the group brackets") {
  for (double c1 : {-2.0, -0.5, 0.0, 1.0, 2.0, 5.0}) {
    const auto br = oracle::sasakian_brackets(c1);
    const auto k = oracle::koszul(br);
    const auto conn = sasakian_model(c1).connection;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
          CHECK(conn(i, j, l) == k[i][j][l]);
          CHECK(conn.bracket(i, j, l) == br[i][j][l]);
        }
    const auto R = curvature_from_connection(conn);
    CHECK(std::abs(R.sectional(kE1, kXi) - 1) < 1e-12);
    CHECK(std::abs(R.sectional(kE2, kXi) - 1) < 1e-12);
  }
}

TEST_CASE("non-sasakian model data") {
  CHECK_THROWS_AS(NonSasakianModel(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(NonSasakianModel(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(nonsasakian_model(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(NonSasakianModel(std::nan(""), 0), std::invalid_argument);

  CHECK(nonsasakian_model(0.5, 0).ricci.matrix() == Eigen::Vector3d(0, 0, 1.5).asDiagonal().toDenseMatrix());
  CHECK(nonsasakian_model(1, 0).ricci.matrix().isZero(0));
  CHECK(nonsasakian_model(0.5, 2).structure.a == -1);

  for (double mu : {0.2, 1.0, 1.7})
    for (double beta : {-2.0, 0.0, 0.5}) {
      const NonSasakianModel m(mu, beta);
      CHECK(m.alpha() + mu * mu == 1);
      const auto s = m.structure();
      CHECK(s.b == 0);
      CHECK(s.c == 0);
      const Eigen::Matrix3d contracted =
          curvature_from_connection(connection_from_structure(s)).ricci();
      CHECK(oracle::max_abs(contracted - nonsasakian_model(mu, beta).ricci.matrix()) < 1e-12);
      // diagonal Ricci as sums of sectional curvatures from the brackets
      const auto br = oracle::nonsasakian_brackets(mu, beta);
      CHECK(std::abs(contracted(0, 0) - oracle::sectional(br, 0, 1) - oracle::sectional(br, 0, 2)) < 1e-12);
      CHECK(std::abs(contracted(2, 2) - oracle::sectional(br, 0, 2) - oracle::sectional(br, 1, 2)) < 1e-12);
    }
}

TEST_CASE("D-homothetic deformation") {
  const auto s = frame_contact_structure();
  CHECK(contact_compatibility_defect(s) == 0);

  const auto same = d_homothetic(s, 1);
  CHECK(same.g == s.g);
  CHECK(same.eta == s.eta);
  CHECK(same.xi == s.xi);
  CHECK(same.deta == s.deta);

  CHECK_THROWS_AS(d_homothetic(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(d_homothetic(s, -2), std::invalid_argument);

  for (double eps : {0.1, 0.5, 2.0, 10.0, 3.3}) {
    const auto d = d_homothetic(s, eps);
    CHECK(std::abs(d.eta.dot(d.xi) - 1) < 1e-15);
    CHECK(std::abs(d.xi.dot(d.g * d.xi) - 1) < 1e-15);
    CHECK(contact_compatibility_defect(d) < 1e-12);
    const auto back = d_homothetic(d, 1 / eps);
    CHECK(oracle::max_abs(back.g - s.g) < 1e-12);
    CHECK(oracle::max_abs(back.eta - s.eta) < 1e-12);
    CHECK(oracle::max_abs(back.xi - s.xi) < 1e-12);
    CHECK(oracle::max_abs(back.phi - s.phi) < 1e-12);
    CHECK(oracle::max_abs(back.deta - s.deta) < 1e-12);
  }
}

TEST_CASE("group classification") {
  CHECK(to_string(classify_group(NonSasakianModel(0.5, 0))) == "SU2");
  CHECK(to_string(classify_group(NonSasakianModel(2, 0))) == "SL2R");
  CHECK(to_string(classify_group(NonSasakianModel(1, 0))) == "E2");
  CHECK(to_string(classify_group(SasakianModel{0})) == "NIL");
  CHECK(to_string(classify_group(SasakianModel{1})) == "SU2");
  CHECK(to_string(classify_group(SasakianModel{-3})) == "SL2R");

  const auto sphere = classify_group(SasakianModel{2});
  CHECK(sphere.unit_sphere);
  CHECK(sphere.candidates == std::vector<LieGroup>{LieGroup::SU2});
  CHECK(to_string(sphere) == "UNIT_SPHERE");

  const auto set = classify_group(NonSasakianModel(0.5, 1));
  CHECK_FALSE(set.unique());
  CHECK(set.candidates.size() == 4);
  CHECK(to_string(set) == "CANDIDATE_SET(SU2,SL2R,E2,E11)");
}

TEST_CASE("heisenberg chart basics") {
  const auto chart = heisenberg_chart();
  const Eigen::Vector3d o = Eigen::Vector3d::Zero();
  CHECK(chart.metric(o) == 0.25 * Eigen::Matrix3d::Identity());
  CHECK(chart.eta(Eigen::Vector3d(1, 3, 0))(0) == -1.5);

  for (int n = 0; n < 1000; ++n) {
    const Eigen::Vector3d p(oracle::uniform(-5, 5), oracle::uniform(-5, 5), oracle::uniform(-5, 5));
    const Eigen::Matrix3d g = chart.metric(p);
    const Eigen::Matrix3d E = chart.frame(p);
    REQUIRE(oracle::max_abs(E.transpose() * g * E - Eigen::Matrix3d::Identity()) < 1e-12);
    REQUIRE(oracle::max_abs(g - oracle::heis_metric(p)) < 1e-12);
    REQUIRE(Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(g).eigenvalues().minCoeff() > 0);
    REQUIRE(std::abs(chart.eta(p).dot(E.col(kXi)) - 1) < 1e-12);
    REQUIRE(std::abs(E.col(kXi).dot(g * E.col(kXi)) - 1) < 1e-12);
  }
}

TEST_CASE("heisenberg frame brackets") {
  const auto chart = heisenberg_chart();
  auto field = [&](int i) { return [&, i](const Eigen::Vector3d& p) -> Eigen::Vector3d { return chart.frame(p).col(i); }; };
  auto lie = [&](int i, int j, const Eigen::Vector3d& p) {
    Eigen::Vector3d out = Eigen::Vector3d::Zero();
    const Eigen::Vector3d X = field(i)(p), Y = field(j)(p);
    for (int a = 0; a < 3; ++a) {
      out += X(a) * partial(field(j), p, a, 1e-4, FDScheme::Central2);
      out -= Y(a) * partial(field(i), p, a, 1e-4, FDScheme::Central2);
    }
    return out;
  };
  for (int n = 0; n < 20; ++n) {
    const Eigen::Vector3d p(oracle::uniform(-2, 2), oracle::uniform(-2, 2), oracle::uniform(-2, 2));
    const Eigen::Vector3d xi = chart.frame(p).col(kXi);
    CHECK(oracle::max_abs(lie(kE1, kE2, p) - 2 * xi) < 1e-8);
    CHECK(oracle::max_abs(lie(kE2, kXi, p)) < 1e-8);
    CHECK(oracle::max_abs(lie(kXi, kE1, p)) < 1e-8);
  }
}

TEST_CASE("FD frame connection of the chart matches the c1 = 0 model") {
  const auto chart = heisenberg_chart();
  const auto model = sasakian_model(0).connection;
  FDConfig cfg;
  std::vector<Eigen::Vector3d> points{Eigen::Vector3d::Zero()};
  for (int n = 0; n < 10; ++n)
    points.emplace_back(oracle::uniform(-2, 2), oracle::uniform(-2, 2), oracle::uniform(-2, 2));
  for (const auto& p : points) {
    const auto fd = frame_connection_fd(chart, p, cfg);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(std::abs(fd(i, j, k) - model(i, j, k)) < 1e-6);
  }
}

TEST_CASE("FD Christoffel symbols against the analytic ones") {
  const auto chart = heisenberg_chart();
  FDConfig cfg;
  for (int n = 0; n < 10; ++n) {
    const Eigen::Vector3d p(oracle::uniform(-3, 3), oracle::uniform(-3, 3), oracle::uniform(-3, 3));
    const auto fd = christoffel_fd(chart, p, cfg);
    const auto exact = oracle::heis_christoffel(p);
    for (int a = 0; a < 3; ++a) CHECK(oracle::max_abs(fd[a] - exact[a]) < 1e-8);
  }
}

TEST_CASE("heisenberg exponential map") {
  CHECK(heisenberg_exp(Eigen::Vector3d::Zero()).isZero(0));
  // straight line along the Reeb direction
  CHECK(oracle::max_abs(heisenberg_exp({0, 0, 0.3}) - Eigen::Vector3d(0, 0, 0.6)) < 1e-15);

  for (int n = 0; n < 30; ++n) {
    const Eigen::Vector3d x(oracle::uniform(-1, 1), oracle::uniform(-1, 1), oracle::uniform(-1, 1));
    const Eigen::Vector3d v = heisenberg_chart().frame(Eigen::Vector3d::Zero()) * x;
    CHECK(oracle::max_abs(heisenberg_exp(x) - oracle::heis_geodesic(v)) < 1e-9);
  }
  // tiny omega takes the series branch
  const Eigen::Vector3d x(0.4, -0.2, 1e-12);
  CHECK(oracle::max_abs(heisenberg_exp(x) - oracle::heis_geodesic(heisenberg_chart().frame(Eigen::Vector3d::Zero()) * x)) < 1e-9);
}

TEST_CASE("heisenberg log inverts exp") {
  for (int n = 0; n < 200; ++n) {
    const Eigen::Vector3d x(oracle::uniform(-1.5, 1.5), oracle::uniform(-1.5, 1.5), oracle::uniform(-0.7, 0.7));
    CHECK(oracle::max_abs(heisenberg_log(heisenberg_exp(x)) - x) < 1e-10);
  }
  CHECK(heisenberg_log(Eigen::Vector3d::Zero()).isZero(1e-15));
}
