#include <doctest.h>

#include "contact3/frame_geometry.hpp"
#include "contact3/model_spaces.hpp"
#include "oracles.hpp"

using namespace contact3;

namespace {

// Random (a, b, c, mu) from the four families on which the brackets obey
// Jacobi: b(a+1+mu) = 0 and c(a+1-mu) = 0.
StructureFunctions jacobi_sample(int family) {
  const double a = oracle::uniform(-2, 2), b = oracle::uniform(-2, 2);
  const double c = oracle::uniform(-2, 2), mu = oracle::uniform(0, 2);
  switch (family % 4) {
    case 0: return {a, 0, 0, mu};
    case 1: return {-1 - mu, b, 0, mu};
    case 2: return {mu - 1, 0, c, mu};
    default: return {-1, b, c, 0};
  }
}

double symmetry_defect(const CurvatureTensor& R) {
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          worst = std::max(worst, std::abs(R(i, j, k, l) + R(j, i, k, l)));
          worst = std::max(worst, std::abs(R(i, j, k, l) + R(i, j, l, k)));
          worst = std::max(worst, std::abs(R(i, j, k, l) - R(k, l, i, j)));
          worst = std::max(worst, std::abs(R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)));
        }
  return worst;
}

}  // namespace

TEST_CASE("connection table entries") {
  const auto g = connection_from_structure({0.7, 0.3, -0.2, 0.5});
  CHECK(g(kE1, kXi, kE2) == -1.5);
  CHECK(g(kE2, kXi, kE1) == 0.5);
  CHECK(g(kXi, kXi, kE1) == 0.0);
  CHECK(g(kXi, kXi, kE2) == 0.0);

  const auto s = connection_from_structure({0, 0, 0, 0});
  CHECK(s(kE1, kXi, kE2) == -1.0);
  CHECK(s(kE2, kXi, kE1) == 1.0);

  for (int n = 0; n < 50; ++n) {
    const StructureFunctions sf{oracle::uniform(-2, 2), oracle::uniform(-2, 2),
                                oracle::uniform(-2, 2), oracle::uniform(0, 2)};
    const auto c = connection_from_structure(sf);
    CHECK(c(kE1, kE1, kE2) == sf.b);
    CHECK(c(kE1, kE2, kE1) == -sf.b);
  }
}

TEST_CASE("connection is metric and reproduces nabla xi = -phi X - phi h X") {
  for (int n = 0; n < 1000; ++n) {
    const StructureFunctions sf{oracle::uniform(-2, 2), oracle::uniform(-2, 2),
                                oracle::uniform(-2, 2), oracle::uniform(0, 2)};
    const auto c = connection_from_structure(sf);
    const auto t = contact_tensors(sf.mu);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) REQUIRE(c(i, j, k) == -c(i, k, j));
      const Eigen::Vector3d expected = -t.phi.col(i) - t.A.col(i);
      for (int k = 0; k < 3; ++k) REQUIRE(c(i, kXi, k) == expected(k));
    }
  }
}

TEST_CASE("contact tensors identities") {
  for (double mu : {0.0, 0.3, 1.0, 2.5}) {
    const auto t = contact_tensors(mu);
    const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
    CHECK(t.phi * t.phi == -id + t.xi * t.eta.transpose());
    CHECK((t.h * t.xi).isZero(0));
    CHECK(t.h * t.phi == -t.phi * t.h);
    CHECK((t.h * t.h).trace() == 2 * mu * mu);
    CHECK(t.A == t.phi * t.h);
    CHECK(t.phi.col(kE1) == Eigen::Vector3d::Unit(kE2));
  }
}

TEST_CASE("ricci operator closed form") {
  auto r = ricci_operator_lemma1({0.1, 0, 0, 0.5}, {}, 0, 0);
  CHECK(r(kE1, kXi) == 0);
  CHECK(r(kE2, kXi) == 0);
  CHECK(r(kE1, kE2) == 0);
  CHECK(r(kXi, kXi) == 1.5);

  CHECK(ricci_operator_lemma1({0.2, 0.4, -1, 0}, {}, 0, 0)(kXi, kXi) == 2);
  CHECK(ricci_operator_lemma1({0, 1, 0, 0.5}, {}, 0, 0)(kE1, kXi) == 1.0);

  r = ricci_operator_lemma1({0, 1, 2, 0.5}, {0.3, 0.2, 0.1}, 7, 8);
  CHECK(r(kE1, kE2) == 0.3);
  CHECK(r(kE1, kXi) == doctest::Approx(1.0 - 0.1));
  CHECK(r(kE2, kXi) == doctest::Approx(2.0 - 0.2));
  CHECK(r(kE1, kE1) == 7);
  CHECK(r(kE2, kE2) == 8);
  CHECK(r.matrix() == r.matrix().transpose());

  for (double mu : {0.0, 0.4, 1.3}) {
    const auto t = contact_tensors(mu);
    CHECK(ricci_operator_lemma1({0, 0, 0, mu}, {}, 0, 0)(kXi, kXi) == 2 - (t.h * t.h).trace());
  }
}

TEST_CASE("curvature of the Sasakian models") {
  const auto sphere = curvature_from_connection(sasakian_model(2).connection);
  CHECK(sphere.sectional(kE1, kE2) == doctest::Approx(1).epsilon(1e-12));
  CHECK(sphere.sectional(kE1, kXi) == doctest::Approx(1).epsilon(1e-12));
  CHECK(sphere.sectional(kE2, kXi) == doctest::Approx(1).epsilon(1e-12));

  const auto nil = curvature_from_connection(sasakian_model(0).connection);
  CHECK(std::abs(nil.sectional(kE1, kE2) + 3) < 1e-12);
  CHECK(std::abs(nil.sectional(kE1, kXi) - 1) < 1e-12);
  CHECK(std::abs(nil.sectional(kE2, kXi) - 1) < 1e-12);

  for (double c1 : {-2.0, -0.5, 0.0, 1.0, 2.0, 3.7, 5.0}) {
    const auto R = curvature_from_connection(sasakian_model(c1).connection);
    const auto br = oracle::sasakian_brackets(c1);
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
      CHECK(std::abs(R.sectional(i, j) - oracle::sectional(br, i, j)) < 1e-12);
    const Eigen::Matrix3d ric = R.ricci();
    CHECK(std::abs(ric(kE1, kE1) - (2 * c1 - 2)) < 1e-12);
    CHECK(std::abs(ric(kE2, kE2) - (2 * c1 - 2)) < 1e-12);
    CHECK(std::abs(ric(kXi, kXi) - 2) < 1e-12);
  }
}

TEST_CASE("curvature of the non-Sasakian models against the bracket formula") {
  for (double mu : {0.1, 0.5, 1.0, 2.0})
    for (double beta : {-1.0, 0.0, 1.5}) {
      const auto sf = NonSasakianModel(mu, beta).structure();
      const auto R = curvature_from_connection(connection_from_structure(sf));
      const auto br = oracle::nonsasakian_brackets(mu, beta);
      for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        CHECK(std::abs(R.sectional(i, j) - oracle::sectional(br, i, j)) < 1e-12);
    }
}

TEST_CASE("connection equals the Koszul connection of its own brackets") {
  for (int n = 0; n < 200; ++n) {
    const auto sf = jacobi_sample(n);
    const auto c = connection_from_structure(sf);
    oracle::Brackets br{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) br[i][j][k] = c.bracket(i, j, k);
    const auto k = oracle::koszul(br);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) REQUIRE(std::abs(k[i][j][l] - c(i, j, l)) < 1e-14);
  }
}

TEST_CASE("curvature symmetries and Bianchi on Jacobi-consistent frames") {
  for (int n = 0; n < 1000; ++n) {
    const auto sf = jacobi_sample(n);
    const auto conn = connection_from_structure(sf);
    REQUIRE(jacobi_defect(conn) < 1e-12);
    REQUIRE(symmetry_defect(curvature_from_connection(conn)) < 1e-12);
  }
}

TEST_CASE("symmetries fail when the brackets violate Jacobi") {
  const auto conn = connection_from_structure({0.3, 1.0, 0.0, 0.5});
  CHECK(jacobi_defect(conn) > 0.1);
  CHECK(symmetry_defect(curvature_from_connection(conn)) > 0.1);
}

TEST_CASE("contracted curvature agrees with the ricci operator") {
  for (int n = 0; n < 200; ++n) {
    const StructureFunctions sf{oracle::uniform(-2, 2), 0, 0, oracle::uniform(0, 2)};
    const Eigen::Matrix3d ric = curvature_from_connection(connection_from_structure(sf)).ricci();
    const auto closed = ricci_operator_lemma1(sf, {}, ric(0, 0), ric(1, 1));
    REQUIRE(oracle::max_abs(ric - closed.matrix()) < 1e-12);
  }
}

TEST_CASE("alpha beta identification") {
  for (double c1 : {-1.0, 0.0, 3.0}) {
    const auto m = sasakian_model(c1);
    const auto ab = alpha_beta_identify(curvature_from_connection(m.connection), m.structure, 1e-12);
    REQUIRE(ab);
    CHECK(std::abs(ab->alpha - 1) < 1e-12);
    CHECK(ab->beta == 0);
  }

  const auto sf = NonSasakianModel(0.5, 1).structure();
  const auto ab = alpha_beta_identify(curvature_from_connection(connection_from_structure(sf)), sf, 1e-12);
  REQUIRE(ab);
  CHECK(std::abs(ab->alpha - 0.75) < 1e-12);
  CHECK(std::abs(ab->beta - 1) < 1e-12);

  const StructureFunctions generic{0, 1, 0, 0.5};
  CHECK_FALSE(alpha_beta_identify(curvature_from_connection(connection_from_structure(generic)),
                                  generic, 1e-12));

  for (double mu : {0.1, 0.5, 0.9, 1.5, 2.0})
    for (double beta : {-1.0, 0.0, 1.0}) {
      const auto s = NonSasakianModel(mu, beta).structure();
      const auto r = alpha_beta_identify(curvature_from_connection(connection_from_structure(s)), s, 1e-12);
      REQUIRE(r);
      CHECK(std::abs(r->alpha + mu * mu - 1) < 1e-12);
      CHECK(std::abs(r->beta - beta) < 1e-12);
    }
}

TEST_CASE("eta-parallel residual") {
  CHECK(eta_parallel_residual({0.4, 0, 0, 0.7}, {}) < 1e-15);
  CHECK(eta_parallel_residual({0.4, 1.2, -0.7, 0}, {}) == 0);
  CHECK(std::abs(eta_parallel_residual({0, 1, 0, 0.5}, {}) - 1.0) < 1e-12);
  for (double b : {-2.0, -0.3, 0.8, 1.7})
    for (double mu : {0.2, 1.0, 1.9})
      CHECK(std::abs(eta_parallel_residual({0.1, b, 0, mu}, {}) - 2 * mu * std::abs(b)) < 1e-12);
  // a varying mu is detected through its frame derivatives
  CHECK(eta_parallel_residual({0, 0, 0, 0.5}, {0, 0.25, 0}) > 0.2);
}
