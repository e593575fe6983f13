#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace geomed;
using namespace testsupport;

TEST_CASE("distance: closed-form cases") {
  auto e = plane();
  CHECK(distance(pt(e, {0, 0}), pt(e, {3, 4})) == doctest::Approx(5.0));

  auto s = sphere2();
  CHECK(distance(pt(s, {1, 0, 0}), pt(s, {0, 1, 0})) ==
        doctest::Approx(M_PI / 2));

  auto h = hyper2();
  CHECK(distance(pt(h, {1, 0, 0}), pt(h, {std::cosh(1.0), std::sinh(1.0), 0})) ==
        doctest::Approx(1.0));
}

TEST_CASE("distance: error paths") {
  auto e = plane();
  auto s = sphere2();
  CHECK_THROWS_AS(distance(pt(e, {0, 0}), pt(ManifoldSpec::euclidean(3), {0, 0, 0})),
                  Error);
  try {
    distance(pt(s, {1, 0, 0}), pt(s, {0, 0, 1}));  // fine, pi/2 apart
    distance(pt(s, {1, 0, 0}), pt(s, {-1, 0, 0}));
    FAIL("antipodal pair must be rejected");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::AntipodalPoints);
  }
}

TEST_CASE("exp_map: closed-form cases") {
  auto e = plane();
  Point b = pt(e, {0, 0});
  Point r = exp_map(make_tangent(b, Eigen::Vector2d(1, 2)));
  CHECK(r.coords[0] == doctest::Approx(1.0));
  CHECK(r.coords[1] == doctest::Approx(2.0));

  // zero vector is the identity
  auto s = sphere2();
  Point sb = pt(s, {1, 0, 0});
  Point same = exp_map(make_tangent(sb, Eigen::Vector3d(0, 0, 0)));
  CHECK(distance(sb, same) == doctest::Approx(0.0));

  Point quarter = exp_map(make_tangent(sb, Eigen::Vector3d(0, M_PI / 2, 0)));
  CHECK(distance(quarter, pt(s, {0, 1, 0})) == doctest::Approx(0.0).epsilon(1e-10));

  CHECK_THROWS_AS(exp_map(make_tangent(sb, Eigen::Vector3d(0, 2 * M_PI, 0))),
                  Error);
}

TEST_CASE("log_map: closed-form cases and round trip") {
  auto e = plane();
  Tangent l = log_map(pt(e, {1, 1}), pt(e, {4, 5}));
  CHECK(l.vec[0] == doctest::Approx(3.0));
  CHECK(l.vec[1] == doctest::Approx(4.0));

  auto h = hyper2();
  Point hx = pt(h, {1, 0, 0});
  CHECK(tangent_norm(log_map(hx, hx)) == doctest::Approx(0.0));

  // random exp/log round trips on the hyperboloid within distance 2
  DeterministicRng rng(7);
  BallSpec ball = make_ball(origin_of(h), 1.0);
  for (int i = 0; i < 200; ++i) {
    Point x = random_ball_point(rng, ball, 0.9);
    Point p = random_ball_point(rng, ball, 0.9);
    Point back = exp_map(log_map(x, p));
    CHECK(distance(back, p) <= 1e-10);
    CHECK(std::abs(tangent_norm(log_map(x, p)) - distance(x, p)) <= 1e-10);
  }
}

TEST_CASE("geodesic_point: identity, euclidean ray, sphere equivalence") {
  auto e = plane();
  Point x = pt(e, {0, 0});
  Tangent u = make_tangent(x, Eigen::Vector2d(1, 0));
  CHECK(distance(geodesic_point(x, u, 0.0), x) == doctest::Approx(0.0));
  Point p = geodesic_point(x, u, 2.5);
  CHECK(p.coords[0] == doctest::Approx(2.5));

  auto s = sphere2();
  DeterministicRng rng(11);
  BallSpec ball = make_ball(origin_of(s), M_PI / 8.5);
  for (int i = 0; i < 100; ++i) {
    Point y = random_ball_point(rng, ball, 0.3);
    Tangent dir = random_unit_tangent(rng, y);
    double t = rng.uniform(0.0, 0.5);
    Point a = geodesic_point(y, dir, t);
    Point b = exp_map(Tangent{y, t * dir.vec});
    CHECK(distance(a, b) <= 1e-12);
  }
}

TEST_CASE("angle: right angle, degenerate cases, spherical law of cosines") {
  auto e = plane();
  CHECK(angle(pt(e, {0, 0}), pt(e, {1, 0}), pt(e, {0, 1})) ==
        doctest::Approx(M_PI / 2));
  CHECK(angle(pt(e, {0, 0}), pt(e, {1, 1}), pt(e, {1, 1})) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(angle(pt(e, {0, 0}), pt(e, {0, 0}), pt(e, {1, 0})), Error);

  // right triangle with legs pi/4 on the unit sphere: third side from the
  // spherical law of cosines must match the measured distance
  auto s = sphere2();
  Point A = pt(s, {1, 0, 0});
  auto [u, v] = orthonormal_pair(A);
  Point B = exp_map(Tangent{A, (M_PI / 4) * u.vec});
  Point C = exp_map(Tangent{A, (M_PI / 4) * v.vec});
  CHECK(angle(A, B, C) == doctest::Approx(M_PI / 2).epsilon(1e-12));
  double expected = model_law_of_cosines(1.0, M_PI / 4, M_PI / 4, M_PI / 2);
  CHECK(distance(B, C) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ball_exit_time: trivial rays and the closed-form oracle") {
  auto e = plane();
  BallSpec ball = make_ball(pt(e, {0, 0}), 1.0);
  Point center = ball.center;
  Tangent u = make_tangent(center, Eigen::Vector2d(0, 1));
  CHECK(ball_exit_time(center, u, ball) == doctest::Approx(1.0).epsilon(1e-9));

  Point boundary = pt(e, {1.0, 0.0});
  Tangent in = make_tangent(boundary, Eigen::Vector2d(-1, 0));
  CHECK(ball_exit_time(boundary, in, ball) == doctest::Approx(2.0).epsilon(1e-9));

  Point outside = pt(e, {2.0, 0.0});
  CHECK_THROWS_AS(ball_exit_time(outside, in, ball), Error);

  auto s = sphere2();
  BallSpec sball = make_ball(origin_of(s), M_PI / 8.0);
  DeterministicRng rng(3);
  for (int i = 0; i < 100; ++i) {
    Point x = random_ball_point(rng, sball, M_PI / 16.0);
    Tangent dir = random_unit_tangent(rng, x);
    double bisected = ball_exit_time(x, dir, sball);
    double closed = exit_time_closed_form(x, dir, sball.center, sball.rho);
    CHECK(std::abs(bisected - closed) <= 1e-9);
  }
}

TEST_CASE("metric axioms on random triples") {
  for (const ManifoldSpec& m : {plane(), sphere2(), hyper2()}) {
    BallSpec ball = standard_ball(m);
    DeterministicRng rng(101 + static_cast<int>(m.family));
    for (int i = 0; i < 1000; ++i) {
      Point a = random_ball_point(rng, ball, 0.9 * ball.rho);
      Point b = random_ball_point(rng, ball, 0.9 * ball.rho);
      Point c = random_ball_point(rng, ball, 0.9 * ball.rho);
      double ab = distance(a, b), ba = distance(b, a);
      CHECK(ab == ba);  // symmetric exactly
      CHECK(ab >= 0.0);
      CHECK(distance(a, c) <= ab + distance(b, c) + 1e-10);
    }
  }
}

TEST_CASE("exp/log inverse pair across families") {
  for (const ManifoldSpec& m : {plane(), sphere2(), hyper2()}) {
    BallSpec ball = standard_ball(m);
    DeterministicRng rng(202 + static_cast<int>(m.family));
    for (int i = 0; i < 500; ++i) {
      Point x = random_ball_point(rng, ball, 0.9 * ball.rho);
      Point p = random_ball_point(rng, ball, 0.9 * ball.rho);
      CHECK(distance(exp_map(log_map(x, p)), p) <= 1e-10);
    }
  }
}

TEST_CASE("geodesics have unit speed") {
  for (const ManifoldSpec& m : {plane(), sphere2(), hyper2()}) {
    BallSpec ball = standard_ball(m);
    DeterministicRng rng(303 + static_cast<int>(m.family));
    for (int i = 0; i < 200; ++i) {
      Point x = random_ball_point(rng, ball, 0.4 * ball.rho);
      Tangent u = random_unit_tangent(rng, x);
      double s = rng.uniform(0.0, 0.5 * ball.rho);
      double t = rng.uniform(0.0, 0.5 * ball.rho);
      double d = distance(geodesic_point(x, u, s), geodesic_point(x, u, t));
      CHECK(std::abs(d - std::abs(s - t)) <= 1e-10);
    }
  }
}

TEST_CASE("exit time lands on the sphere of radius rho") {
  for (const ManifoldSpec& m : {plane(), sphere2(), hyper2()}) {
    BallSpec ball = standard_ball(m);
    DeterministicRng rng(404 + static_cast<int>(m.family));
    for (int i = 0; i < 200; ++i) {
      Point x = random_ball_point(rng, ball, 0.8 * ball.rho);
      Tangent u = random_unit_tangent(rng, x);
      double t = ball_exit_time(x, u, ball);
      if (t < 2.0 * ball.rho) {
        double d = distance(geodesic_point(x, u, t), ball.center);
        CHECK(std::abs(d - ball.rho) <= 1e-9);
      }
    }
  }
}

TEST_CASE("embedding invariant holds after operations") {
  for (const ManifoldSpec& m : {sphere2(), hyper2()}) {
    BallSpec ball = standard_ball(m);
    DeterministicRng rng(505 + static_cast<int>(m.family));
    for (int i = 0; i < 200; ++i) {
      Point x = random_ball_point(rng, ball, 0.9 * ball.rho);
      Point p = random_ball_point(rng, ball, 0.9 * ball.rho);
      CHECK(embedding_residual(exp_map(log_map(x, p))) <= 1e-12);
      // tangency of log vectors
      Tangent l = log_map(x, p);
      CHECK(std::abs(ambient_inner(m, x.coords, l.vec)) <= 1e-12);
    }
  }
}
