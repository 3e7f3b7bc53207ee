#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "galilab/boost.hpp"
#include "galilab/rng.hpp"

using namespace galilab;

namespace {

Spacetime4Vector random_point(Rng& rng) {
  return Spacetime4Vector::contra(rng.uniform(-2, 2), rng.vec3(-2, 2));
}

std::vector<Spacetime4Vector> random_points(Rng& rng, int n) {
  std::vector<Spacetime4Vector> pts;
  for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
  return pts;
}

GaugeConfig random_gauge(Rng& rng) {
  GaugeConfig A;
  auto pot = [&] {
    Poly4 p;
    p.add_term(rng.uniform(-0.5, 0.5), {1, 1, 0, 0});
    p.add_term(rng.uniform(-0.5, 0.5), {0, 2, 0, 0});
    p.add_term(rng.uniform(-0.5, 0.5), {0, 0, 1, 1});
    p.add_term(rng.uniform(-0.5, 0.5), {0, 1, 0, 1});
    return polynomial(p) +
           cplx(rng.uniform(-0.5, 0.5)) *
               gaussian_bump(rng.uniform(1.2, 2.0),
                             {rng.uniform(-1, 1), rng.uniform(-1, 1),
                              rng.uniform(-1, 1), rng.uniform(-1, 1)});
  };
  A.a0 = pot();
  for (int i = 0; i < 3; ++i) A.a[i] = pot();
  return A;
}

MatterConfig random_matter(Rng& rng) {
  return {plane_wave(cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                     rng.vec3(-1, 1), rng.uniform(-1, 1)) +
          cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)) *
              gaussian_bump(rng.uniform(1.0, 2.0),
                            {rng.uniform(-1, 1), rng.uniform(-1, 1),
                             rng.uniform(-1, 1), rng.uniform(-1, 1)})};
}

FrameMap random_frame(Rng& rng, const ModelParams& p) {
  return {random_element(rng), p, CocycleVariant::R2OnA1};
}

}  // namespace

TEST_CASE("inverse spacetime map matches the group action") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_element(rng);
    const auto map = inverse_spacetime_map(g);
    const auto x = random_point(rng);
    const auto xp = act_inverse(g, x);
    const std::array<double, 4> xv{x.x0, x.xs(0), x.xs(1), x.xs(2)};
    std::array<double, 4> mapped{};
    for (int mu = 0; mu < 4; ++mu) {
      mapped[mu] = map.t[mu];
      for (int nu = 0; nu < 4; ++nu) mapped[mu] += map.L[mu][nu] * xv[nu];
    }
    CHECK(std::abs(mapped[0] - xp.x0) < 1e-13);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(mapped[i + 1] - xp.xs(i)) < 1e-13);
  }
}

TEST_CASE("gamma phase values") {
  const ModelParams p{1.0, 1.0, 1.0};
  FrameMap fm{GalileiElement{0, Vector3d::Zero(), {0.5, 0, 0},
                             Matrix3d::Identity()},
              p, CocycleVariant::R2OnA1};
  // -u.x' - (1/2) beta^2 x'^0 with u = beta: -0.5 - 0.25
  CHECK(gamma_phase(fm, Spacetime4Vector::contra(2, {1, 0, 0})) ==
        doctest::Approx(-0.75));

  Rng rng(3);
  FrameMap rot{GalileiElement{0, Vector3d::Zero(), Vector3d::Zero(),
                              rng.rotation()},
               p, CocycleVariant::R2OnA1};
  CHECK(gamma_phase(rot, random_point(rng)) == 0.0);

  // the polynomial agrees with the pointwise formula and is degree 1
  for (int trial = 0; trial < 20; ++trial) {
    const FrameMap f2 = random_frame(rng, ModelParams{1.7, 1.2, 1.0});
    const Poly4 gp = gamma_poly(f2);
    CHECK(gp.degree() <= 1);
    const auto x = random_point(rng);
    const auto xp = act_inverse(f2.g, x);
    CHECK(std::abs(gp.eval({x.x0, x.xs(0), x.xs(1), x.xs(2)}) -
                   gamma_phase(f2, xp)) < 1e-12);
  }
}

TEST_CASE("matter transform basics") {
  const ModelParams p{1.0, 1.0, 1.0};
  const MatterConfig m{plane_wave(cplx(0.6, 0.3), {1, -0.5, 0}, 0.4)};
  Rng rng(5);

  const FrameMap id{GalileiElement::identity(), p, CocycleVariant::R2OnA1};
  const auto mid = boost_matter(id, m);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_point(rng);
    CHECK(std::abs(mid.psi.eval(x) - m.psi.eval(x)) < 1e-15);
  }

  // pure translation: constant phase, modulus preserved
  const FrameMap tr{GalileiElement{0.0, {0.7, -0.2, 0.1}, Vector3d::Zero(),
                                   Matrix3d::Identity()},
                    p, CocycleVariant::R2OnA1};
  const auto mt = boost_matter(tr, m);
  const auto x0 = random_point(rng);
  const cplx ratio0 = mt.psi.eval(x0) / m.psi.eval(x0);
  CHECK(std::abs(std::abs(ratio0) - 1.0) < 1e-13);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_point(rng);
    CHECK(std::abs(mt.psi.eval(x) / m.psi.eval(x) - ratio0) < 1e-13);
    CHECK(std::abs(std::abs(mt.psi.eval(x)) - std::abs(m.psi.eval(x))) <
          1e-13);
  }
}

TEST_CASE("position realization satisfies the projective law") {
  const ModelParams p{1.3, 1.1, 1.0};
  const MatterConfig m{
      cplx(0.8, -0.1) *
          gaussian_bump(1.2, {0.1, 0.2, -0.3, 0.4}) +
      plane_wave(cplx(0.2, 0.5), {0.6, -0.2, 0.3}, 0.35)};
  Rng rng(7);
  const auto pts = random_points(rng, 10);

  double worst_r2 = 0.0, worst_asw = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g2 = random_element(rng), g1 = random_element(rng);
    const FrameMap f2{g2, p}, f1{g1, p}, f21{compose(g2, g1), p};
    const auto two_step = boost_matter(f2, boost_matter(f1, m));
    const auto one_step = boost_matter(f21, m);
    const double mc = p.m * p.c;
    const cplx ph_r2 = std::exp(
        cplx(0, -cocycle_omega(g2, g1, p.m, p.c, CocycleVariant::R2OnA1)));
    const cplx ph_asw = std::exp(
        cplx(0, -cocycle_omega(g2, g1, p.m, p.c, CocycleVariant::AsWritten)));
    (void)mc;
    for (const auto& x : pts) {
      const cplx lhs = two_step.psi.eval(x);
      const cplx rhs = one_step.psi.eval(x);
      worst_r2 = std::max(worst_r2, std::abs(lhs - ph_r2 * rhs));
      worst_asw = std::max(worst_asw, std::abs(lhs - ph_asw * rhs));
    }
  }
  CHECK(worst_r2 < 1e-10);
  CHECK(worst_asw > 1e-3);  // the other cocycle reading fails
}

TEST_CASE("momentum realization satisfies the same projective law") {
  const ModelParams p{1.3, 1.1, 1.0};
  const MomentumWavefunction phi = [](const Vector3d& k) {
    return std::exp(-0.5 * (k - Vector3d{0.3, 0, -0.2}).squaredNorm() +
                    cplx(0, 0.7) * k(0));
  };
  Rng rng(11);
  std::vector<Vector3d> ks;
  for (int i = 0; i < 10; ++i) ks.push_back(rng.vec3(-1.5, 1.5));

  double worst = 0.0, worst_asw = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g2 = random_element(rng), g1 = random_element(rng);
    const FrameMap f2{g2, p}, f1{g1, p}, f21{compose(g2, g1), p};
    const auto two_step = momentum_rep(f2, momentum_rep(f1, phi));
    const auto one_step = momentum_rep(f21, phi);
    const cplx ph = std::exp(
        cplx(0, -cocycle_omega(g2, g1, p.m, p.c, CocycleVariant::R2OnA1)));
    const cplx ph_asw = std::exp(
        cplx(0, -cocycle_omega(g2, g1, p.m, p.c, CocycleVariant::AsWritten)));
    for (const auto& k : ks) {
      worst = std::max(worst, std::abs(two_step(k) - ph * one_step(k)));
      worst_asw =
          std::max(worst_asw, std::abs(two_step(k) - ph_asw * one_step(k)));
    }
  }
  CHECK(worst < 1e-10);
  CHECK(worst_asw > 1e-3);

  // pure translation acts as a pure phase of modulus one
  const FrameMap tr{GalileiElement{0.0, {0.4, -0.1, 0.2}, Vector3d::Zero(),
                                   Matrix3d::Identity()},
                    p};
  const auto moved = momentum_rep(tr, phi);
  for (const auto& k : ks) {
    CHECK(std::abs(std::abs(moved(k)) - std::abs(phi(k))) < 1e-13);
  }
}

TEST_CASE("gauge transforms") {
  const ModelParams p{1.0, 1.0, 1.0};
  GaugeConfig A;
  A.a0 = constant(1.0);
  A.a[0] = constant(1.0);

  const FrameMap boost{GalileiElement{0, Vector3d::Zero(), {0.5, 0, 0},
                                      Matrix3d::Identity()},
                       p};
  Rng rng(13);
  const auto x = random_point(rng);

  const auto cov = boost_gauge_cov(boost, A);
  CHECK(std::abs(cov.a0.eval(x) - cplx(1.0 - 0.5)) < 1e-14);
  CHECK(std::abs(cov.a[0].eval(x) - cplx(1.0)) < 1e-14);

  const auto contra = boost_gauge_contra(boost, A);
  CHECK(std::abs(contra.a0.eval(x) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(contra.a[0].eval(x) - cplx(1.5)) < 1e-14);

  // rotation-only: the two rules coincide
  const FrameMap rot{GalileiElement{0.3, {0.1, 0, -0.2}, Vector3d::Zero(),
                                    rng.rotation()},
                     p};
  const auto Ar = random_gauge(rng);
  const auto c1 = boost_gauge_cov(rot, Ar);
  const auto c2 = boost_gauge_contra(rot, Ar);
  for (int i = 0; i < 20; ++i) {
    const auto y = random_point(rng);
    CHECK(std::abs(c1.a0.eval(y) - c2.a0.eval(y)) < 1e-13);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(c1.a[k].eval(y) - c2.a[k].eval(y)) < 1e-13);
    }
  }
}

TEST_CASE("magnetic limit example and derived-field consistency") {
  const ModelParams p{1.0, 1.0, 1.0};
  const FrameMap fm{GalileiElement{0, Vector3d::Zero(), {0.5, 0, 0},
                                   Matrix3d::Identity()},
                    p};
  FieldTriple E{FieldExpr{}, FieldExpr{}, FieldExpr{}};
  FieldTriple B{FieldExpr{}, FieldExpr{}, constant(1.0)};
  const auto [Ep, Bp] = transform_EB_magnetic(fm, E, B);
  Rng rng(17);
  const auto x = random_point(rng);
  CHECK(std::abs(Ep[0].eval(x)) < 1e-14);
  CHECK(std::abs(Ep[1].eval(x) - cplx(0.5)) < 1e-14);
  CHECK(std::abs(Ep[2].eval(x)) < 1e-14);
  CHECK(std::abs(Bp[2].eval(x) - cplx(1.0)) < 1e-14);

  // derive after transform equals transform after derive
  for (int trial = 0; trial < 8; ++trial) {
    const FrameMap f2 = random_frame(rng, p);
    const auto A = random_gauge(rng);
    const auto Ap = boost_gauge_cov(f2, A);
    const auto Ed = derive_E(Ap);
    const auto Bd = derive_B(Ap, p.c);
    const auto [Et, Bt] =
        transform_EB_magnetic(f2, derive_E(A), derive_B(A, p.c));
    for (int i = 0; i < 15; ++i) {
      const auto y = random_point(rng);
      for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(Ed[k].eval(y) - Et[k].eval(y)) < 1e-10);
        CHECK(std::abs(Bd[k].eval(y) - Bt[k].eval(y)) < 1e-10);
      }
    }
  }
}

TEST_CASE("electric and magnetic limits are not mutually inverse") {
  const ModelParams p{1.0, 1.0, 1.0};
  const FrameMap fm{GalileiElement{0, Vector3d::Zero(), {0.5, 0, 0},
                                   Matrix3d::Identity()},
                    p};
  const FrameMap back{inverse(fm.g), p};
  FieldTriple E{FieldExpr{}, FieldExpr{}, FieldExpr{}};
  FieldTriple B{FieldExpr{}, FieldExpr{}, constant(1.0)};
  const auto [Em, Bm] = transform_EB_magnetic(fm, E, B);
  const auto [Er, Br] = transform_EB_electric(back, Em, Bm);
  Rng rng(19);
  double dev = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto x = random_point(rng);
    for (int k = 0; k < 3; ++k) {
      dev = std::max(dev, std::abs(Er[k].eval(x) - E[k].eval(x)));
      dev = std::max(dev, std::abs(Br[k].eval(x) - B[k].eval(x)));
    }
  }
  CHECK(dev > 0.01);
}

TEST_CASE("current transform") {
  const ModelParams p{1.0, 1.0, 1.0};
  const FrameMap fm{GalileiElement{0, Vector3d::Zero(), {0.2, 0, 0},
                                   Matrix3d::Identity()},
                    p};
  CurrentField cur;
  cur.rho = constant(1.0);
  const auto out = transform_current(fm, cur);
  Rng rng(23);
  const auto x = random_point(rng);
  CHECK(std::abs(out.rho.eval(x) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(out.j[0].eval(x) - cplx(0.2)) < 1e-15);
  CHECK(std::abs(out.j[1].eval(x)) < 1e-15);

  // identity frame is exact
  const FrameMap id{GalileiElement::identity(), p};
  const auto same = transform_current(id, cur);
  CHECK(std::abs(same.rho.eval(x) - cplx(1.0)) == 0.0);
}

TEST_CASE("matter residual covariance") {
  const ModelParams p{1.2, 1.0, 0.9};
  Rng rng(29);
  const auto pts = random_points(rng, 40);
  for (int trial = 0; trial < 10; ++trial) {
    const FrameMap fm = random_frame(rng, p);
    CHECK(matter_covariance_check(fm, random_matter(rng), random_gauge(rng),
                                  pts) < 1e-9);
  }
  // identity frame: exactly zero
  const FrameMap id{GalileiElement::identity(), p};
  CHECK(matter_covariance_check(id, random_matter(rng), random_gauge(rng),
                                pts) < 1e-14);
}

TEST_CASE("gauge-field residual mapping under frame changes") {
  const ModelParams p{1.0, 1.0, 0.8};
  Rng rng(31);
  const auto pts = random_points(rng, 40);
  const auto fmx = GaugeScalarF::maxwell(p.c);
  const auto fq = GaugeScalarF::quartic(p.c, 0.1);
  for (int trial = 0; trial < 8; ++trial) {
    const FrameMap fm = random_frame(rng, p);
    const auto m = random_matter(rng);
    const auto A = random_gauge(rng);
    const auto rm = maxwell_covariance_check(fm, m, A, fmx, pts);
    CHECK(rm.gauss < 1e-8);
    CHECK(rm.ampere < 1e-8);
    const auto rq = maxwell_covariance_check(fm, m, A, fq, pts);
    CHECK(rq.gauss < 1e-7);
    CHECK(rq.ampere < 1e-7);
  }
}

TEST_CASE("primed potentials still satisfy the homogeneous equations") {
  const ModelParams p{1.0, 1.3, 1.0};
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const FrameMap fm = random_frame(rng, p);
    const auto Ap = boost_gauge_cov(fm, random_gauge(rng));
    for (int i = 0; i < 10; ++i) {
      const auto [div_B, faraday] =
          homogeneous_check(Ap, p, random_point(rng));
      CHECK(std::abs(div_B) < 1e-11);
      CHECK(faraday.norm() < 1e-11);
    }
  }
}

TEST_CASE("transformed sources match recomputed sources") {
  const ModelParams p{1.0, 1.0, 1.1};
  Rng rng(41);
  const auto pts = random_points(rng, 40);

  // plane wave with constant potentials
  const MatterConfig mpw{plane_wave(1.0, {1, 0, 0}, 0.6)};
  GaugeConfig Ac;
  Ac.a0 = constant(0.2);
  Ac.a[0] = constant(0.1);
  for (int trial = 0; trial < 5; ++trial) {
    const FrameMap fm = random_frame(rng, p);
    CHECK(current_transform_consistency(fm, mpw, Ac, pts) < 1e-10);
  }

  for (int trial = 0; trial < 8; ++trial) {
    const FrameMap fm = random_frame(rng, p);
    CHECK(current_transform_consistency(fm, random_matter(rng),
                                        random_gauge(rng), pts) < 1e-9);
  }

  // transformed pair still satisfies continuity when the original does
  const ModelParams pf{1.2, 1.0, 1.0};
  const MatterConfig packet{
      free_gaussian_packet(1.2, 1.0, {0, 0.1, 0}, {0.4, -0.2, 0.3})};
  for (int trial = 0; trial < 5; ++trial) {
    const FrameMap fm = random_frame(rng, pf);
    const auto mp = boost_matter(fm, packet);
    const auto Ap = boost_gauge_cov(fm, GaugeConfig{});
    for (int i = 0; i < 20; ++i) {
      CHECK(std::abs(continuity_residual(mp, Ap, pf, random_point(rng))) <
            1e-10);
    }
  }
}
