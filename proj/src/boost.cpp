#include "galilab/boost.hpp"

#include <cmath>

namespace galilab {

namespace {

FieldExpr pull(const FieldExpr& f, const AffineSpacetimeMap& m) {
  return pullback(f, m.L, m.t);
}

}  // namespace

AffineSpacetimeMap inverse_spacetime_map(const GalileiElement& g) {
  const Matrix3d Rinv = g.R.transpose();
  const Vector3d u = Rinv * g.beta;
  const Vector3d shift = Rinv * (g.a - g.b * g.beta);
  AffineSpacetimeMap m;
  m.L[0][0] = 1.0;
  m.t[0] = -g.b;
  for (int i = 0; i < 3; ++i) {
    m.L[i + 1][0] = -u(i);
    for (int j = 0; j < 3; ++j) m.L[i + 1][j + 1] = Rinv(i, j);
    m.t[i + 1] = -shift(i);
  }
  return m;
}

double gamma_phase(const FrameMap& fm, const Spacetime4Vector& xprime) {
  if (xprime.variance != Variance::Contravariant) {
    throw std::invalid_argument("gamma_phase requires a contravariant point");
  }
  const double mc = fm.params.m * fm.params.c;
  const Vector3d u = fm.g.R.transpose() * fm.g.beta;
  return mc * (-u.dot(xprime.xs) - 0.5 * fm.g.beta.squaredNorm() * xprime.x0 -
               0.5 * fm.g.a.dot(fm.g.beta));
}

Poly4 gamma_poly(const FrameMap& fm) {
  const double mc = fm.params.m * fm.params.c;
  const Vector3d u = fm.g.R.transpose() * fm.g.beta;
  const Poly4 in_primed = Poly4::affine(
      -0.5 * mc * fm.g.a.dot(fm.g.beta),
      {-0.5 * mc * fm.g.beta.squaredNorm(), -mc * u(0), -mc * u(1),
       -mc * u(2)});
  const AffineSpacetimeMap m = inverse_spacetime_map(fm.g);
  return in_primed.compose_affine(m.L, m.t);
}

MatterConfig boost_matter(const FrameMap& fm, const MatterConfig& m) {
  const AffineSpacetimeMap map = inverse_spacetime_map(fm.g);
  return {phase_mul(gamma_poly(fm) * cplx(-1.0), pull(m.psi, map))};
}

GaugeConfig boost_gauge_cov(const FrameMap& fm, const GaugeConfig& A) {
  const AffineSpacetimeMap map = inverse_spacetime_map(fm.g);
  const Vector3d u = fm.g.R.transpose() * fm.g.beta;
  GaugeConfig out;
  out.a0 = pull(A.a0, map);
  std::array<FieldExpr, 3> pulled;
  for (int i = 0; i < 3; ++i) {
    pulled[i] = pull(A.a[i], map);
    out.a0 = out.a0 - cplx(u(i)) * pulled[i];
  }
  for (int i = 0; i < 3; ++i) {
    out.a[i] = cplx(fm.g.R(i, 0)) * pulled[0] + cplx(fm.g.R(i, 1)) * pulled[1] +
               cplx(fm.g.R(i, 2)) * pulled[2];
  }
  return out;
}

GaugeConfig boost_gauge_contra(const FrameMap& fm, const GaugeConfig& A) {
  const AffineSpacetimeMap map = inverse_spacetime_map(fm.g);
  GaugeConfig out;
  out.a0 = pull(A.a0, map);
  std::array<FieldExpr, 3> pulled;
  for (int i = 0; i < 3; ++i) pulled[i] = pull(A.a[i], map);
  for (int i = 0; i < 3; ++i) {
    out.a[i] = cplx(fm.g.R(i, 0)) * pulled[0] + cplx(fm.g.R(i, 1)) * pulled[1] +
               cplx(fm.g.R(i, 2)) * pulled[2] + cplx(fm.g.beta(i)) * out.a0;
  }
  return out;
}

namespace {

FieldTriple rotate_pulled(const Matrix3d& R, const FieldTriple& v,
                          const AffineSpacetimeMap& map) {
  FieldTriple pulled;
  for (int i = 0; i < 3; ++i) pulled[i] = pull(v[i], map);
  FieldTriple out;
  for (int i = 0; i < 3; ++i) {
    out[i] = cplx(R(i, 0)) * pulled[0] + cplx(R(i, 1)) * pulled[1] +
             cplx(R(i, 2)) * pulled[2];
  }
  return out;
}

FieldTriple cross_with(const Vector3d& v, const FieldTriple& f) {
  FieldTriple out;
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    out[i] = cplx(v(a)) * f[b] - cplx(v(b)) * f[a];
  }
  return out;
}

}  // namespace

std::pair<FieldTriple, FieldTriple> transform_EB_magnetic(
    const FrameMap& fm, const FieldTriple& E, const FieldTriple& B) {
  const AffineSpacetimeMap map = inverse_spacetime_map(fm.g);
  const FieldTriple RE = rotate_pulled(fm.g.R, E, map);
  const FieldTriple RB = rotate_pulled(fm.g.R, B, map);
  const FieldTriple drift = cross_with(fm.g.beta, RB);
  FieldTriple Ep;
  for (int i = 0; i < 3; ++i) Ep[i] = RE[i] - cplx(fm.params.c) * drift[i];
  return {Ep, RB};
}

std::pair<FieldTriple, FieldTriple> transform_EB_electric(
    const FrameMap& fm, const FieldTriple& E, const FieldTriple& B) {
  const AffineSpacetimeMap map = inverse_spacetime_map(fm.g);
  const FieldTriple RE = rotate_pulled(fm.g.R, E, map);
  const FieldTriple RB = rotate_pulled(fm.g.R, B, map);
  const FieldTriple drift = cross_with(fm.g.beta, RE);
  FieldTriple Bp;
  for (int i = 0; i < 3; ++i) Bp[i] = RB[i] + cplx(1.0 / fm.params.c) * drift[i];
  return {RE, Bp};
}

CurrentField transform_current(const FrameMap& fm, const CurrentField& cur) {
  const AffineSpacetimeMap map = inverse_spacetime_map(fm.g);
  CurrentField out;
  out.rho = pull(cur.rho, map);
  const FieldTriple Rj = rotate_pulled(fm.g.R, cur.j, map);
  for (int i = 0; i < 3; ++i) {
    out.j[i] = Rj[i] + cplx(fm.params.c * fm.g.beta(i)) * out.rho;
  }
  return out;
}

MomentumWavefunction momentum_rep(const FrameMap& fm,
                                  MomentumWavefunction phi) {
  const GalileiElement g = fm.g;
  const ModelParams p = fm.params;
  return [g, p, phi = std::move(phi)](const Vector3d& mom) -> cplx {
    const double mc = p.m * p.c;
    const Vector3d pp = g.R.transpose() * (mom - mc * g.beta);
    const double energy = mom.squaredNorm() / (2.0 * p.m);
    const double phase = 0.5 * mc * g.a.dot(g.beta) + g.a.dot(g.R * pp) -
                         g.b * energy / p.c;
    return std::exp(cplx(0, -phase)) * phi(pp);
  };
}

double matter_covariance_check(const FrameMap& fm, const MatterConfig& m,
                               const GaugeConfig& A,
                               const std::vector<Spacetime4Vector>& points) {
  const MatterConfig mp = boost_matter(fm, m);
  const GaugeConfig Ap = boost_gauge_cov(fm, A);
  double worst = 0.0;
  for (const auto& x : points) {
    const Spacetime4Vector xp = act_inverse(fm.g, x);
    const cplx lhs = sch_residual(mp, Ap, fm.params, x);
    const cplx rhs = std::exp(cplx(0, -gamma_phase(fm, xp))) *
                     sch_residual(m, A, fm.params, xp);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

MaxwellCovarianceReport maxwell_covariance_check(
    const FrameMap& fm, const MatterConfig& m, const GaugeConfig& A,
    const GaugeScalarF& f, const std::vector<Spacetime4Vector>& points) {
  const MatterConfig mp = boost_matter(fm, m);
  const GaugeConfig Ap = boost_gauge_cov(fm, A);
  const Vector3d u = fm.g.R.transpose() * fm.g.beta;
  MaxwellCovarianceReport rep;
  for (const auto& x : points) {
    const Spacetime4Vector xp = act_inverse(fm.g, x);
    const double gauss_drifted = gauss_residual(A, m, f, fm.params, xp, u);
    rep.gauss = std::max(rep.gauss,
                         std::abs(gauss_residual(Ap, mp, f, fm.params, x) -
                                  gauss_drifted));
    const Vector3d amp_expected =
        fm.g.R * ampere_residual(A, m, f, fm.params, xp, u) +
        fm.g.beta * gauss_drifted;
    rep.ampere = std::max(
        rep.ampere,
        (ampere_residual(Ap, mp, f, fm.params, x) - amp_expected).norm());
  }
  return rep;
}

double current_transform_consistency(
    const FrameMap& fm, const MatterConfig& m, const GaugeConfig& A,
    const std::vector<Spacetime4Vector>& points) {
  const MatterConfig mp = boost_matter(fm, m);
  const GaugeConfig Ap = boost_gauge_cov(fm, A);
  const CurrentField primed = current_field(mp, Ap, fm.params);
  const CurrentField mapped =
      transform_current(fm, current_field(m, A, fm.params));
  double worst = 0.0;
  for (const auto& x : points) {
    worst = std::max(worst, std::abs(primed.rho.eval(x) - mapped.rho.eval(x)));
    for (int k = 0; k < 3; ++k) {
      worst =
          std::max(worst, std::abs(primed.j[k].eval(x) - mapped.j[k].eval(x)));
    }
  }
  return worst;
}

}  // namespace galilab
