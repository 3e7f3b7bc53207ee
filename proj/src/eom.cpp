#include "galilab/eom.hpp"

#include <cmath>

namespace galilab {

namespace {

double real_checked(cplx z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z.real()))) {
    throw std::invalid_argument(std::string(what) + " must be real");
  }
  return z.real();
}

constexpr int kEps[3][2] = {{1, 2}, {2, 0}, {0, 1}};  // cyclic pairs for curl

std::array<double, 4> coords(const Spacetime4Vector& x) {
  return {x.x0, x.xs(0), x.xs(1), x.xs(2)};
}

struct PotentialJets {
  Jet a0;
  std::array<Jet, 3> a;
};

PotentialJets eval_potentials(const GaugeConfig& A, const Spacetime4Vector& x) {
  PotentialJets pj;
  pj.a0 = A.a0.eval_jet(x);
  for (int i = 0; i < 3; ++i) pj.a[i] = A.a[i].eval_jet(x);
  return pj;
}

}  // namespace

void validate(const ModelParams& p) {
  if (!(p.m > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(p.c > 0.0)) throw std::invalid_argument("speed scale must be positive");
}

GaugeScalarF GaugeScalarF::maxwell(double c) {
  return custom([c](const Vector3d& E, const Vector3d& B) {
    FEval r;
    r.f = 0.5 * c * (E.squaredNorm() - B.squaredNorm());
    r.dE = c * E;
    r.dB = -c * B;
    r.dEE = c * Matrix3d::Identity();
    r.dBB = -c * Matrix3d::Identity();
    return r;
  });
}

GaugeScalarF GaugeScalarF::quartic(double c, double kappa) {
  return custom([c, kappa](const Vector3d& E, const Vector3d& B) {
    const double s = E.squaredNorm() - B.squaredNorm();
    const double g = c + 4.0 * kappa * s;
    FEval r;
    r.f = 0.5 * c * s + kappa * s * s;
    r.dE = g * E;
    r.dB = -g * B;
    r.dEE = g * Matrix3d::Identity() + 8.0 * kappa * E * E.transpose();
    r.dEB = -8.0 * kappa * E * B.transpose();
    r.dBB = -g * Matrix3d::Identity() + 8.0 * kappa * B * B.transpose();
    return r;
  });
}

GaugeScalarF GaugeScalarF::custom(
    std::function<FEval(const Vector3d&, const Vector3d&)> eval) {
  GaugeScalarF f;
  f.eval_ = std::move(eval);
  return f;
}

EBData eval_EB(const GaugeConfig& A, double c, const Spacetime4Vector& x) {
  const PotentialJets pj = eval_potentials(A, x);
  EBData r;
  for (int i = 0; i < 3; ++i) {
    r.E(i) = real_checked(pj.a0.d[i + 1] - pj.a[i].d[0], "gauge potential");
    const int a = kEps[i][0], b = kEps[i][1];
    r.B(i) = real_checked(pj.a[b].d[a + 1] - pj.a[a].d[b + 1],
                          "gauge potential") /
             c;
    for (int mu = 0; mu < 4; ++mu) {
      r.dE(i, mu) =
          real_checked(pj.a0.d2(i + 1, mu) - pj.a[i].d2(0, mu), "potential");
      r.dB(i, mu) = real_checked(
                        pj.a[b].d2(a + 1, mu) - pj.a[a].d2(b + 1, mu),
                        "potential") /
                    c;
    }
  }
  return r;
}

double lagrangian_free(const MatterConfig& m, const ModelParams& p,
                       const Spacetime4Vector& x) {
  validate(p);
  const Jet psi = m.psi.eval_jet(x);
  const cplx kinetic_t = cplx(0, 0.5 * p.c) * (std::conj(psi.v) * psi.d[0] -
                                               psi.v * std::conj(psi.d[0]));
  double grad = 0.0;
  for (int k = 1; k < 4; ++k) grad += std::norm(psi.d[k]);
  return kinetic_t.real() - grad / (2.0 * p.m);
}

double lagrangian_full(const MatterConfig& m, const GaugeConfig& A,
                       const GaugeScalarF& f, const ModelParams& p,
                       const Spacetime4Vector& x) {
  validate(p);
  const Jet psi = m.psi.eval_jet(x);
  const PotentialJets pj = eval_potentials(A, x);
  const cplx iq(0, p.q);
  const cplx D0 = psi.d[0] + iq * pj.a0.v * psi.v;
  const cplx kinetic_t =
      cplx(0, 0.5 * p.c) * (std::conj(psi.v) * D0 - psi.v * std::conj(D0));
  double grad = 0.0;
  for (int k = 0; k < 3; ++k) {
    grad += std::norm(psi.d[k + 1] + iq * pj.a[k].v * psi.v);
  }
  const EBData eb = eval_EB(A, p.c, x);
  return kinetic_t.real() - grad / (2.0 * p.m) + f(eb.E, eb.B).f;
}

cplx sch_residual(const MatterConfig& m, const GaugeConfig& A,
                  const ModelParams& p, const Spacetime4Vector& x) {
  validate(p);
  const Jet psi = m.psi.eval_jet(x);
  const PotentialJets pj = eval_potentials(A, x);
  const cplx iq(0, p.q);
  cplx lap = 0.0, div_a = 0.0, a_grad = 0.0, a_sq = 0.0;
  for (int k = 0; k < 3; ++k) {
    lap += psi.d2(k + 1, k + 1);
    div_a += pj.a[k].d[k + 1];
    a_grad += pj.a[k].v * psi.d[k + 1];
    a_sq += pj.a[k].v * pj.a[k].v;
  }
  const cplx covariant_lap =
      lap + iq * div_a * psi.v + 2.0 * iq * a_grad - p.q * p.q * a_sq * psi.v;
  return cplx(0, p.c) * (psi.d[0] + iq * pj.a0.v * psi.v) +
         covariant_lap / (2.0 * p.m);
}

double charge_density(const MatterConfig& m, const ModelParams& p,
                      const Spacetime4Vector& x) {
  return -p.q * std::norm(m.psi.eval(x));
}

Vector3d current_density(const MatterConfig& m, const GaugeConfig& A,
                         const ModelParams& p, const Spacetime4Vector& x) {
  validate(p);
  const Jet psi = m.psi.eval_jet(x);
  const PotentialJets pj = eval_potentials(A, x);
  Vector3d j;
  for (int k = 0; k < 3; ++k) {
    const cplx antisym = psi.v * std::conj(psi.d[k + 1]) -
                         std::conj(psi.v) * psi.d[k + 1] -
                         cplx(0, 2.0 * p.q) * pj.a[k].v * std::norm(psi.v);
    j(k) = (cplx(0, -p.q / (2.0 * p.m)) * antisym).real();
  }
  return j;
}

namespace {

// P = grad_E f and Q = grad_B f evaluated on (E - c u x B, B), together
// with their first spacetime derivatives by the chain rule.
struct FieldGradients {
  Vector3d P, Q;
  Eigen::Matrix<double, 3, 4> dP, dQ;
};

FieldGradients eval_PQ(const GaugeConfig& A, const GaugeScalarF& f,
                       const ModelParams& p, const Spacetime4Vector& x,
                       const Vector3d& u) {
  const EBData eb = eval_EB(A, p.c, x);
  const Vector3d Et = eb.E - p.c * u.cross(eb.B);
  Eigen::Matrix<double, 3, 4> dEt = eb.dE;
  for (int mu = 0; mu < 4; ++mu) {
    const Vector3d dBmu = eb.dB.col(mu);
    dEt.col(mu) -= p.c * u.cross(dBmu);
  }
  const FEval fe = f(Et, eb.B);
  FieldGradients r;
  r.P = fe.dE;
  r.Q = fe.dB;
  r.dP = fe.dEE * dEt + fe.dEB * eb.dB;
  r.dQ = fe.dEB.transpose() * dEt + fe.dBB * eb.dB;
  return r;
}

}  // namespace

double gauss_residual(const GaugeConfig& A, const MatterConfig& m,
                      const GaugeScalarF& f, const ModelParams& p,
                      const Spacetime4Vector& x, const Vector3d& u) {
  validate(p);
  const FieldGradients fg = eval_PQ(A, f, p, x, u);
  double div_P = 0.0;
  for (int i = 0; i < 3; ++i) div_P += fg.dP(i, i + 1);
  return div_P - p.c * charge_density(m, p, x);
}

Vector3d ampere_residual(const GaugeConfig& A, const MatterConfig& m,
                         const GaugeScalarF& f, const ModelParams& p,
                         const Spacetime4Vector& x, const Vector3d& u) {
  validate(p);
  const FieldGradients fg = eval_PQ(A, f, p, x, u);
  double div_P = 0.0;
  for (int i = 0; i < 3; ++i) div_P += fg.dP(i, i + 1);
  Vector3d r;
  for (int i = 0; i < 3; ++i) {
    const int a = kEps[i][0], b = kEps[i][1];
    const double curl_Q = fg.dQ(b, a + 1) - fg.dQ(a, b + 1);
    double advect = 0.0;
    for (int k = 0; k < 3; ++k) advect += u(k) * fg.dP(i, k + 1);
    r(i) = -fg.dP(i, 0) + advect - u(i) * div_P - curl_Q / p.c;
  }
  return r - current_density(m, A, p, x);
}

std::pair<double, Vector3d> homogeneous_check(const GaugeConfig& A,
                                              const ModelParams& p,
                                              const Spacetime4Vector& x) {
  validate(p);
  const EBData eb = eval_EB(A, p.c, x);
  double div_B = 0.0;
  for (int i = 0; i < 3; ++i) div_B += eb.dB(i, i + 1);
  Vector3d faraday;
  for (int i = 0; i < 3; ++i) {
    const int a = kEps[i][0], b = kEps[i][1];
    faraday(i) = eb.dE(b, a + 1) - eb.dE(a, b + 1) + p.c * eb.dB(i, 0);
  }
  return {div_B, faraday};
}

double continuity_residual(const MatterConfig& m, const GaugeConfig& A,
                           const ModelParams& p, const Spacetime4Vector& x) {
  validate(p);
  const Jet psi = m.psi.eval_jet(x);
  const PotentialJets pj = eval_potentials(A, x);
  const double d0_rho =
      -p.q * 2.0 * (std::conj(psi.v) * psi.d[0]).real();
  double div_j = 0.0;
  for (int k = 0; k < 3; ++k) {
    const cplx antisym_div = psi.v * std::conj(psi.d2(k + 1, k + 1)) -
                             std::conj(psi.v) * psi.d2(k + 1, k + 1);
    const double a_term =
        pj.a[k].d[k + 1].real() * std::norm(psi.v) +
        pj.a[k].v.real() * 2.0 * (std::conj(psi.v) * psi.d[k + 1]).real();
    div_j += (cplx(0, -p.q / (2.0 * p.m)) * antisym_div).real() -
             (p.q * p.q / p.m) * a_term;
  }
  return p.c * d0_rho + div_j;
}

Residuals all_residuals(const MatterConfig& m, const GaugeConfig& A,
                        const GaugeScalarF& f, const ModelParams& p,
                        const Spacetime4Vector& x) {
  return {sch_residual(m, A, p, x), gauss_residual(A, m, f, p, x),
          ampere_residual(A, m, f, p, x), continuity_residual(m, A, p, x)};
}

CurrentField current_field(const MatterConfig& m, const GaugeConfig& A,
                           const ModelParams& p) {
  CurrentField out;
  const FieldExpr psi = m.psi;
  const FieldExpr psib = conj(psi);
  out.rho = real_part(cplx(-p.q) * psi * psib);
  const cplx pre(0, -p.q / (2.0 * p.m));
  for (int i = 0; i < 3; ++i) {
    out.j[i] = real_part(pre * (psi * deriv(psib, i + 1) -
                                psib * deriv(psi, i + 1) -
                                cplx(0, 2.0 * p.q) * A.a[i] * psi * psib));
  }
  return out;
}

}  // namespace galilab
