#pragma once

#include <functional>

#include "galilab/field.hpp"

namespace galilab {

struct ModelParams {
  double m = 1.0;  // mass
  double c = 1.0;  // speed scale
  double q = 1.0;  // U(1) coupling
};

/// Throws std::invalid_argument unless m > 0 and c > 0.
void validate(const ModelParams& p);

/// Value, gradients and Hessian blocks of a rotation-scalar f(E, B).
struct FEval {
  double f = 0.0;
  Vector3d dE = Vector3d::Zero();
  Vector3d dB = Vector3d::Zero();
  Matrix3d dEE = Matrix3d::Zero();
  Matrix3d dEB = Matrix3d::Zero();  // dEB(i, j) = d2 f / dE_i dB_j
  Matrix3d dBB = Matrix3d::Zero();
};

class GaugeScalarF {
 public:
  /// f = (c/2)(E^2 - B^2)
  static GaugeScalarF maxwell(double c);
  /// f = (c/2)(E^2 - B^2) + kappa (E^2 - B^2)^2
  static GaugeScalarF quartic(double c, double kappa);
  /// Caller supplies analytic gradients and Hessians.
  static GaugeScalarF custom(
      std::function<FEval(const Vector3d&, const Vector3d&)> eval);

  FEval operator()(const Vector3d& E, const Vector3d& B) const {
    return eval_(E, B);
  }

 private:
  GaugeScalarF() = default;
  std::function<FEval(const Vector3d&, const Vector3d&)> eval_;
};

/// E, B and their first spacetime derivatives, read off the potentials'
/// exact jets. dE(i, mu) = d_mu E_i. Throws if the potentials are not real.
struct EBData {
  Vector3d E = Vector3d::Zero();
  Vector3d B = Vector3d::Zero();
  Eigen::Matrix<double, 3, 4> dE = Eigen::Matrix<double, 3, 4>::Zero();
  Eigen::Matrix<double, 3, 4> dB = Eigen::Matrix<double, 3, 4>::Zero();
};

EBData eval_EB(const GaugeConfig& A, double c, const Spacetime4Vector& x);

/// (ic/2)(psi* d0 psi - psi d0 psi*) - (1/2m) grad psi . grad psi*
double lagrangian_free(const MatterConfig& m, const ModelParams& p,
                       const Spacetime4Vector& x);

/// Minimally coupled matter Lagrangian plus f(E, B).
double lagrangian_full(const MatterConfig& m, const GaugeConfig& A,
                       const GaugeScalarF& f, const ModelParams& p,
                       const Spacetime4Vector& x);

/// ic (d0 + i q A0) psi + (1/2m)(grad + i q A)^2 psi; zero on-shell.
cplx sch_residual(const MatterConfig& m, const GaugeConfig& A,
                  const ModelParams& p, const Spacetime4Vector& x);

/// rho = -q psi* psi
double charge_density(const MatterConfig& m, const ModelParams& p,
                      const Spacetime4Vector& x);

/// j = -(iq/2m){psi (grad - iqA) psi* - psi* (grad + iqA) psi}
Vector3d current_density(const MatterConfig& m, const GaugeConfig& A,
                         const ModelParams& p, const Spacetime4Vector& x);

/// div (grad_E f) - c rho, with grad_E f evaluated on the fields of A.
/// A nonzero frame drift u evaluates the gradient on the shifted electric
/// field E - c u x B instead; boosted-frame checks use this.
double gauss_residual(const GaugeConfig& A, const MatterConfig& m,
                      const GaugeScalarF& f, const ModelParams& p,
                      const Spacetime4Vector& x,
                      const Vector3d& u = Vector3d::Zero());

/// -d0(grad_E f) - (1/c) curl (grad_B f) - j, with the same optional frame
/// drift u: the gradients are taken on (E - c u x B, B) and the time
/// derivative becomes the advective d0 - u.grad plus u div(grad_E f).
Vector3d ampere_residual(const GaugeConfig& A, const MatterConfig& m,
                         const GaugeScalarF& f, const ModelParams& p,
                         const Spacetime4Vector& x,
                         const Vector3d& u = Vector3d::Zero());

/// (div B, curl E + d0(cB)); identically zero for potential-derived fields.
std::pair<double, Vector3d> homogeneous_check(const GaugeConfig& A,
                                              const ModelParams& p,
                                              const Spacetime4Vector& x);

/// c d0 rho + div j; vanishes on-shell.
double continuity_residual(const MatterConfig& m, const GaugeConfig& A,
                           const ModelParams& p, const Spacetime4Vector& x);

struct Residuals {
  cplx sch;
  double gauss;
  Vector3d ampere;
  double continuity;
};

Residuals all_residuals(const MatterConfig& m, const GaugeConfig& A,
                        const GaugeScalarF& f, const ModelParams& p,
                        const Spacetime4Vector& x);

/// rho and j as field expressions, for transforming and sampling.
struct CurrentField {
  FieldExpr rho;
  std::array<FieldExpr, 3> j;
};

CurrentField current_field(const MatterConfig& m, const GaugeConfig& A,
                           const ModelParams& p);

}  // namespace galilab
