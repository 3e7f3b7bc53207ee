#pragma once

#include <functional>
#include <vector>

#include "galilab/field.hpp"

namespace galilab {

/// Real polynomial gauge parameter of degree <= 2, so jets stay exact.
class GaugeFunction {
 public:
  explicit GaugeFunction(Poly4 lambda);
  const Poly4& lambda() const { return lambda_; }

 private:
  Poly4 lambda_;
};

/// psi -> e^{-i lambda0} psi
MatterConfig apply_global_u1(double lambda0, const MatterConfig& m);

/// psi -> e^{-i lambda(x)} psi, A0 -> A0 + (1/q) d0 lambda,
/// A -> A + (1/q) grad lambda. Throws for q = 0.
std::pair<MatterConfig, GaugeConfig> apply_local_u1(const GaugeFunction& lam,
                                                    const MatterConfig& m,
                                                    const GaugeConfig& A,
                                                    double q);

struct ProbabilityCurrent {
  FieldExpr density;                 // c psi* psi
  std::array<FieldExpr, 3> current;  // (i/2m)(psi grad psi* - psi* grad psi)
  FieldExpr divergence;              // d0 density + div current
};

ProbabilityCurrent u1_probability_current(const MatterConfig& m, double mass,
                                          double c);

/// Pointwise Lagrangian as a function of field values and first derivatives,
/// with each component (e.g. psi and psi*) an independent holomorphic slot.
using LagrangianEvaluator =
    std::function<cplx(const std::array<double, 4>& x,
                       const std::vector<cplx>& phi,
                       const std::vector<std::array<cplx, 4>>& dphi)>;

/// Free matter Lagrangian (ic/2)(phi1 d0 phi0 - phi0 d0 phi1)
/// - (1/2m) grad phi0 . grad phi1 on the component list {psi, psi*}.
LagrangianEvaluator free_matter_lagrangian(double mass, double c);

/// Infinitesimal symmetry data: field variations (one per component, may
/// depend on the field values) and a constant coordinate variation.
struct SymmetrySpec {
  std::function<cplx(int component, const std::array<double, 4>& x,
                     const std::vector<cplx>& phi)>
      field_variation;                       // null means zero
  std::array<double, 4> coord_variation{};   // chi^mu

  static SymmetrySpec time_translation();
  static SymmetrySpec space_translation(int i);  // i in 1..3
  /// variations i*phi0, -i*phi1 on the component list {psi, psi*}
  static SymmetrySpec global_u1();
};

/// Numerical four-divergence of the Noether current
///   J^nu = sum_l dL/d(d_nu phi_l) (Lambda_l - chi^mu d_mu phi_l) + chi^nu L
/// at x. dL/d(d_nu phi_l) is taken by order-4 finite differences in the
/// argument slots; d_nu J^nu by order-6 differences in x. Near zero only for
/// on-shell fields. Throws if a field cannot supply first derivatives.
double noether_divergence(const LagrangianEvaluator& L,
                          const SymmetrySpec& spec,
                          const std::vector<FieldExpr>& fields,
                          const Spacetime4Vector& x);

}  // namespace galilab
