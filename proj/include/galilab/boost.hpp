#pragma once

#include <functional>
#include <vector>

#include "galilab/eom.hpp"
#include "galilab/gauge.hpp"

namespace galilab {

/// A Galilei frame change together with the model constants needed for the
/// mass-dependent projective phase.
struct FrameMap {
  GalileiElement g;
  ModelParams params;
  CocycleVariant variant = CocycleVariant::R2OnA1;
};

struct AffineSpacetimeMap {
  std::array<std::array<double, 4>, 4> L{};
  std::array<double, 4> t{};
};

/// x -> x' of the frame change (the inverse group action) as an affine map.
AffineSpacetimeMap inverse_spacetime_map(const GalileiElement& g);

/// gamma(x') = mc(-R^{-1}beta . x' - (1/2)beta^2 x'^0 - (1/2)a.beta).
/// The integration constant makes the position realization projective with
/// the R2-on-a1 cocycle.
double gamma_phase(const FrameMap& fm, const Spacetime4Vector& xprime);

/// gamma(x'(x)) as a degree-1 polynomial in the unprimed coordinates.
Poly4 gamma_poly(const FrameMap& fm);

/// psi'(x) = e^{-i gamma(x')} psi(x'); exact jets via pullback + phase.
MatterConfig boost_matter(const FrameMap& fm, const MatterConfig& m);

/// Covariant rule: A'0(x) = A0(x') - R^{-1}beta . A(x'); A'(x) = R A(x').
GaugeConfig boost_gauge_cov(const FrameMap& fm, const GaugeConfig& A);

/// Contravariant rule: A'0(x) = A0(x'); A'(x) = R A(x') + beta A0(x').
GaugeConfig boost_gauge_contra(const FrameMap& fm, const GaugeConfig& A);

using FieldTriple = std::array<FieldExpr, 3>;

/// Magnetic limit: E' = RE - beta x (cRB), B' = RB (arguments at x').
std::pair<FieldTriple, FieldTriple> transform_EB_magnetic(
    const FrameMap& fm, const FieldTriple& E, const FieldTriple& B);

/// Electric limit: E' = RE, B' = RB + (1/c) beta x (RE).
std::pair<FieldTriple, FieldTriple> transform_EB_electric(
    const FrameMap& fm, const FieldTriple& E, const FieldTriple& B);

/// 4-current (c rho, j) under the natural representation:
/// rho'(x) = rho(x'), j'(x) = R j(x') + c beta rho(x').
CurrentField transform_current(const FrameMap& fm, const CurrentField& cur);

using MomentumWavefunction = std::function<cplx(const Vector3d&)>;

/// (U(g) phi)(p) = exp[-i((1/2)mc a.beta + a.(R p') - b E(p)/c)] phi(p')
/// with p' = R^{-1}(p - mc beta) and E(p) = p^2/2m.
MomentumWavefunction momentum_rep(const FrameMap& fm,
                                  MomentumWavefunction phi);

/// Max |SchRes[psi',A'](x) - e^{-i gamma(x')} SchRes[psi,A](x')| over points.
double matter_covariance_check(const FrameMap& fm, const MatterConfig& m,
                               const GaugeConfig& A,
                               const std::vector<Spacetime4Vector>& points);

struct MaxwellCovarianceReport {
  double gauss = 0.0;
  double ampere = 0.0;
};

/// Off-shell mapping of the gauge-field residuals under the magnetic-limit
/// frame change, with u = R^{-1}beta:
///   GaussRes[primed](x)  = gauss_residual(original, x', u)
///   AmpRes[primed](x)    = R ampere_residual(original, x', u)
///                          + beta gauss_residual(original, x', u).
/// Returns the max deviations of both identities over the points.
MaxwellCovarianceReport maxwell_covariance_check(
    const FrameMap& fm, const MatterConfig& m, const GaugeConfig& A,
    const GaugeScalarF& f, const std::vector<Spacetime4Vector>& points);

/// Max deviation between (rho, j) recomputed from the primed configuration
/// and transform_current of the original (rho, j).
double current_transform_consistency(
    const FrameMap& fm, const MatterConfig& m, const GaugeConfig& A,
    const std::vector<Spacetime4Vector>& points);

}  // namespace galilab
