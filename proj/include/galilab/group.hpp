#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "galilab/rng.hpp"

namespace galilab {

using Eigen::Matrix3d;
using Eigen::Matrix4d;
using Eigen::Vector3d;
using Eigen::Vector4d;

/// Galilei group element g(b, a, beta, R): time translation b (x0 units),
/// space translation a, boost beta = v/c, rotation R.
struct GalileiElement {
  double b = 0.0;
  Vector3d a = Vector3d::Zero();
  Vector3d beta = Vector3d::Zero();
  Matrix3d R = Matrix3d::Identity();

  static GalileiElement identity() { return {}; }
};

/// Largest |entry| of R^T R - I.
double orthogonality_defect(const Matrix3d& R);

/// Checks orthogonality and det R = +1 to 1e-12; re-projects R onto SO(3)
/// (polar decomposition) when drift exceeds the tolerance. Throws
/// std::invalid_argument for reflections or badly non-orthogonal input.
GalileiElement make_element(double b, const Vector3d& a, const Vector3d& beta,
                            const Matrix3d& R);

GalileiElement compose(const GalileiElement& g2, const GalileiElement& g1);
GalileiElement inverse(const GalileiElement& g);

/// g = translationPart * homogeneousPart with translationPart = (b, a, 0, I)
/// and homogeneousPart = (0, 0, beta, R).
struct Decomposition {
  GalileiElement translation;
  GalileiElement homogeneous;
};
Decomposition decompose(const GalileiElement& g);

enum class Variance { Contravariant, Covariant };

struct Spacetime4Vector {
  double x0 = 0.0;
  Vector3d xs = Vector3d::Zero();
  Variance variance = Variance::Contravariant;

  static Spacetime4Vector contra(double x0, const Vector3d& xs) {
    return {x0, xs, Variance::Contravariant};
  }
  static Spacetime4Vector cov(double x0, const Vector3d& xs) {
    return {x0, xs, Variance::Covariant};
  }
};

/// x~0 = x0 + b, x~ = R x + beta x0 + a. Requires contravariant x.
Spacetime4Vector act_spacetime(const GalileiElement& g,
                               const Spacetime4Vector& x);
/// x'0 = x0 - b, x' = R^-1 x - (R^-1 beta) x0 - R^-1 (a - b beta).
Spacetime4Vector act_inverse(const GalileiElement& g,
                             const Spacetime4Vector& x);

enum class RepKind { D, C };

struct Rep4Matrix {
  Matrix4d entries = Matrix4d::Identity();
  RepKind kind = RepKind::D;
};

/// Natural 4x4 representation of the homogeneous group: [[1,0],[beta,R]].
/// Only (beta, R) of g are used; translations are ignored.
Rep4Matrix rep_D(const GalileiElement& g);
/// Dual representation: [[1, -(R^-1 beta)^T],[0, R]].
Rep4Matrix rep_C(const GalileiElement& g);

/// Applies rep_D to contravariant vectors and rep_C to covariant ones;
/// variance tag is preserved.
Spacetime4Vector transform_vec(const GalileiElement& g,
                               const Spacetime4Vector& v);

/// Invariant pairing x^0 y_0 + x . y. Throws on a variance mismatch.
double pairing(const Spacetime4Vector& xup, const Spacetime4Vector& ydown);

/// Bargmann cocycle omega = (1/2) m c (a2.R2 b1 - b2.X a1 + b1 b2.R2 b1).
/// The source formula is ambiguous about X: AsWritten uses X = R1, R2OnA1
/// uses X = R2 (the variant consistent with the group law; see boostlab's
/// projective composition check, which selects it).
enum class CocycleVariant { AsWritten, R2OnA1 };

double cocycle_omega(const GalileiElement& g2, const GalileiElement& g1,
                     double m, double c,
                     CocycleVariant variant = CocycleVariant::R2OnA1);

/// First-order-in-beta Lorentz boost maps M(beta) = [[1,-b],[-b,1]] do not
/// close under composition: M(b1) M(b2) has diagonal 1 + b1 b2. Returns the
/// composed 2x2 matrix and the off-family defect b1*b2.
struct LorentzClosureReport {
  Eigen::Matrix2d composed;
  double defect;
};
LorentzClosureReport first_order_lorentz_closure_demo(double beta1,
                                                      double beta2);

struct RandomElementOptions {
  double max_abs_b = 2.0;
  double max_norm_a = 2.0;
  double max_norm_beta = 0.5;
  bool with_translations = true;  // false: homogeneous elements only
};

GalileiElement random_element(Rng& rng, const RandomElementOptions& opts = {});

}  // namespace galilab
