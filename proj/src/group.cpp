#include "galilab/group.hpp"

namespace galilab {

namespace {
constexpr double kOrthoTol = 1e-12;

Matrix3d project_so3(const Matrix3d& R) {
  Eigen::JacobiSVD<Matrix3d> svd(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix3d P = svd.matrixU() * svd.matrixV().transpose();
  if (P.determinant() < 0.0) {
    Matrix3d flip = Matrix3d::Identity();
    flip(2, 2) = -1.0;
    P = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return P;
}
}  // namespace

double orthogonality_defect(const Matrix3d& R) {
  return (R.transpose() * R - Matrix3d::Identity())
      .cwiseAbs()
      .maxCoeff();
}

GalileiElement make_element(double b, const Vector3d& a, const Vector3d& beta,
                            const Matrix3d& R) {
  if (R.determinant() < 0.0) {
    throw std::invalid_argument("rotation has negative determinant");
  }
  if (orthogonality_defect(R) > 1e-6) {
    throw std::invalid_argument("matrix is not close to orthogonal");
  }
  Matrix3d Rn = R;
  if (orthogonality_defect(Rn) > kOrthoTol ||
      std::abs(Rn.determinant() - 1.0) > kOrthoTol) {
    Rn = project_so3(Rn);
  }
  return {b, a, beta, Rn};
}

GalileiElement compose(const GalileiElement& g2, const GalileiElement& g1) {
  GalileiElement g;
  g.b = g1.b + g2.b;
  g.a = g2.a + g2.R * g1.a + g1.b * g2.beta;
  g.beta = g2.beta + g2.R * g1.beta;
  g.R = g2.R * g1.R;
  if (orthogonality_defect(g.R) > kOrthoTol) g.R = project_so3(g.R);
  return g;
}

GalileiElement inverse(const GalileiElement& g) {
  const Matrix3d Rinv = g.R.transpose();
  return {-g.b, -(Rinv * (g.a - g.b * g.beta)), -(Rinv * g.beta), Rinv};
}

Decomposition decompose(const GalileiElement& g) {
  return {GalileiElement{g.b, g.a, Vector3d::Zero(), Matrix3d::Identity()},
          GalileiElement{0.0, Vector3d::Zero(), g.beta, g.R}};
}

Spacetime4Vector act_spacetime(const GalileiElement& g,
                               const Spacetime4Vector& x) {
  if (x.variance != Variance::Contravariant) {
    throw std::invalid_argument("act_spacetime requires a contravariant vector");
  }
  return Spacetime4Vector::contra(x.x0 + g.b,
                                  g.R * x.xs + g.beta * x.x0 + g.a);
}

Spacetime4Vector act_inverse(const GalileiElement& g,
                             const Spacetime4Vector& x) {
  if (x.variance != Variance::Contravariant) {
    throw std::invalid_argument("act_inverse requires a contravariant vector");
  }
  const Matrix3d Rinv = g.R.transpose();
  return Spacetime4Vector::contra(
      x.x0 - g.b,
      Rinv * x.xs - (Rinv * g.beta) * x.x0 - Rinv * (g.a - g.b * g.beta));
}

Rep4Matrix rep_D(const GalileiElement& g) {
  Rep4Matrix m;
  m.kind = RepKind::D;
  m.entries.setZero();
  m.entries(0, 0) = 1.0;
  m.entries.block<3, 1>(1, 0) = g.beta;
  m.entries.block<3, 3>(1, 1) = g.R;
  return m;
}

Rep4Matrix rep_C(const GalileiElement& g) {
  Rep4Matrix m;
  m.kind = RepKind::C;
  m.entries.setZero();
  m.entries(0, 0) = 1.0;
  m.entries.block<1, 3>(0, 1) = -(g.R.transpose() * g.beta).transpose();
  m.entries.block<3, 3>(1, 1) = g.R;
  return m;
}

Spacetime4Vector transform_vec(const GalileiElement& g,
                               const Spacetime4Vector& v) {
  const Rep4Matrix rep =
      v.variance == Variance::Contravariant ? rep_D(g) : rep_C(g);
  Vector4d in;
  in << v.x0, v.xs;
  const Vector4d out = rep.entries * in;
  return {out(0), out.tail<3>(), v.variance};
}

double pairing(const Spacetime4Vector& xup, const Spacetime4Vector& ydown) {
  if (xup.variance != Variance::Contravariant ||
      ydown.variance != Variance::Covariant) {
    throw std::invalid_argument("pairing requires (contravariant, covariant)");
  }
  return xup.x0 * ydown.x0 + xup.xs.dot(ydown.xs);
}

double cocycle_omega(const GalileiElement& g2, const GalileiElement& g1,
                     double m, double c, CocycleVariant variant) {
  const Matrix3d& X = variant == CocycleVariant::AsWritten ? g1.R : g2.R;
  return 0.5 * m * c *
         (g2.a.dot(g2.R * g1.beta) - g2.beta.dot(X * g1.a) +
          g1.b * g2.beta.dot(g2.R * g1.beta));
}

LorentzClosureReport first_order_lorentz_closure_demo(double beta1,
                                                      double beta2) {
  if (std::abs(beta1) >= 1.0 || std::abs(beta2) >= 1.0) {
    throw std::invalid_argument("|beta| must be < 1");
  }
  Eigen::Matrix2d m1, m2;
  m1 << 1.0, -beta1, -beta1, 1.0;
  m2 << 1.0, -beta2, -beta2, 1.0;
  const Eigen::Matrix2d composed = m1 * m2;
  // the family has unit diagonal; the composed map does not
  return {composed, composed(0, 0) - 1.0};
}

GalileiElement random_element(Rng& rng, const RandomElementOptions& opts) {
  GalileiElement g;
  g.R = rng.rotation();
  g.beta = rng.uniform(0.0, opts.max_norm_beta) * rng.vec3(-1, 1).normalized();
  if (opts.with_translations) {
    g.b = rng.uniform(-opts.max_abs_b, opts.max_abs_b);
    g.a = rng.uniform(0.0, opts.max_norm_a) * rng.vec3(-1, 1).normalized();
  }
  return g;
}

}  // namespace galilab
