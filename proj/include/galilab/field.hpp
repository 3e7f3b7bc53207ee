#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <vector>

#include "galilab/group.hpp"
#include "galilab/jet.hpp"
#include "galilab/poly.hpp"

namespace galilab {

class FieldNode;

/// Immutable closed-form spacetime field, evaluable with exact derivative
/// jets. Closed under sums, products, conjugation, phase multiplication,
/// affine pullback and single derivatives.
class FieldExpr {
 public:
  FieldExpr();  // identically zero
  explicit FieldExpr(std::shared_ptr<const FieldNode> node)
      : node_(std::move(node)) {}

  /// Exact jet at a contravariant spacetime point. Throws std::range_error
  /// on overflow and std::invalid_argument on a covariant point.
  Jet eval_jet(const Spacetime4Vector& x) const;
  Jet eval_jet(const std::array<double, 4>& x) const;
  cplx eval(const Spacetime4Vector& x) const { return eval_jet(x).v; }

  const std::shared_ptr<const FieldNode>& node() const { return node_; }

 private:
  std::shared_ptr<const FieldNode> node_;
};

// --- field families ---

/// amp * exp(i (p.x - (E/c) x0))
FieldExpr plane_wave(cplx amp, const Vector3d& p, double E, double c = 1.0);

/// exp(-((x0-c0)^2 + |x-c|^2) / (2 sigma^2)), real
FieldExpr gaussian_bump(double sigma, const std::array<double, 4>& center);

/// Spreading Gaussian solution of the free Schroedinger equation
/// i c d0 psi = -(1/2m) lap psi, with t = x0/c:
///   psi = (sigma^2/alpha)^{3/2} exp(-|x - x_c - (p0/m) t|^2 / (4 alpha)
///         + i (p0.x - E0 t)),  alpha = sigma^2 + i t/(2m),  E0 = p0^2/(2m).
FieldExpr free_gaussian_packet(double m, double sigma, const Vector3d& center,
                               const Vector3d& p0, double c = 1.0);

FieldExpr polynomial(const Poly4& p);
FieldExpr constant(cplx value);

// --- combinators ---

FieldExpr operator+(const FieldExpr& a, const FieldExpr& b);
FieldExpr operator-(const FieldExpr& a, const FieldExpr& b);
FieldExpr operator*(const FieldExpr& a, const FieldExpr& b);
FieldExpr operator*(cplx s, const FieldExpr& a);
inline FieldExpr operator*(const FieldExpr& a, cplx s) { return s * a; }

FieldExpr conj(const FieldExpr& a);
FieldExpr real_part(const FieldExpr& a);

/// exp(i theta(x)) * f; theta a real polynomial of degree <= 2. Nested
/// phases collapse additively.
FieldExpr phase_mul(const Poly4& theta, const FieldExpr& f);

/// f(L x + t); nested pullbacks collapse into a single affine map.
FieldExpr pullback(const FieldExpr& f,
                   const std::array<std::array<double, 4>, 4>& L,
                   const std::array<double, 4>& t);

/// d_mu f (one trusted jet order is consumed)
FieldExpr deriv(const FieldExpr& f, int mu);

// --- finite-difference oracle ---

/// Order-4 central-difference jet (value, d, dd only; order = 2). Used to
/// cross-validate exact jets.
Jet fd_jet(const FieldExpr& f, const Spacetime4Vector& x, double h);

// --- scenario field bundles ---

struct MatterConfig {
  FieldExpr psi;
};

struct GaugeConfig {
  FieldExpr a0;
  std::array<FieldExpr, 3> a;
};

/// E = grad A0 - d0 A
std::array<FieldExpr, 3> derive_E(const GaugeConfig& A);
/// c B = curl A
std::array<FieldExpr, 3> derive_B(const GaugeConfig& A, double c);

// --- grid sampling ---

struct GridSpec {
  int dim = 1;        // spatial dimensions sampled (1..3)
  int n = 16;         // points per axis
  double extent = 1;  // periodic box [0, extent)
  double x0 = 0.0;    // time slice
};

struct GridSample {
  GridSpec spec;
  std::vector<std::array<double, 4>> coords;  // row-major
  std::vector<cplx> values;
};

GridSample sample_on_grid(const FieldExpr& f, const GridSpec& spec);

/// CSV rows `x0,x1,x2,x3,re,im` at 17 significant digits.
void write_csv(const GridSample& s, std::ostream& out);

}  // namespace galilab
