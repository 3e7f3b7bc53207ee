#include "galilab/field.hpp"

#include <cmath>
#include <ostream>

namespace galilab {

class FieldNode {
 public:
  virtual ~FieldNode() = default;
  virtual Jet eval(const std::array<double, 4>& x) const = 0;
};

namespace {

using Arr4 = std::array<double, 4>;
using Mat44 = std::array<std::array<double, 4>, 4>;

Jet coord_jet(int mu, const Arr4& x) { return Jet::coordinate(mu, x[mu]); }

class ZeroNode final : public FieldNode {
 public:
  Jet eval(const Arr4&) const override { return {}; }
};

class PolyNode final : public FieldNode {
 public:
  explicit PolyNode(Poly4 p) : p_(std::move(p)) {}
  Jet eval(const Arr4& x) const override { return p_.eval_jet(x); }
  const Poly4& poly() const { return p_; }

 private:
  Poly4 p_;
};

class PlaneWaveNode final : public FieldNode {
 public:
  PlaneWaveNode(cplx amp, const Vector3d& p, double E, double c)
      : amp_(amp), p_(p), E_(E), c_(c) {}
  Jet eval(const Arr4& x) const override {
    const cplx i(0.0, 1.0);
    Jet phase = i * (p_(0) * coord_jet(1, x) + p_(1) * coord_jet(2, x) +
                     p_(2) * coord_jet(3, x) - (E_ / c_) * coord_jet(0, x));
    return amp_ * exp(phase);
  }

 private:
  cplx amp_;
  Vector3d p_;
  double E_, c_;
};

class GaussianBumpNode final : public FieldNode {
 public:
  GaussianBumpNode(double sigma, const Arr4& center)
      : sigma_(sigma), center_(center) {}
  Jet eval(const Arr4& x) const override {
    Jet q = Jet::constant(0.0);
    for (int mu = 0; mu < 4; ++mu) {
      Jet u = coord_jet(mu, x) - cplx(center_[mu]);
      q = q + u * u;
    }
    return exp(cplx(-0.5 / (sigma_ * sigma_)) * q);
  }

 private:
  double sigma_;
  Arr4 center_;
};

class FreeGaussianPacketNode final : public FieldNode {
 public:
  FreeGaussianPacketNode(double m, double sigma, const Vector3d& center,
                         const Vector3d& p0, double c)
      : m_(m), sigma_(sigma), center_(center), p0_(p0), c_(c) {}
  Jet eval(const Arr4& x) const override {
    const cplx i(0.0, 1.0);
    const Jet t = cplx(1.0 / c_) * coord_jet(0, x);
    const Jet alpha = Jet::constant(sigma_ * sigma_) + (i / (2.0 * m_)) * t;
    Jet quad = Jet::constant(0.0);
    for (int k = 0; k < 3; ++k) {
      Jet u = coord_jet(k + 1, x) - cplx(center_(k)) - cplx(p0_(k) / m_) * t;
      quad = quad + u * u;
    }
    const double e0 = p0_.squaredNorm() / (2.0 * m_);
    Jet phase = i * (p0_(0) * coord_jet(1, x) + p0_(1) * coord_jet(2, x) +
                     p0_(2) * coord_jet(3, x) - e0 * t);
    // amplitude (sigma^2/alpha)^{3/2}; Re(alpha) = sigma^2 > 0 keeps the
    // principal log smooth
    Jet amp = exp(cplx(1.5) * (Jet::constant(std::log(sigma_ * sigma_)) - log(alpha)));
    return amp * exp(cplx(-0.25) * (quad * recip(alpha)) + phase);
  }

 private:
  double m_, sigma_;
  Vector3d center_, p0_;
  double c_;
};

class SumNode final : public FieldNode {
 public:
  SumNode(FieldExpr a, FieldExpr b) : a_(std::move(a)), b_(std::move(b)) {}
  Jet eval(const Arr4& x) const override {
    return a_.eval_jet(x) + b_.eval_jet(x);
  }

 private:
  FieldExpr a_, b_;
};

class ProductNode final : public FieldNode {
 public:
  ProductNode(FieldExpr a, FieldExpr b) : a_(std::move(a)), b_(std::move(b)) {}
  Jet eval(const Arr4& x) const override {
    return a_.eval_jet(x) * b_.eval_jet(x);
  }

 private:
  FieldExpr a_, b_;
};

class ScalarMulNode final : public FieldNode {
 public:
  ScalarMulNode(cplx s, FieldExpr a) : s_(s), a_(std::move(a)) {}
  Jet eval(const Arr4& x) const override { return s_ * a_.eval_jet(x); }

 private:
  cplx s_;
  FieldExpr a_;
};

class ConjNode final : public FieldNode {
 public:
  explicit ConjNode(FieldExpr a) : a_(std::move(a)) {}
  Jet eval(const Arr4& x) const override { return conj(a_.eval_jet(x)); }

 private:
  FieldExpr a_;
};

class RealPartNode final : public FieldNode {
 public:
  explicit RealPartNode(FieldExpr a) : a_(std::move(a)) {}
  Jet eval(const Arr4& x) const override { return real_part(a_.eval_jet(x)); }

 private:
  FieldExpr a_;
};

class PhaseMulNode final : public FieldNode {
 public:
  PhaseMulNode(Poly4 theta, FieldExpr child)
      : theta_(std::move(theta)), child_(std::move(child)) {}
  Jet eval(const Arr4& x) const override {
    return exp(cplx(0.0, 1.0) * theta_.eval_jet(x)) * child_.eval_jet(x);
  }
  const Poly4& theta() const { return theta_; }
  const FieldExpr& child() const { return child_; }

 private:
  Poly4 theta_;
  FieldExpr child_;
};

class PullbackNode final : public FieldNode {
 public:
  PullbackNode(Mat44 L, Arr4 t, FieldExpr child)
      : L_(L), t_(t), child_(std::move(child)) {}
  Jet eval(const Arr4& x) const override {
    Arr4 y = t_;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) y[mu] += L_[mu][nu] * x[nu];
    return pullback_affine(child_.eval_jet(y), L_);
  }
  const Mat44& L() const { return L_; }
  const Arr4& t() const { return t_; }
  const FieldExpr& child() const { return child_; }

 private:
  Mat44 L_;
  Arr4 t_;
  FieldExpr child_;
};

class DerivNode final : public FieldNode {
 public:
  DerivNode(int mu, FieldExpr child) : mu_(mu), child_(std::move(child)) {}
  Jet eval(const Arr4& x) const override {
    return shift_derivative(child_.eval_jet(x), mu_);
  }

 private:
  int mu_;
  FieldExpr child_;
};

}  // namespace

FieldExpr::FieldExpr() : node_(std::make_shared<ZeroNode>()) {}

Jet FieldExpr::eval_jet(const std::array<double, 4>& x) const {
  Jet j = node_->eval(x);
  if (!std::isfinite(j.v.real()) || !std::isfinite(j.v.imag())) {
    throw std::range_error("field evaluation overflowed");
  }
  return j;
}

Jet FieldExpr::eval_jet(const Spacetime4Vector& x) const {
  if (x.variance != Variance::Contravariant) {
    throw std::invalid_argument("fields are evaluated at contravariant points");
  }
  return eval_jet(std::array<double, 4>{x.x0, x.xs(0), x.xs(1), x.xs(2)});
}

FieldExpr plane_wave(cplx amp, const Vector3d& p, double E, double c) {
  return FieldExpr(std::make_shared<PlaneWaveNode>(amp, p, E, c));
}

FieldExpr gaussian_bump(double sigma, const std::array<double, 4>& center) {
  return FieldExpr(std::make_shared<GaussianBumpNode>(sigma, center));
}

FieldExpr free_gaussian_packet(double m, double sigma, const Vector3d& center,
                               const Vector3d& p0, double c) {
  return FieldExpr(
      std::make_shared<FreeGaussianPacketNode>(m, sigma, center, p0, c));
}

FieldExpr polynomial(const Poly4& p) {
  return FieldExpr(std::make_shared<PolyNode>(p));
}

FieldExpr constant(cplx value) { return polynomial(Poly4(value)); }

FieldExpr operator+(const FieldExpr& a, const FieldExpr& b) {
  return FieldExpr(std::make_shared<SumNode>(a, b));
}

FieldExpr operator-(const FieldExpr& a, const FieldExpr& b) {
  return a + cplx(-1.0) * b;
}

FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) {
  return FieldExpr(std::make_shared<ProductNode>(a, b));
}

FieldExpr operator*(cplx s, const FieldExpr& a) {
  return FieldExpr(std::make_shared<ScalarMulNode>(s, a));
}

FieldExpr conj(const FieldExpr& a) {
  return FieldExpr(std::make_shared<ConjNode>(a));
}

FieldExpr real_part(const FieldExpr& a) {
  return FieldExpr(std::make_shared<RealPartNode>(a));
}

FieldExpr phase_mul(const Poly4& theta, const FieldExpr& f) {
  if (!theta.is_real() || theta.degree() > 2) {
    throw std::invalid_argument("phase must be a real polynomial of degree <= 2");
  }
  if (auto inner = dynamic_cast<const PhaseMulNode*>(f.node().get())) {
    return FieldExpr(std::make_shared<PhaseMulNode>(theta + inner->theta(),
                                                    inner->child()));
  }
  return FieldExpr(std::make_shared<PhaseMulNode>(theta, f));
}

FieldExpr pullback(const FieldExpr& f,
                   const std::array<std::array<double, 4>, 4>& L,
                   const std::array<double, 4>& t) {
  if (auto inner = dynamic_cast<const PullbackNode*>(f.node().get())) {
    // f1(L1 y + t1) at y = L x + t collapses to f1(L1 L x + L1 t + t1)
    std::array<std::array<double, 4>, 4> Lc{};
    std::array<double, 4> tc = inner->t();
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        for (int k = 0; k < 4; ++k) Lc[m][n] += inner->L()[m][k] * L[k][n];
        tc[m] += inner->L()[m][n] * t[n];
      }
    return FieldExpr(std::make_shared<PullbackNode>(Lc, tc, inner->child()));
  }
  return FieldExpr(std::make_shared<PullbackNode>(L, t, f));
}

FieldExpr deriv(const FieldExpr& f, int mu) {
  if (auto p = dynamic_cast<const PolyNode*>(f.node().get())) {
    return polynomial(p->poly().derivative(mu));
  }
  return FieldExpr(std::make_shared<DerivNode>(mu, f));
}

Jet fd_jet(const FieldExpr& f, const Spacetime4Vector& x, double h) {
  if (h <= 0.0) throw std::invalid_argument("fd_jet requires h > 0");
  const Arr4 x0{x.x0, x.xs(0), x.xs(1), x.xs(2)};
  auto at = [&](int mu, int nu, int smu, int snu) {
    Arr4 y = x0;
    y[mu] += smu * h;
    if (nu >= 0) y[nu] += snu * h;
    return f.eval_jet(y).v;
  };
  Jet j;
  j.order = 2;
  j.v = f.eval_jet(x0).v;
  for (int mu = 0; mu < 4; ++mu) {
    j.d[mu] = (-at(mu, -1, 2, 0) + 8.0 * at(mu, -1, 1, 0) -
               8.0 * at(mu, -1, -1, 0) + at(mu, -1, -2, 0)) /
              (12.0 * h);
    j.d2(mu, mu) = (-at(mu, -1, 2, 0) + 16.0 * at(mu, -1, 1, 0) - 30.0 * j.v +
                    16.0 * at(mu, -1, -1, 0) - at(mu, -1, -2, 0)) /
                   (12.0 * h * h);
  }
  // mixed second derivatives: the order-4 first-derivative stencil applied
  // along each axis in turn
  const double w[4] = {-1.0, 8.0, -8.0, 1.0};
  const int s[4] = {2, 1, -1, -2};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      cplx acc = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
          acc += w[i] * w[k] * at(mu, nu, s[i], s[k]);
      j.d2(mu, nu) = acc / (144.0 * h * h);
    }
  return j;
}

std::array<FieldExpr, 3> derive_E(const GaugeConfig& A) {
  std::array<FieldExpr, 3> E;
  for (int i = 0; i < 3; ++i) E[i] = deriv(A.a0, i + 1) - deriv(A.a[i], 0);
  return E;
}

std::array<FieldExpr, 3> derive_B(const GaugeConfig& A, double c) {
  std::array<FieldExpr, 3> B;
  const cplx ic(1.0 / c);
  B[0] = ic * (deriv(A.a[2], 2) - deriv(A.a[1], 3));
  B[1] = ic * (deriv(A.a[0], 3) - deriv(A.a[2], 1));
  B[2] = ic * (deriv(A.a[1], 1) - deriv(A.a[0], 2));
  return B;
}

GridSample sample_on_grid(const FieldExpr& f, const GridSpec& spec) {
  if (spec.n <= 0 || spec.extent <= 0.0 || spec.dim < 1 || spec.dim > 3) {
    throw std::invalid_argument("grid spec requires n > 0, extent > 0, dim in 1..3");
  }
  GridSample out;
  out.spec = spec;
  const double dx = spec.extent / spec.n;
  std::array<int, 3> shape{1, 1, 1};
  for (int d = 0; d < spec.dim; ++d) shape[d] = spec.n;
  out.coords.reserve(shape[0] * shape[1] * shape[2]);
  for (int i = 0; i < shape[0]; ++i)
    for (int j = 0; j < shape[1]; ++j)
      for (int k = 0; k < shape[2]; ++k) {
        std::array<double, 4> x{spec.x0, i * dx, j * dx, k * dx};
        out.coords.push_back(x);
        out.values.push_back(f.eval_jet(x).v);
      }
  return out;
}

void write_csv(const GridSample& s, std::ostream& out) {
  out << "x0,x1,x2,x3,re,im\n";
  char buf[160];
  for (size_t i = 0; i < s.values.size(); ++i) {
    const auto& x = s.coords[i];
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x[0], x[1], x[2],
                  x[3], s.values[i].real(), s.values[i].imag());
    out << buf;
  }
}

}  // namespace galilab
