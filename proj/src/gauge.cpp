#include "galilab/gauge.hpp"

#include <cmath>

namespace galilab {

GaugeFunction::GaugeFunction(Poly4 lambda) : lambda_(std::move(lambda)) {
  if (!lambda_.is_real()) {
    throw std::invalid_argument("gauge function must be real");
  }
  if (lambda_.degree() > 2) {
    throw std::invalid_argument("gauge function degree must be <= 2");
  }
}

MatterConfig apply_global_u1(double lambda0, const MatterConfig& m) {
  return {phase_mul(Poly4(cplx(-lambda0)), m.psi)};
}

std::pair<MatterConfig, GaugeConfig> apply_local_u1(const GaugeFunction& lam,
                                                    const MatterConfig& m,
                                                    const GaugeConfig& A,
                                                    double q) {
  if (q == 0.0) throw std::invalid_argument("coupling q must be nonzero");
  const Poly4& l = lam.lambda();
  MatterConfig mp{phase_mul(l * cplx(-1.0), m.psi)};
  GaugeConfig Ap;
  Ap.a0 = A.a0 + polynomial(l.derivative(0) * cplx(1.0 / q));
  for (int i = 0; i < 3; ++i) {
    Ap.a[i] = A.a[i] + polynomial(l.derivative(i + 1) * cplx(1.0 / q));
  }
  return {std::move(mp), std::move(Ap)};
}

ProbabilityCurrent u1_probability_current(const MatterConfig& m, double mass,
                                          double c) {
  ProbabilityCurrent out;
  const FieldExpr psi = m.psi;
  const FieldExpr psib = conj(psi);
  out.density = real_part(cplx(c) * psi * psib);
  const cplx half_i_over_m(0.0, 0.5 / mass);
  for (int i = 0; i < 3; ++i) {
    out.current[i] = real_part(half_i_over_m * (psi * deriv(psib, i + 1) -
                                                psib * deriv(psi, i + 1)));
  }
  out.divergence = deriv(out.density, 0) + deriv(out.current[0], 1) +
                   deriv(out.current[1], 2) + deriv(out.current[2], 3);
  return out;
}

LagrangianEvaluator free_matter_lagrangian(double mass, double c) {
  return [mass, c](const std::array<double, 4>&, const std::vector<cplx>& phi,
                   const std::vector<std::array<cplx, 4>>& dphi) -> cplx {
    const cplx kinetic_t =
        cplx(0, 0.5 * c) * (phi[1] * dphi[0][0] - phi[0] * dphi[1][0]);
    cplx grad = 0.0;
    for (int k = 1; k < 4; ++k) grad += dphi[0][k] * dphi[1][k];
    return kinetic_t - grad / (2.0 * mass);
  };
}

SymmetrySpec SymmetrySpec::time_translation() {
  SymmetrySpec s;
  s.coord_variation = {1, 0, 0, 0};
  return s;
}

SymmetrySpec SymmetrySpec::space_translation(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("space index must be 1..3");
  SymmetrySpec s;
  s.coord_variation[i] = 1.0;
  return s;
}

SymmetrySpec SymmetrySpec::global_u1() {
  SymmetrySpec s;
  s.field_variation = [](int l, const std::array<double, 4>&,
                         const std::vector<cplx>& phi) -> cplx {
    return l == 0 ? cplx(0, 1) * phi[0] : cplx(0, -1) * phi[1];
  };
  return s;
}

double noether_divergence(const LagrangianEvaluator& L,
                          const SymmetrySpec& spec,
                          const std::vector<FieldExpr>& fields,
                          const Spacetime4Vector& x) {
  const std::size_t nf = fields.size();

  auto current = [&](const std::array<double, 4>& y) -> std::array<cplx, 4> {
    std::vector<cplx> phi(nf);
    std::vector<std::array<cplx, 4>> dphi(nf);
    for (std::size_t l = 0; l < nf; ++l) {
      const Jet j = fields[l].eval_jet(y);
      if (j.order < 1) {
        throw std::invalid_argument("field cannot supply first derivatives");
      }
      phi[l] = j.v;
      dphi[l] = j.d;
    }
    const cplx L0 = L(y, phi, dphi);

    // dL/d(d_nu phi_l), order-4 differences in the argument slot
    std::vector<std::array<cplx, 4>> dLd(nf);
    for (std::size_t l = 0; l < nf; ++l) {
      for (int nu = 0; nu < 4; ++nu) {
        const double h = 1e-4 * (1.0 + std::abs(dphi[l][nu]));
        auto shifted = [&](double s) {
          auto d2 = dphi;
          d2[l][nu] += s * h;
          return L(y, phi, d2);
        };
        dLd[l][nu] = (-shifted(2) + 8.0 * shifted(1) - 8.0 * shifted(-1) +
                      shifted(-2)) /
                     (12.0 * h);
      }
    }

    std::array<cplx, 4> J{};
    for (int nu = 0; nu < 4; ++nu) {
      for (std::size_t l = 0; l < nf; ++l) {
        cplx var = spec.field_variation ? spec.field_variation(l, y, phi)
                                        : cplx(0.0);
        for (int mu = 0; mu < 4; ++mu) {
          var -= spec.coord_variation[mu] * dphi[l][mu];
        }
        J[nu] += dLd[l][nu] * var;
      }
      J[nu] += spec.coord_variation[nu] * L0;
    }
    return J;
  };

  // order-6 outer stencil with a generous step: the inner finite differences
  // leave rounding noise on J that a small step would amplify
  const std::array<double, 4> x0{x.x0, x.xs(0), x.xs(1), x.xs(2)};
  const double h = 4e-3;
  cplx div = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    auto at = [&](double s) {
      auto y = x0;
      y[nu] += s * h;
      return current(y)[nu];
    };
    div += (at(3) - 9.0 * at(2) + 45.0 * at(1) - 45.0 * at(-1) +
            9.0 * at(-2) - at(-3)) /
           (60.0 * h);
  }
  return div.real();
}

}  // namespace galilab
