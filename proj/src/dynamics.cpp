#include "galilab/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace galilab {

namespace {

double real_sample(const FieldExpr& f, double x, double y) {
  const cplx v = f.eval(Spacetime4Vector::contra(0.0, Vector3d(x, y, 0.0)));
  if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real()))) {
    throw std::invalid_argument("external potential must be real");
  }
  return v.real();
}

}  // namespace

void write_timeseries_csv(const std::vector<TimeSeriesRow>& rows,
                          std::ostream& out) {
  out << "step,time,norm,charge,px,py\n";
  out.precision(17);
  for (const auto& r : rows) {
    out << r.step << ',' << r.time << ',' << r.norm << ',' << r.charge << ','
        << r.px << ',' << r.py << '\n';
  }
}

SchrodingerSim::SchrodingerSim(const SchrodingerGridSpec& spec,
                               const ModelParams& params, const GaugeConfig& A)
    : spec_(spec), params_(params) {
  validate(params);
  if (spec.dim != 1 && spec.dim != 2) {
    throw std::invalid_argument("grid dimension must be 1 or 2");
  }
  if (spec.n < 3) throw std::invalid_argument("need at least 3 grid points");
  if (spec.extent <= 0) throw std::invalid_argument("extent must be positive");
  dx_ = spec.extent / spec.n;
  const long total = spec.dim == 1 ? spec.n : long(spec.n) * spec.n;
  psi_.assign(total, cplx(0.0));
  build_hamiltonian(A);
}

void SchrodingerSim::build_hamiltonian(const GaugeConfig& A) {
  const int n = spec_.n;
  const long total = long(psi_.size());
  const double m = params_.m, c = params_.c, q = params_.q;
  const double inv2m = 1.0 / (2.0 * m);
  const double invdx2 = 1.0 / (dx_ * dx_);
  const double inv2dx = 1.0 / (2.0 * dx_);

  std::vector<double> a0(total), ax(total), ay(total, 0.0);
  auto pos = [&](long k, double& x, double& y) {
    if (spec_.dim == 1) {
      x = double(k) * dx_;
      y = 0.0;
    } else {
      x = double(k / n) * dx_;
      y = double(k % n) * dx_;
    }
  };
  for (long k = 0; k < total; ++k) {
    double x, y;
    pos(k, x, y);
    a0[k] = real_sample(A.a0, x, y);
    ax[k] = real_sample(A.a[0], x, y);
    if (spec_.dim == 2) ay[k] = real_sample(A.a[1], x, y);
  }

  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(total * (1 + 2 * spec_.dim));
  auto axis_neighbors = [&](long k, int axis, long& plus, long& minus) {
    if (spec_.dim == 1) {
      plus = (k + 1) % n;
      minus = (k + n - 1) % n;
    } else if (axis == 0) {
      const long i = k / n, j = k % n;
      plus = ((i + 1) % n) * n + j;
      minus = ((i + n - 1) % n) * n + j;
    } else {
      const long i = k / n, j = k % n;
      plus = i * n + (j + 1) % n;
      minus = i * n + (j + n - 1) % n;
    }
  };
  for (long k = 0; k < total; ++k) {
    double a2 = ax[k] * ax[k];
    if (spec_.dim == 2) a2 += ay[k] * ay[k];
    cplx diag = cplx(2.0 * spec_.dim * invdx2 * inv2m + inv2m * q * q * a2 +
                     q * c * a0[k]);
    trip.emplace_back(k, k, diag);
    for (int axis = 0; axis < spec_.dim; ++axis) {
      const std::vector<double>& a = axis == 0 ? ax : ay;
      long plus, minus;
      axis_neighbors(k, axis, plus, minus);
      // -(1/2m)[psi'' +/- iq(a_nb + a_k) psi_nb / (2 dx)]
      trip.emplace_back(
          k, plus,
          cplx(-inv2m * invdx2, -inv2m * q * (a[plus] + a[k]) * inv2dx));
      trip.emplace_back(
          k, minus,
          cplx(-inv2m * invdx2, inv2m * q * (a[minus] + a[k]) * inv2dx));
    }
  }
  H_.resize(total, total);
  H_.setFromTriplets(trip.begin(), trip.end());
  cached_dt_ = 0.0;
}

void SchrodingerSim::set_state(
    const std::function<cplx(double, double)>& psi0) {
  const int n = spec_.n;
  for (long k = 0; k < long(psi_.size()); ++k) {
    double x, y;
    if (spec_.dim == 1) {
      x = double(k) * dx_;
      y = 0.0;
    } else {
      x = double(k / n) * dx_;
      y = double(k % n) * dx_;
    }
    psi_[k] = psi0(x, y);
  }
  time_ = 0.0;
  steps_done_ = 0;
}

void SchrodingerSim::step(double dt) {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  const long total = long(psi_.size());
  if (dt != cached_dt_) {
    Eigen::SparseMatrix<cplx> M(total, total);
    M.setIdentity();
    M += cplx(0, 0.5 * dt) * H_;
    M.makeCompressed();
    lu_.compute(M);
    if (lu_.info() != Eigen::Success) {
      throw std::runtime_error("implicit step factorization failed");
    }
    cached_dt_ = dt;
  }
  Eigen::Map<Eigen::VectorXcd> v(psi_.data(), total);
  Eigen::VectorXcd rhs = v - cplx(0, 0.5 * dt) * (H_ * v);
  v = lu_.solve(rhs);
  time_ += dt;
  ++steps_done_;
}

double SchrodingerSim::norm() const {
  const double dV = spec_.dim == 1 ? dx_ : dx_ * dx_;
  double s = 0.0;
  for (const cplx& v : psi_) s += std::norm(v);
  return s * dV;
}

double SchrodingerSim::charge() const { return -params_.q * norm(); }

std::pair<double, double> SchrodingerSim::momentum() const {
  const int n = spec_.n;
  double px = 0.0, py = 0.0, nrm = 0.0;
  for (long k = 0; k < long(psi_.size()); ++k) {
    nrm += std::norm(psi_[k]);
    if (spec_.dim == 1) {
      const cplx grad =
          (psi_[(k + 1) % n] - psi_[(k + n - 1) % n]) / (2.0 * dx_);
      px += (std::conj(psi_[k]) * cplx(0, -1) * grad).real();
    } else {
      const long i = k / n, j = k % n;
      const cplx gx = (psi_[((i + 1) % n) * n + j] -
                       psi_[((i + n - 1) % n) * n + j]) /
                      (2.0 * dx_);
      const cplx gy =
          (psi_[i * n + (j + 1) % n] - psi_[i * n + (j + n - 1) % n]) /
          (2.0 * dx_);
      px += (std::conj(psi_[k]) * cplx(0, -1) * gx).real();
      py += (std::conj(psi_[k]) * cplx(0, -1) * gy).real();
    }
  }
  if (nrm == 0.0) return {0.0, 0.0};
  return {px / nrm, py / nrm};
}

std::vector<TimeSeriesRow> SchrodingerSim::evolve(long n_steps, double dt) {
  std::vector<TimeSeriesRow> rows;
  rows.reserve(n_steps + 1);
  auto record = [&]() {
    const auto [px, py] = momentum();
    rows.push_back({steps_done_, time_, norm(), charge(), px, py});
  };
  record();
  for (long s = 0; s < n_steps; ++s) {
    step(dt);
    record();
  }
  return rows;
}

double gauge_evolution_equivalence(
    const SchrodingerGridSpec& spec, const ModelParams& params,
    const GaugeConfig& A, const std::function<cplx(double, double)>& psi0,
    const GaugeFunction& lam, long n_steps, double dt) {
  if (!lam.lambda().derivative(0).terms().empty()) {
    throw std::invalid_argument("gauge function must be time independent");
  }
  const auto [dummy, Ap] = apply_local_u1(lam, MatterConfig{}, A, params.q);
  SchrodingerSim sim(spec, params, A);
  SchrodingerSim simp(spec, params, Ap);
  auto lam_at = [&](double x, double y) {
    return lam.lambda().eval({0.0, x, y, 0.0}).real();
  };
  sim.set_state(psi0);
  simp.set_state([&](double x, double y) {
    return std::exp(cplx(0, -lam_at(x, y))) * psi0(x, y);
  });
  for (long s = 0; s < n_steps; ++s) {
    sim.step(dt);
    simp.step(dt);
  }
  const int n = spec.n;
  double worst = 0.0;
  for (long k = 0; k < long(sim.psi().size()); ++k) {
    double x, y;
    if (spec.dim == 1) {
      x = double(k) * sim.dx();
      y = 0.0;
    } else {
      x = double(k / n) * sim.dx();
      y = double(k % n) * sim.dx();
    }
    const cplx expect = std::exp(cplx(0, -lam_at(x, y))) * sim.psi()[k];
    worst = std::max(worst, std::abs(simp.psi()[k] - expect));
  }
  return worst;
}

FdtdSim::FdtdSim(const FdtdSpec& spec) : spec_(spec) {
  if (spec.n < 3) throw std::invalid_argument("need at least 3 grid points");
  if (spec.extent <= 0 || spec.c <= 0) {
    throw std::invalid_argument("extent and c must be positive");
  }
  dx_ = spec.extent / spec.n;
  const long total = long(spec.n) * spec.n;
  ex_.assign(total, 0.0);
  ey_.assign(total, 0.0);
  bz_.assign(total, 0.0);
  rho_.assign(total, 0.0);
}

int FdtdSim::idx(int i, int j) const {
  const int n = spec_.n;
  return ((i % n + n) % n) * n + ((j % n + n) % n);
}

void FdtdSim::set_fields(const std::function<double(double, double)>& ex,
                         const std::function<double(double, double)>& ey,
                         const std::function<double(double, double)>& bz) {
  const int n = spec_.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ex_[idx(i, j)] = ex((i + 0.5) * dx_, j * dx_);
      ey_[idx(i, j)] = ey(i * dx_, (j + 0.5) * dx_);
      bz_[idx(i, j)] = bz((i + 0.5) * dx_, (j + 0.5) * dx_);
    }
  }
  // consistent start: rho matches the staggered divergence of E
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rho_[idx(i, j)] = (ex_[idx(i, j)] - ex_[idx(i - 1, j)] +
                         ey_[idx(i, j)] - ey_[idx(i, j - 1)]) /
                        dx_;
    }
  }
  time_ = 0.0;
}

void FdtdSim::set_sources(
    const std::function<double(double, double, double)>& jx,
    const std::function<double(double, double, double)>& jy) {
  jx_ = jx;
  jy_ = jy;
}

void FdtdSim::step(double dt) {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  if (spec_.c * dt > dx_ / std::sqrt(2.0)) {
    throw std::invalid_argument("time step violates the stability bound");
  }
  const int n = spec_.n;
  const double c2 = spec_.c * spec_.c;
  // B lives at half steps: advance Bz from t - dt/2 to t + dt/2 using E(t),
  // then E from t to t + dt using Bz(t + dt/2) and j(t + dt/2).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double curl_e = (ey_[idx(i + 1, j)] - ey_[idx(i, j)] -
                             ex_[idx(i, j + 1)] + ex_[idx(i, j)]) /
                            dx_;
      bz_[idx(i, j)] -= dt * curl_e;
    }
  }
  const double tj = time_ + 0.5 * dt;
  std::vector<double> jx_vals(n * n, 0.0), jy_vals(n * n, 0.0);
  if (jx_ || jy_) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (jx_) jx_vals[idx(i, j)] = jx_((i + 0.5) * dx_, j * dx_, tj);
        if (jy_) jy_vals[idx(i, j)] = jy_(i * dx_, (j + 0.5) * dx_, tj);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double dbz_dy = (bz_[idx(i, j)] - bz_[idx(i, j - 1)]) / dx_;
      const double dbz_dx = (bz_[idx(i, j)] - bz_[idx(i - 1, j)]) / dx_;
      ex_[idx(i, j)] += dt * (c2 * dbz_dy - jx_vals[idx(i, j)]);
      ey_[idx(i, j)] += dt * (-c2 * dbz_dx - jy_vals[idx(i, j)]);
    }
  }
  // charge from the same staggered divergence that updates E, so the
  // discrete Gauss law is conserved exactly
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double divj = (jx_vals[idx(i, j)] - jx_vals[idx(i - 1, j)] +
                           jy_vals[idx(i, j)] - jy_vals[idx(i, j - 1)]) /
                          dx_;
      rho_[idx(i, j)] -= dt * divj;
    }
  }
  time_ += dt;
}

double FdtdSim::gauss_deviation() const {
  const int n = spec_.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double div = (ex_[idx(i, j)] - ex_[idx(i - 1, j)] +
                          ey_[idx(i, j)] - ey_[idx(i, j - 1)]) /
                         dx_;
      worst = std::max(worst, std::abs(div - rho_[idx(i, j)]));
    }
  }
  return worst;
}

}  // namespace galilab
