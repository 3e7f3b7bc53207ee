#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "galilab/eom.hpp"
#include "galilab/gauge.hpp"

namespace galilab {

/// Periodic grid for unitary Schroedinger stepping in a static external
/// gauge field, dimension 1 or 2.
struct SchrodingerGridSpec {
  int dim = 1;
  int n = 64;          // points per axis
  double extent = 1.0; // box [0, extent) per axis
};

struct TimeSeriesRow {
  long step;
  double time;
  double norm;    // sum |psi|^2 dV
  double charge;  // sum -q |psi|^2 dV
  double px, py;  // momentum expectation per unit norm (py = 0 in 1D)
};

/// `step,time,norm,charge,px,py` rows at 17 significant digits.
void write_timeseries_csv(const std::vector<TimeSeriesRow>& rows,
                          std::ostream& out);

class SchrodingerSim {
 public:
  /// Samples A0 and A from the gauge configuration at x0 = 0; the external
  /// field is held static. Time is t = x0/c, so i dpsi/dt = H psi with
  ///   H = -(1/2m)(grad + iqA)^2 + q c A0
  /// discretized with centered differences (Hermitian).
  SchrodingerSim(const SchrodingerGridSpec& spec, const ModelParams& params,
                 const GaugeConfig& A);

  /// Initializes psi from a callable of the grid position (y = 0 in 1D).
  void set_state(const std::function<cplx(double x, double y)>& psi0);

  /// One Crank-Nicolson step; the factorization is cached per dt.
  void step(double dt);

  /// Repeated stepping; records one observer row before the first step and
  /// after every step.
  std::vector<TimeSeriesRow> evolve(long n_steps, double dt);

  double norm() const;
  double charge() const;
  std::pair<double, double> momentum() const;  // per unit norm

  const std::vector<cplx>& psi() const { return psi_; }
  double time() const { return time_; }
  double dx() const { return dx_; }
  const SchrodingerGridSpec& spec() const { return spec_; }

 private:
  void build_hamiltonian(const GaugeConfig& A);

  SchrodingerGridSpec spec_;
  ModelParams params_;
  double dx_;
  double time_ = 0.0;
  long steps_done_ = 0;
  std::vector<cplx> psi_;
  Eigen::SparseMatrix<cplx> H_;
  Eigen::SparseLU<Eigen::SparseMatrix<cplx>> lu_;
  double cached_dt_ = 0.0;
};

/// Evolves both the original configuration and its gauge transform
/// (psi -> e^{-i lambda} psi, A -> A + (1/q) grad lambda; lambda static)
/// and returns the sup-norm difference between the transformed evolution
/// and the evolution of the transform. Second-order small in (dx, dt).
double gauge_evolution_equivalence(
    const SchrodingerGridSpec& spec, const ModelParams& params,
    const GaugeConfig& A, const std::function<cplx(double, double)>& psi0,
    const GaugeFunction& lam, long n_steps, double dt);

/// 2D transverse-electric Maxwell stepper on a staggered periodic grid:
/// Ex at (i+1/2, j), Ey at (i, j+1/2), Bz at (i+1/2, j+1/2).
///   dEx/dt =  c^2 dBz/dy - jx,  dEy/dt = -c^2 dBz/dx - jy,
///   dBz/dt = -(dEy/dx - dEx/dy).
/// The charge density is integrated from the discrete continuity equation,
/// so the staggered Gauss law is conserved to rounding.
struct FdtdSpec {
  int n = 64;
  double extent = 1.0;
  double c = 1.0;
};

class FdtdSim {
 public:
  explicit FdtdSim(const FdtdSpec& spec);

  void set_fields(const std::function<double(double, double)>& ex,
                  const std::function<double(double, double)>& ey,
                  const std::function<double(double, double)>& bz);
  /// Prescribed currents evaluated at the staggered E locations and the
  /// current simulation time.
  void set_sources(const std::function<double(double, double, double)>& jx,
                   const std::function<double(double, double, double)>& jy);

  /// One leapfrog step. Throws std::invalid_argument when c dt > dx/sqrt(2).
  void step(double dt);

  /// Max |div E - rho| over the grid (staggered divergence).
  double gauss_deviation() const;

  const std::vector<double>& ex() const { return ex_; }
  const std::vector<double>& ey() const { return ey_; }
  const std::vector<double>& bz() const { return bz_; }
  double time() const { return time_; }
  double dx() const { return dx_; }
  const FdtdSpec& spec() const { return spec_; }

 private:
  int idx(int i, int j) const;

  FdtdSpec spec_;
  double dx_;
  double time_ = 0.0;
  std::vector<double> ex_, ey_, bz_, rho_;
  std::function<double(double, double, double)> jx_, jy_;
};

}  // namespace galilab
