#include "selforg/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "selforg/spectral.hpp"

namespace selforg {

void SolverOptions::validate() const {
  if (!(dtau > 0.0)) throw std::invalid_argument("SolverOptions: dtau must be > 0");
  if (max_iter < 1) throw std::invalid_argument("SolverOptions: max_iter must be >= 1");
  if (!(tol_psi > 0.0)) throw std::invalid_argument("SolverOptions: tol_psi must be > 0");
  if (!(tol_mu > 0.0)) throw std::invalid_argument("SolverOptions: tol_mu must be > 0");
  if (seed_epsilon < 0.0) throw std::invalid_argument("SolverOptions: seed_epsilon must be >= 0");
  if (seed_sign != 1 && seed_sign != -1) {
    throw std::invalid_argument("SolverOptions: seed_sign must be +1 or -1");
  }
}

double chemical_potential(const Wavefunction& phi, const CavityAmplitude& a,
                          const ModelParams& p, const SpatialGrid& grid) {
  const Eigen::VectorXcd h = gp_rhs(phi, a, p, grid);
  const double nrm2 = std::real(inner_product(phi, phi, grid));
  return std::real(inner_product(phi, h, grid)) / nrm2;
}

namespace {

// mu and the infinity-norm residual of H phi = mu phi for a normalized phi.
double residual_inf(const Wavefunction& phi, const CavityAmplitude& a,
                    const ModelParams& p, const SpatialGrid& grid, Spectral& sp,
                    double& mu) {
  const Eigen::VectorXcd h = gp_rhs(phi, a, p, grid, sp);
  mu = std::real(inner_product(phi, h, grid));
  double r = 0.0;
  for (int j = 0; j < grid.n(); ++j) r = std::max(r, std::abs(h[j] - mu * phi[j]));
  return r;
}

// Convergence requires both the wavefunction-change and the relative residual
// criteria; the residual scale is floored at 1 (the recoil energy) so the
// criterion stays meaningful when mu = 0.
bool meets_tolerances(const SolverOptions& opts, double change, double res, double mu) {
  return change <= opts.tol_psi && res <= opts.tol_mu * std::max(std::abs(mu), 1.0);
}

// Rotates away the global phase and drops the (roundoff-level) imaginary part.
Eigen::VectorXd to_real_aligned(const Wavefunction& phi) {
  Complex z{0.0, 0.0};
  for (int j = 0; j < phi.size(); ++j) z += std::abs(phi[j]) * phi[j];
  const double az = std::abs(z);
  const Complex rot = az > 0.0 ? std::conj(z) / az : Complex{1.0, 0.0};
  Eigen::VectorXd f(phi.size());
  for (int j = 0; j < phi.size(); ++j) f[j] = std::real(rot * phi[j]);
  return f;
}

}  // namespace

SteadyState solve_steady(const ModelParams& p, const SpatialGrid& grid,
                         const SolverOptions& opts) {
  return solve_steady(p, grid, opts, Wavefunction{});
}

SteadyState solve_steady(const ModelParams& p, const SpatialGrid& grid,
                         const SolverOptions& opts, const Wavefunction& initial) {
  p.validate();
  opts.validate();
  const int n = grid.n();
  if (initial.size() != 0 && initial.size() != n) {
    throw std::invalid_argument("solve_steady: warm-start vector does not match grid");
  }
  Spectral sp(n);

  Wavefunction phi;
  if (initial.size() == n) {
    phi = initial;
  } else {
    phi = Wavefunction::Ones(n);
  }
  if (opts.seed_epsilon > 0.0) {
    for (int j = 0; j < n; ++j) {
      phi[j] += opts.seed_epsilon * opts.seed_sign * grid.cos_theta()[j];
    }
  }
  normalize(phi, grid);

  long iter = 0;
  double dtau = opts.dtau;
  constexpr double kDtauFloor = 1e-9;
  constexpr int kCheckEvery = 64;
  constexpr long kStagnationWindow = 10000;

  double mu = 0.0;
  double res = std::numeric_limits<double>::infinity();
  double change = std::numeric_limits<double>::infinity();
  bool converged = false;

  Eigen::MatrixXd kinetic_dense;  // built lazily for the polish stage
  Eigen::VectorXd pot(n);
  Eigen::VectorXd efac(n);
  Wavefunction prev(n);

  while (iter < opts.max_iter && !converged) {
    // --- split-step propagation at the current step size
    double window_change = std::numeric_limits<double>::infinity();
    long window_start = iter;
    bool to_polish = false;
    while (iter < opts.max_iter) {
      const CavityAmplitude a = adiabatic_field(phi, p, grid);
      const double i0 = std::norm(a.a);
      const double re_a = a.a.real();
      double wmax = 0.0;
      for (int j = 0; j < n; ++j) {
        pot[j] = p.u0 * i0 * grid.cos2_theta()[j] + 2.0 * p.eta * re_a * grid.cos_theta()[j] +
                 p.g * std::norm(phi[j]);
        wmax = std::max(wmax, std::abs(pot[j]));
      }
      const double dt = std::min(dtau, 0.25 / std::max(1.0, wmax));
      for (int j = 0; j < n; ++j) efac[j] = std::exp(-0.5 * dt * pot[j]);

      prev = phi;
      for (int j = 0; j < n; ++j) phi[j] *= efac[j];
      sp.kinetic_exp(phi, dt);
      for (int j = 0; j < n; ++j) phi[j] *= efac[j];
      normalize(phi, grid);
      ++iter;

      change = 0.0;
      for (int j = 0; j < n; ++j) change = std::max(change, std::abs(phi[j] - prev[j]));

      const bool at_check = (iter % kCheckEvery == 0) || change <= opts.tol_psi;
      if (at_check) {
        const CavityAmplitude a2 = adiabatic_field(phi, p, grid);
        res = residual_inf(phi, a2, p, grid, sp, mu);
        if (meets_tolerances(opts, change, res, mu)) {
          converged = true;
          break;
        }
        if (change <= opts.tol_psi) {
          // the propagation fixed point misses the residual tolerance
          to_polish = true;
          break;
        }
      }
      if (iter - window_start >= kStagnationWindow) {
        if (change > opts.tol_psi && change > 0.99 * window_change) {
          to_polish = true;
          break;
        }
        window_change = change;
        window_start = iter;
      }
    }
    if (converged || iter >= opts.max_iter) break;
    if (!to_polish) continue;

    // --- self-consistent diagonalization polish
    if (kinetic_dense.size() == 0) kinetic_dense = Spectral::dense_kinetic(n);
    Eigen::VectorXd f = to_real_aligned(phi);
    {
      Eigen::VectorXcd fc = f.cast<Complex>();
      normalize(fc, grid);
      f = fc.real();
    }
    double beta = 0.5;
    double best_res = res;
    long no_gain = 0;
    while (iter < opts.max_iter) {
      Wavefunction fc = f.cast<Complex>();
      const CavityAmplitude a = adiabatic_field(fc, p, grid);
      const double i0 = std::norm(a.a);
      const double re_a = a.a.real();
      Eigen::MatrixXd h = kinetic_dense;
      for (int j = 0; j < n; ++j) {
        h(j, j) += p.u0 * i0 * grid.cos2_theta()[j] +
                   2.0 * p.eta * re_a * grid.cos_theta()[j] + p.g * f[j] * f[j];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
      if (es.info() != Eigen::Success) break;
      Eigen::VectorXd gs = es.eigenvectors().col(0) * std::sqrt(static_cast<double>(n));
      if (gs.dot(f) < 0.0) gs = -gs;

      Eigen::VectorXd fnew = (1.0 - beta) * f + beta * gs;
      {
        Eigen::VectorXcd fnc = fnew.cast<Complex>();
        normalize(fnc, grid);
        fnew = fnc.real();
      }
      change = (fnew - f).cwiseAbs().maxCoeff();
      f = fnew;
      ++iter;

      fc = f.cast<Complex>();
      const CavityAmplitude a2 = adiabatic_field(fc, p, grid);
      res = residual_inf(fc, a2, p, grid, sp, mu);
      if (meets_tolerances(opts, change, res, mu)) {
        phi = fc;
        converged = true;
        break;
      }
      if (res < 0.995 * best_res) {
        best_res = res;
        no_gain = 0;
        beta = std::min(1.0, beta * 1.2);
      } else {
        ++no_gain;
        beta = std::max(0.05, beta * 0.7);
        if (no_gain >= 60) break;  // oscillating; retry propagation at smaller step
      }
    }
    if (converged) break;
    phi = f.cast<Complex>();
    normalize(phi, grid);
    if (dtau * 0.5 < kDtauFloor) break;
    dtau *= 0.5;
  }

  SteadyState out;
  out.phi0 = phi;
  out.a0 = adiabatic_field(phi, p, grid);
  out.theta_op = order_parameter(phi, grid);
  out.bunching = bunching_parameter(phi, grid);
  out.photons_per_atom = out.a0.photons_per_atom();
  out.residual = residual_inf(phi, out.a0, p, grid, sp, out.mu);
  out.iterations = iter;
  out.converged = converged && meets_tolerances(opts, change, out.residual, out.mu);
  return out;
}

std::vector<SweepRecord> sweep_eta(const ModelParams& p, const SpatialGrid& grid,
                                   const SolverOptions& opts,
                                   const std::vector<double>& eta_values) {
  std::vector<SweepRecord> records;
  records.reserve(eta_values.size());
  Wavefunction warm;
  for (const double eta : eta_values) {
    SweepRecord rec;
    rec.eta = eta;
    try {
      const SteadyState st = solve_steady(p.with_eta(eta), grid, opts, warm);
      rec.theta_op = st.theta_op;
      rec.bunching = st.bunching;
      rec.mu = st.mu;
      rec.photons_per_atom = st.photons_per_atom;
      const AdiabaticPotential pot = adiabatic_potential(st, p.with_eta(eta), grid);
      rec.u1 = pot.u1;
      rec.u2 = pot.u2;
      rec.iterations = st.iterations;
      rec.residual = st.residual;
      rec.converged = st.converged;
      warm = st.phi0;
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace selforg
