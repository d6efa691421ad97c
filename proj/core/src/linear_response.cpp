#include "selforg/linear_response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "selforg/analytics.hpp"
#include "selforg/observables.hpp"
#include "selforg/spectral.hpp"

namespace selforg {

namespace {

// Gauge directions come out of the eigensolver split proportionally to
// sqrt(eps * ||M||) because the zero eigenvalue is defective, so the cut
// separating them from physical branches has to grow with the matrix norm.
// The prefactor covers the largest splitting seen in deep lattices (about
// 75x the square root) with a factor-of-four margin.
double zero_mode_cut(double matrix_norm) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  return std::max(1e-6, 300.0 * std::sqrt(eps * std::max(1.0, matrix_norm)));
}

}  // namespace

BogoliubovMatrix build_matrix(const SteadyState& state, const ModelParams& p,
                              const SpatialGrid& grid) {
  p.validate();
  const int n = grid.n();
  if (state.phi0.size() != n) {
    throw std::invalid_argument("build_matrix: state does not match grid");
  }
  if (!state.converged) {
    throw std::invalid_argument("build_matrix: refusing a non-converged steady state");
  }

  // Fix the global phase so <1|phi0> is real and positive, then require the
  // remainder to be real: the linearization below assumes a real condensate.
  Wavefunction phi = state.phi0;
  Complex z = inner_product(Eigen::VectorXcd::Ones(n), phi, grid);
  if (std::abs(z) < 1e-12) {
    z = {0.0, 0.0};
    for (int j = 0; j < n; ++j) z += std::abs(phi[j]) * phi[j];
  }
  if (std::abs(z) < 1e-12) throw std::invalid_argument("build_matrix: degenerate wavefunction");
  phi *= std::conj(z) / std::abs(z);
  double im_max = 0.0;
  for (int j = 0; j < n; ++j) im_max = std::max(im_max, std::abs(phi[j].imag()));
  if (im_max > 1e-8) {
    throw std::invalid_argument("build_matrix: wavefunction is genuinely complex");
  }
  Eigen::VectorXd f0 = phi.real();

  const CavityAmplitude a0 = adiabatic_field(phi, p, grid);
  const double mu = chemical_potential(phi, a0, p, grid);
  const double bunching = bunching_parameter(phi, grid);
  const double re_a = a0.a.real();
  const double im_a = a0.a.imag();
  const double i0 = std::norm(a0.a);
  const double re_adet = -p.delta_c + p.u0 * bunching;

  Eigen::MatrixXd h0 = Spectral::dense_kinetic(n);
  for (int j = 0; j < n; ++j) {
    h0(j, j) += p.g * f0[j] * f0[j] - mu + p.u0 * i0 * grid.cos2_theta()[j] +
                2.0 * p.eta * re_a * grid.cos_theta()[j];
  }

  BogoliubovMatrix bm;
  bm.params = p;
  bm.n_points = n;
  bm.state = state;
  bm.state.phi0 = phi;
  bm.state.a0 = a0;
  bm.state.mu = mu;

  Eigen::MatrixXcd& m = bm.m;
  m = Eigen::MatrixXcd::Zero(2 * n + 2, 2 * n + 2);
  const double w = grid.weight();
  const Complex iunit{0.0, 1.0};

  m(0, 0) = -iunit * p.kappa;
  m(0, 1) = re_adet;
  m(1, 0) = re_adet;
  m(1, 1) = -iunit * p.kappa;
  for (int j = 0; j < n; ++j) {
    const double cj = grid.cos_theta()[j];
    const double c2j = grid.cos2_theta()[j];
    m(0, 2 + j) = 2.0 * (re_a * p.u0 * c2j + p.eta * cj) * f0[j] * w;
    m(1, 2 + j) = 2.0 * iunit * im_a * p.u0 * c2j * f0[j] * w;
    m(n + 2 + j, 0) = 2.0 * iunit * p.u0 * c2j * f0[j] * im_a;
    m(n + 2 + j, 1) = -2.0 * f0[j] * (p.u0 * c2j * re_a + p.eta * cj);
  }
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      m(2 + j, n + 2 + l) = -h0(j, l);
      m(n + 2 + j, 2 + l) = -h0(j, l);
    }
    m(n + 2 + j, 2 + j) -= 2.0 * p.g * f0[j] * f0[j];
  }

  bm.norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  return bm;
}

std::vector<BogoliubovMode> eigendecompose(const BogoliubovMatrix& bm) {
  const int dim = static_cast<int>(bm.m.rows());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(bm.m, true);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: QR iteration failed to converge");
  }
  const double tol = 1e-8 * std::max(1.0, bm.norm);
  const Eigen::MatrixXcd residual = bm.m * es.eigenvectors();
  std::vector<BogoliubovMode> modes(dim);
  for (int i = 0; i < dim; ++i) {
    const Complex omega = es.eigenvalues()[i];
    Eigen::VectorXcd v = es.eigenvectors().col(i);
    const double r = (residual.col(i) - omega * v).norm();
    if (r > tol) {
      throw std::runtime_error("eigendecompose: residual " + std::to_string(r) +
                               " exceeds tolerance for mode " + std::to_string(i));
    }
    v.normalize();
    modes[i].omega = omega;
    modes[i].nu = omega.real();
    modes[i].gamma = -omega.imag();
    modes[i].vector = std::move(v);
  }
  return modes;
}

void classify_and_pair(std::vector<BogoliubovMode>& modes, double matrix_norm) {
  for (auto& mode : modes) {
    // physical measure: unit weight on the two field quadratures, 1/n on the
    // grid-sampled condensate quadratures, so the split is grid independent
    const int n = (static_cast<int>(mode.vector.size()) - 2) / 2;
    const double wf = std::norm(mode.vector[0]) + std::norm(mode.vector[1]);
    const double wa = (mode.vector.squaredNorm() - wf) / n;
    mode.field_weight = wf / (wf + wa);
    mode.kind = mode.field_weight > 0.5 ? ModeKind::field : ModeKind::condensate;
    mode.paired_with.reset();
    mode.pairing_flagged = false;
  }
  std::stable_sort(modes.begin(), modes.end(),
                   [](const BogoliubovMode& a, const BogoliubovMode& b) {
                     if (a.kind != b.kind) return a.kind == ModeKind::condensate;
                     return a.nu > b.nu;
                   });

  const double pair_tol = 1e-8 * std::max(1.0, matrix_norm);
  const int dim = static_cast<int>(modes.size());
  for (int i = 0; i < dim; ++i) {
    if (modes[i].paired_with) continue;
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < dim; ++j) {
      if (j != i && modes[j].paired_with) continue;
      const double d = std::abs(modes[i].omega + std::conj(modes[j].omega));
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    modes[i].paired_with = best;
    if (best != i && best >= 0) modes[best].paired_with = i;
    if (best_d > pair_tol && std::abs(modes[i].nu) > pair_tol) {
      modes[i].pairing_flagged = true;
      if (best != i && best >= 0) modes[best].pairing_flagged = true;
    }
  }
}

std::vector<SpectrumPoint> spectrum_sweep(const ModelParams& p, const SpatialGrid& grid,
                                          const SolverOptions& opts,
                                          const std::vector<double>& eta_values,
                                          int n_lowest) {
  if (n_lowest < 1) throw std::invalid_argument("spectrum_sweep: n_lowest must be >= 1");
  std::vector<SpectrumPoint> points;
  points.reserve(eta_values.size());
  Wavefunction warm;
  // tracked branch vectors: [0..n_lowest) condensate, [n_lowest] field
  std::vector<Eigen::VectorXcd> branch_vecs;

  for (const double eta : eta_values) {
    SpectrumPoint sp;
    sp.eta = eta;
    sp.steady.eta = eta;
    sp.condensate_modes.assign(n_lowest, Complex{std::numeric_limits<double>::quiet_NaN(), 0.0});
    sp.field_mode = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
    const ModelParams q = p.with_eta(eta);
    try {
      const SteadyState st = solve_steady(q, grid, opts, warm);
      warm = st.phi0;
      sp.steady.theta_op = st.theta_op;
      sp.steady.bunching = st.bunching;
      sp.steady.mu = st.mu;
      sp.steady.photons_per_atom = st.photons_per_atom;
      sp.steady.iterations = st.iterations;
      sp.steady.residual = st.residual;
      sp.steady.converged = st.converged;
      if (!st.converged) {
        sp.error = "steady state did not converge";
        points.push_back(std::move(sp));
        continue;
      }
      const BogoliubovMatrix bm = build_matrix(st, q, grid);
      auto modes = eigendecompose(bm);
      classify_and_pair(modes, bm.norm);

      std::vector<int> candidates;
      const double cut = zero_mode_cut(bm.norm);
      for (int i = 0; i < static_cast<int>(modes.size()); ++i) {
        if (modes[i].nu > cut) candidates.push_back(i);
      }
      const int n_branches = n_lowest + 1;
      std::vector<int> assigned(n_branches, -1);
      if (branch_vecs.empty()) {
        std::vector<int> cond, field;
        for (int i : candidates) {
          (modes[i].kind == ModeKind::condensate ? cond : field).push_back(i);
        }
        const auto by_nu = [&](int a, int b) { return modes[a].nu < modes[b].nu; };
        std::sort(cond.begin(), cond.end(), by_nu);
        std::sort(field.begin(), field.end(), by_nu);
        for (int b = 0; b < n_lowest && b < static_cast<int>(cond.size()); ++b) {
          assigned[b] = cond[b];
        }
        if (!field.empty()) assigned[n_lowest] = field.front();
      } else {
        struct Entry {
          double ov;
          int branch;
          int cand;
        };
        std::vector<Entry> entries;
        for (int b = 0; b < n_branches; ++b) {
          if (branch_vecs[b].size() == 0) continue;
          for (int i : candidates) {
            const double ov = std::abs(branch_vecs[b].dot(modes[i].vector));
            entries.push_back({ov, b, i});
          }
        }
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.ov > b.ov; });
        std::vector<char> cand_used(modes.size(), 0);
        for (const Entry& e : entries) {
          if (assigned[e.branch] >= 0 || cand_used[e.cand]) continue;
          assigned[e.branch] = e.cand;
          cand_used[e.cand] = 1;
        }
      }

      branch_vecs.assign(n_branches, Eigen::VectorXcd{});
      for (int b = 0; b < n_branches; ++b) {
        if (assigned[b] < 0) continue;
        branch_vecs[b] = modes[assigned[b]].vector;
        if (b < n_lowest) {
          sp.condensate_modes[b] = modes[assigned[b]].omega;
        } else {
          sp.field_mode = modes[assigned[b]].omega;
        }
      }
      sp.ok = true;
    } catch (const std::exception& e) {
      sp.error = e.what();
    }
    points.push_back(std::move(sp));
  }
  return points;
}

}  // namespace selforg
