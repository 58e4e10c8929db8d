#include "marfal/opt/cmaes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace marfal::opt {

Cmaes::Cmaes(Eigen::VectorXd m0, double sigma0, int lambda,
             std::uint64_t seed)
    : lambda_(lambda), mean_(std::move(m0)), sigma_(sigma0), rng_(seed) {
  const auto n = static_cast<double>(mean_.size());
  if (mean_.size() < 1) {
    throw std::invalid_argument("cmaes: dimension must be >= 1");
  }
  if (lambda_ < 2) {
    throw std::invalid_argument("cmaes: lambda must be >= 2");
  }
  if (!(sigma_ > 0.0) || !mean_.allFinite()) {
    throw std::invalid_argument("cmaes: need finite m0 and sigma0 > 0");
  }

  mu_ = lambda_ / 2;
  weights_.resize(mu_);
  for (int i = 0; i < mu_; ++i) {
    weights_(i) = std::log((lambda_ + 1) / 2.0) - std::log(i + 1.0);
  }
  weights_ /= weights_.sum();
  mu_eff_ = 1.0 / weights_.squaredNorm();

  c_sigma_ = (mu_eff_ + 2.0) / (n + mu_eff_ + 5.0);
  d_sigma_ = 1.0 +
             2.0 * std::max(0.0, std::sqrt((mu_eff_ - 1.0) / (n + 1.0)) - 1.0) +
             c_sigma_;
  c_c_ = (4.0 + mu_eff_ / n) / (n + 4.0 + 2.0 * mu_eff_ / n);
  c_1_ = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff_);
  c_mu_ = std::min(1.0 - c_1_, 2.0 * (mu_eff_ - 2.0 + 1.0 / mu_eff_) /
                                   ((n + 2.0) * (n + 2.0) + mu_eff_));
  chi_n_ = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));

  cov_ = Eigen::MatrixXd::Identity(mean_.size(), mean_.size());
  p_sigma_ = Eigen::VectorXd::Zero(mean_.size());
  p_c_ = Eigen::VectorXd::Zero(mean_.size());
  refresh_eigen();
}

void Cmaes::refresh_eigen() {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov_);
  if (solver.info() != Eigen::Success) {
    throw OptimizerError("cmaes: covariance eigendecomposition failed");
  }
  // Guard the scale against numerical drift below zero.
  const double floor = 1e-20 * std::max(1.0, solver.eigenvalues().maxCoeff());
  eigen_scale_ = solver.eigenvalues().cwiseMax(floor).cwiseSqrt();
  eigen_basis_ = solver.eigenvectors();
}

const std::vector<Eigen::VectorXd>& Cmaes::ask() {
  if (batch_ready_) return candidates_;
  const auto n = mean_.size();
  candidates_.assign(static_cast<std::size_t>(lambda_),
                     Eigen::VectorXd(n));
  steps_.assign(static_cast<std::size_t>(lambda_), Eigen::VectorXd(n));
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < lambda_; ++i) {
    Eigen::VectorXd z(n);
    for (Eigen::Index d = 0; d < n; ++d) z(d) = gauss(rng_);
    steps_[static_cast<std::size_t>(i)] =
        eigen_basis_ * (eigen_scale_.asDiagonal() * z);
    candidates_[static_cast<std::size_t>(i)] =
        mean_ + sigma_ * steps_[static_cast<std::size_t>(i)];
  }
  batch_ready_ = true;
  return candidates_;
}

void Cmaes::tell(const std::vector<double>& fitness) {
  if (!batch_ready_) {
    throw OptimizerError("cmaes: tell() without a pending ask()");
  }
  if (fitness.size() != static_cast<std::size_t>(lambda_)) {
    throw OptimizerError("cmaes: fitness count does not match lambda");
  }

  std::vector<int> order(static_cast<std::size_t>(lambda_));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double fa = fitness[static_cast<std::size_t>(a)];
    const double fb = fitness[static_cast<std::size_t>(b)];
    if (std::isnan(fa)) return false;  // NaN ranks last
    if (std::isnan(fb)) return true;
    return fa < fb;
  });

  int n_valid = 0;
  for (double f : fitness) {
    if (!std::isnan(f)) ++n_valid;
  }

  batch_ready_ = false;
  ++generation_;

  if (n_valid == 0) {
    if (++failed_batches_ >= lambda_) {
      throw OptimizerError(
          "cmaes: objective failed for " + std::to_string(failed_batches_) +
          " consecutive generations");
    }
    return;
  }
  failed_batches_ = 0;

  const int best_idx = order[0];
  const double best_f = fitness[static_cast<std::size_t>(best_idx)];
  if (!best_valid_ || best_f < best_fitness_) {
    best_valid_ = true;
    best_fitness_ = best_f;
    best_ = candidates_[static_cast<std::size_t>(best_idx)];
  }

  // Recombination over the mu best valid candidates.
  const int mu_used = std::min(mu_, n_valid);
  Eigen::VectorXd w = weights_.head(mu_used);
  w /= w.sum();
  const double mu_eff_used =
      mu_used == mu_ ? mu_eff_ : 1.0 / w.squaredNorm();

  Eigen::VectorXd y_w = Eigen::VectorXd::Zero(mean_.size());
  for (int i = 0; i < mu_used; ++i) {
    y_w += w(i) * steps_[static_cast<std::size_t>(order[i])];
  }
  mean_ += sigma_ * y_w;

  // C^{-1/2} y_w through the cached eigendecomposition.
  const Eigen::VectorXd c_inv_sqrt_y =
      eigen_basis_ *
      (eigen_scale_.cwiseInverse().asDiagonal() *
       (eigen_basis_.transpose() * y_w));
  p_sigma_ = (1.0 - c_sigma_) * p_sigma_ +
             std::sqrt(c_sigma_ * (2.0 - c_sigma_) * mu_eff_used) *
                 c_inv_sqrt_y;

  const double expected =
      std::sqrt(1.0 - std::pow(1.0 - c_sigma_, 2.0 * generation_));
  const bool h_sigma =
      p_sigma_.norm() / expected <
      (1.4 + 2.0 / (mean_.size() + 1.0)) * chi_n_;

  p_c_ = (1.0 - c_c_) * p_c_;
  if (h_sigma) {
    p_c_ += std::sqrt(c_c_ * (2.0 - c_c_) * mu_eff_used) * y_w;
  }

  Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(mean_.size(), mean_.size());
  for (int i = 0; i < mu_used; ++i) {
    const Eigen::VectorXd& y = steps_[static_cast<std::size_t>(order[i])];
    rank_mu.noalias() += w(i) * y * y.transpose();
  }
  const double delta_h = h_sigma ? 0.0 : c_c_ * (2.0 - c_c_);
  cov_ = (1.0 - c_1_ - c_mu_) * cov_ +
         c_1_ * (p_c_ * p_c_.transpose() + delta_h * cov_) + c_mu_ * rank_mu;
  cov_ = 0.5 * (cov_ + cov_.transpose().eval());

  sigma_ *= std::exp(c_sigma_ / d_sigma_ * (p_sigma_.norm() / chi_n_ - 1.0));
  if (!std::isfinite(sigma_) || !mean_.allFinite()) {
    throw OptimizerError("cmaes: search state diverged");
  }

  refresh_eigen();
}

MinimizeResult minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                        Eigen::VectorXd m0, double sigma0, int lambda,
                        int n_generations, std::uint64_t seed,
                        std::optional<double> target) {
  Cmaes strategy(std::move(m0), sigma0, lambda, seed);
  MinimizeResult result;
  for (int g = 0; g < n_generations; ++g) {
    const auto& xs = strategy.ask();
    std::vector<double> fitness;
    fitness.reserve(xs.size());
    for (const Eigen::VectorXd& x : xs) fitness.push_back(f(x));
    strategy.tell(fitness);
    result.generations = g + 1;
    if (strategy.has_best()) {
      result.best_history.push_back(strategy.best_fitness());
      if (target && strategy.best_fitness() < *target) break;
    } else {
      result.best_history.push_back(
          std::numeric_limits<double>::quiet_NaN());
    }
  }
  if (!strategy.has_best()) {
    throw OptimizerError("cmaes: no finite fitness seen");
  }
  result.best = strategy.best();
  result.best_fitness = strategy.best_fitness();
  return result;
}

}  // namespace marfal::opt
