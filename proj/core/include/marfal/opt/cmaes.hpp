#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace marfal::opt {

class OptimizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (mu/mu_w, lambda) covariance matrix adaptation evolution strategy with
// cumulative step-size control and rank-one plus rank-mu covariance updates.
// Minimizes. Candidates carrying NaN fitness rank last and are excluded from
// recombination; a full batch of NaN counts as a failed generation, and
// lambda failed generations in a row raise OptimizerError.
class Cmaes {
 public:
  Cmaes(Eigen::VectorXd m0, double sigma0, int lambda, std::uint64_t seed);

  // Samples lambda candidates for the current generation. Repeated calls
  // without an intervening tell() return the same batch.
  const std::vector<Eigen::VectorXd>& ask();

  // Consumes fitness values in candidate order and updates the search state.
  void tell(const std::vector<double>& fitness);

  int dimension() const { return static_cast<int>(mean_.size()); }
  int lambda() const { return lambda_; }
  int generation() const { return generation_; }
  double sigma() const { return sigma_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return cov_; }
  bool has_best() const { return best_valid_; }
  double best_fitness() const { return best_fitness_; }
  const Eigen::VectorXd& best() const { return best_; }
  int failed_batches() const { return failed_batches_; }

 private:
  void refresh_eigen();

  int lambda_ = 0;
  int mu_ = 0;
  Eigen::VectorXd weights_;
  double mu_eff_ = 0.0;
  double c_sigma_ = 0.0;
  double d_sigma_ = 0.0;
  double c_c_ = 0.0;
  double c_1_ = 0.0;
  double c_mu_ = 0.0;
  double chi_n_ = 0.0;

  Eigen::VectorXd mean_;
  double sigma_ = 0.0;
  Eigen::MatrixXd cov_;
  Eigen::VectorXd p_sigma_;
  Eigen::VectorXd p_c_;
  Eigen::MatrixXd eigen_basis_;   // B
  Eigen::VectorXd eigen_scale_;   // D, sqrt of eigenvalues
  int generation_ = 0;

  std::mt19937_64 rng_;
  std::vector<Eigen::VectorXd> candidates_;
  std::vector<Eigen::VectorXd> steps_;  // y_i = (x_i - m) / sigma
  bool batch_ready_ = false;

  Eigen::VectorXd best_;
  double best_fitness_ = 0.0;
  bool best_valid_ = false;
  int failed_batches_ = 0;
};

struct MinimizeResult {
  Eigen::VectorXd best;
  double best_fitness = 0.0;
  int generations = 0;
  std::vector<double> best_history;  // best-so-far after each generation
};

// Runs n_generations of ask/tell, stopping early once the best fitness drops
// below target (if given).
MinimizeResult minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                        Eigen::VectorXd m0, double sigma0, int lambda,
                        int n_generations, std::uint64_t seed,
                        std::optional<double> target = {});

}  // namespace marfal::opt
