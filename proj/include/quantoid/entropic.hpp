#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "quantoid/classify.hpp"
#include "quantoid/set_function.hpp"

namespace quantoid {

inline constexpr double kDefaultTolerance = 1e-9;

/// Floating-point set function with the tolerance its consumers should use.
struct ApproxSetFunction {
  BasicSetFunction<double> function;
  double tol = kDefaultTolerance;

  const GroundSet& ground() const noexcept { return function.ground(); }
  double operator[](Mask m) const { return function[m]; }
};

inline Classification classify(const ApproxSetFunction& f, const ClassifyOptions& options = {}) {
  return classify(f.function, f.tol, options);
}

enum class LogBase { bits, nats };

/// Joint distribution of one random variable per party; probabilities in
/// row-major order, last party fastest.
class JointDistribution {
 public:
  /// Throws DimensionMismatch, InvalidDistribution.
  JointDistribution(GroundSet parties, std::vector<int> alphabet_sizes, std::vector<double> probs,
                    double tol = kDefaultTolerance);

  const GroundSet& parties() const noexcept { return parties_; }
  const std::vector<int>& alphabet_sizes() const noexcept { return alphabet_sizes_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  double tol() const noexcept { return tol_; }

  /// Marginal on the parties in `subset`, row-major in their order.
  std::vector<double> marginal(Mask subset) const;

 private:
  GroundSet parties_;
  std::vector<int> alphabet_sizes_;
  std::vector<double> probs_;
  double tol_;
};

/// Pure state vector on the tensor product of the parties' spaces; basis
/// order is lexicographic with the last party fastest.
class PureState {
 public:
  /// Throws DimensionMismatch, NotNormalized.
  PureState(GroundSet parties, std::vector<int> dims, Eigen::VectorXcd amplitudes,
            double tol = kDefaultTolerance);

  const GroundSet& parties() const noexcept { return parties_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  double tol() const noexcept { return tol_; }

  /// Partial trace of |psi><psi| over the complement of `subset`.
  Eigen::MatrixXcd reduced_density(Mask subset) const;
  /// Ascending eigenvalues of reduced_density(subset).
  Eigen::VectorXd reduced_spectrum(Mask subset) const;

 private:
  GroundSet parties_;
  std::vector<int> dims_;
  Eigen::VectorXcd amplitudes_;
  double tol_;
};

/// -sum p log p with 0 log 0 = 0; nonpositive entries are skipped.
template <class Range>
double entropy(const Range& probabilities, LogBase base = LogBase::bits) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return base == LogBase::bits ? h / std::log(2.0) : h;
}

/// I -> Shannon entropy of the marginal on I.
ApproxSetFunction shannon_entropy_function(const JointDistribution& p,
                                           LogBase base = LogBase::bits);

/// I -> von Neumann entropy of the reduction to I.
ApproxSetFunction von_neumann_entropy_function(const PureState& state,
                                               LogBase base = LogBase::bits);

/// Replaces each value by its closest rational with denominator at most
/// `max_denominator`. Throws SnapFailed if some value is farther than f.tol
/// from its snap target, InvalidArgument if max_denominator < 1.
SetFunction snap_to_rational(const ApproxSetFunction& f, long max_denominator);

}  // namespace quantoid
