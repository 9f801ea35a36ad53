#include "quantoid/entropic.hpp"

#include <cmath>
#include <sstream>

namespace quantoid {
namespace {

std::size_t product(const std::vector<int>& sizes, Mask subset) {
  std::size_t p = 1;
  for_each_element(subset, [&](int i) { p *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]); });
  return p;
}

void check_sizes(const GroundSet& parties, const std::vector<int>& sizes, std::size_t entries,
                 Errc bad_size, const char* what) {
  if (static_cast<int>(sizes.size()) != parties.size()) {
    throw Error(Errc::DimensionMismatch, std::to_string(sizes.size()) + " " + what + " for " +
                                             std::to_string(parties.size()) + " parties");
  }
  for (int s : sizes) {
    if (s < 1) throw Error(bad_size, std::string(what) + " must be positive");
  }
  const std::size_t expected = product(sizes, parties.full());
  if (entries != expected) {
    throw Error(Errc::DimensionMismatch, std::to_string(entries) + " entries, expected " +
                                             std::to_string(expected));
  }
}

// Splits a flat row-major index (last party fastest) into the flat indices of
// its restriction to `subset` and to the complement.
class IndexSplitter {
 public:
  IndexSplitter(const std::vector<int>& sizes, Mask subset) : sizes_(sizes), subset_(subset) {}

  std::pair<std::size_t, std::size_t> split(std::size_t flat) const {
    std::size_t inside = 0, inside_stride = 1, outside = 0, outside_stride = 1;
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i) {
      const auto d = static_cast<std::size_t>(sizes_[static_cast<std::size_t>(i)]);
      const std::size_t digit = flat % d;
      flat /= d;
      if (contains(subset_, i)) {
        inside += digit * inside_stride;
        inside_stride *= d;
      } else {
        outside += digit * outside_stride;
        outside_stride *= d;
      }
    }
    return {inside, outside};
  }

 private:
  const std::vector<int>& sizes_;
  Mask subset_;
};

}  // namespace

JointDistribution::JointDistribution(GroundSet parties, std::vector<int> alphabet_sizes,
                                     std::vector<double> probs, double tol)
    : parties_(std::move(parties)),
      alphabet_sizes_(std::move(alphabet_sizes)),
      probs_(std::move(probs)),
      tol_(tol) {
  check_sizes(parties_, alphabet_sizes_, probs_.size(), Errc::InvalidDistribution, "alphabet sizes");
  double sum = 0.0;
  for (double& p : probs_) {
    if (!std::isfinite(p) || p < -tol_) {
      throw Error(Errc::InvalidDistribution, "negative or non-finite probability");
    }
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol_) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << sum;
    throw Error(Errc::InvalidDistribution, msg.str());
  }
}

std::vector<double> JointDistribution::marginal(Mask subset) const {
  std::vector<double> out(product(alphabet_sizes_, subset), 0.0);
  const IndexSplitter splitter(alphabet_sizes_, subset);
  for (std::size_t x = 0; x < probs_.size(); ++x) out[splitter.split(x).first] += probs_[x];
  return out;
}

PureState::PureState(GroundSet parties, std::vector<int> dims, Eigen::VectorXcd amplitudes,
                     double tol)
    : parties_(std::move(parties)), dims_(std::move(dims)), amplitudes_(std::move(amplitudes)), tol_(tol) {
  check_sizes(parties_, dims_, static_cast<std::size_t>(amplitudes_.size()), Errc::DimensionMismatch,
              "dimensions");
  if (!amplitudes_.allFinite()) throw Error(Errc::NotNormalized, "non-finite amplitude");
  const double norm = amplitudes_.squaredNorm();
  if (std::abs(norm - 1.0) > tol_) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "squared norm is " << norm;
    throw Error(Errc::NotNormalized, msg.str());
  }
}

Eigen::MatrixXcd PureState::reduced_density(Mask subset) const {
  const auto rows = static_cast<Eigen::Index>(product(dims_, subset));
  const auto cols = static_cast<Eigen::Index>(product(dims_, parties_.full() ^ subset));
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
  const IndexSplitter splitter(dims_, subset);
  for (Eigen::Index x = 0; x < amplitudes_.size(); ++x) {
    const auto [r, c] = splitter.split(static_cast<std::size_t>(x));
    a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amplitudes_(x);
  }
  return a * a.adjoint();
}

Eigen::VectorXd PureState::reduced_spectrum(Mask subset) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced_density(subset),
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

ApproxSetFunction shannon_entropy_function(const JointDistribution& p, LogBase base) {
  auto f = BasicSetFunction<double>::generate(p.parties(), [&](Mask m) {
    return m == 0 ? 0.0 : entropy(p.marginal(m), base);
  });
  return {std::move(f), p.tol()};
}

ApproxSetFunction von_neumann_entropy_function(const PureState& state, LogBase base) {
  const double tol = state.tol();
  auto f = BasicSetFunction<double>::generate(state.parties(), [&](Mask m) {
    if (m == 0) return 0.0;
    const Eigen::VectorXd spectrum = state.reduced_spectrum(m);
    if (std::abs(spectrum.sum() - 1.0) > tol || spectrum.minCoeff() < -tol ||
        spectrum.maxCoeff() > 1.0 + tol) {
      throw Error(Errc::InternalInvariant,
                  "reduced spectrum on {" + state.parties().key(m) + "} is not a distribution");
    }
    return entropy(spectrum, base);
  });
  return {std::move(f), tol};
}

SetFunction snap_to_rational(const ApproxSetFunction& f, long max_denominator) {
  if (max_denominator < 1) throw Error(Errc::InvalidArgument, "max_denominator must be >= 1");
  const mpz_class bound(max_denominator);
  return SetFunction::generate(f.ground(), [&](Mask m) {
    const double v = f[m];
    if (!std::isfinite(v)) throw Error(Errc::SnapFailed, "non-finite value at {" + f.ground().key(m) + "}");
    Rational snapped = limit_denominator(Rational(v), bound);
    const double distance = std::abs(snapped.get_d() - v);
    if (distance > f.tol) {
      std::ostringstream msg;
      msg.precision(10);
      msg << "value " << v << " at {" << f.ground().key(m) << "} is " << distance
          << " away from " << to_string(snapped);
      throw Error(Errc::SnapFailed, msg.str());
    }
    return snapped;
  });
}

}  // namespace quantoid
