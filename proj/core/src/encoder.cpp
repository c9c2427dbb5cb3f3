#include "srli/encoder.hpp"

#include <cmath>

namespace srli {

EncoderParams EncoderParams::zeros(int roles, int features) {
  EncoderParams params;
  params.weights = Eigen::MatrixXd::Zero(roles, features);
  params.intercept = Eigen::VectorXd::Zero(roles);
  return params;
}

Eigen::MatrixXd posteriors(std::span<const SparseVector> features, const EncoderParams& params) {
  const int n = static_cast<int>(features.size());
  const int roles = params.roles();
  Eigen::MatrixXd mu(n, roles);
  Eigen::VectorXd scores(roles);
  for (int i = 0; i < n; ++i) {
    scores = params.intercept;
    for (int f : features[static_cast<std::size_t>(i)]) {
      scores += params.weights.col(f);
    }
    const double max_score = scores.maxCoeff();
    scores = (scores.array() - max_score).exp();
    mu.row(i) = scores.transpose() / scores.sum();
  }
  return mu;
}

EncoderGradient encoder_backward(std::span<const SparseVector> features,
                                 const Eigen::MatrixXd& mu, const Eigen::MatrixXd& upstream) {
  const int n = static_cast<int>(features.size());
  const int roles = static_cast<int>(mu.cols());
  EncoderGradient gradient;
  gradient.intercept = Eigen::VectorXd::Zero(roles);
  Eigen::VectorXd dz(roles);
  for (int i = 0; i < n; ++i) {
    const double mixed = mu.row(i).dot(upstream.row(i));
    dz = (mu.row(i).array() * (upstream.row(i).array() - mixed)).transpose();
    gradient.intercept += dz;
    for (int f : features[static_cast<std::size_t>(i)]) {
      auto [it, inserted] = gradient.columns.try_emplace(f, Eigen::VectorXd::Zero(roles));
      it->second += dz;
    }
  }
  return gradient;
}

std::vector<int> predict_roles(std::span<const SparseVector> features,
                               const EncoderParams& params) {
  const Eigen::MatrixXd mu = posteriors(features, params);
  std::vector<int> roles(static_cast<std::size_t>(mu.rows()));
  for (int i = 0; i < mu.rows(); ++i) {
    int best = 0;
    for (int s = 1; s < mu.cols(); ++s) {
      if (mu(i, s) > mu(i, best)) {
        best = s;
      }
    }
    roles[static_cast<std::size_t>(i)] = best;
  }
  return roles;
}

}  // namespace srli
