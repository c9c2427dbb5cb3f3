#pragma once

#include <Eigen/Core>
#include <map>
#include <span>
#include <vector>

#include "srli/features.hpp"

namespace srli {

// Independent per-argument multinomial logistic model. Scores are
// intercept(s) + sum of weights(s, f) over the argument's feature ids; the
// intercept is the constant-on feature every argument carries.
struct EncoderParams {
  Eigen::MatrixXd weights;    // roles x features
  Eigen::VectorXd intercept;  // roles

  int roles() const { return static_cast<int>(weights.rows()); }
  int features() const { return static_cast<int>(weights.cols()); }

  static EncoderParams zeros(int roles, int features);
};

// Row i holds p(r_i = s | x, w); rows sum to 1.
Eigen::MatrixXd posteriors(std::span<const SparseVector> features, const EncoderParams& params);

// Gradient of a loss with respect to the encoder parameters, sparse over
// the feature columns that actually fire.
struct EncoderGradient {
  Eigen::VectorXd intercept;               // roles
  std::map<int, Eigen::VectorXd> columns;  // feature id -> per-role gradient
};

// Backpropagates dL/dmu through the per-row softmax into the weights:
// dL/dz_{is} = mu_{is} (dL/dmu_{is} - sum_t mu_{it} dL/dmu_{it}).
EncoderGradient encoder_backward(std::span<const SparseVector> features,
                                 const Eigen::MatrixXd& mu, const Eigen::MatrixXd& upstream);

// Argmax role per argument; ties break toward the smallest role id.
std::vector<int> predict_roles(std::span<const SparseVector> features,
                               const EncoderParams& params);

}  // namespace srli
