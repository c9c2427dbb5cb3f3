#include "srli/reconstructor.hpp"

#include <cmath>

namespace srli {

namespace {

double log_sigmoid(double x) {
  // -log(1 + exp(-x)) without overflow on either tail.
  if (x >= 0.0) {
    return -std::log1p(std::exp(-x));
  }
  return x - std::log1p(std::exp(x));
}

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

InstanceWorkspace build_workspace(const PredicateInstance& instance, const Eigen::MatrixXd& mu,
                                  const ReconParams& params) {
  const int n = static_cast<int>(instance.arguments.size());
  const int roles = params.roles();
  const auto* verb_blocks =
      params.has_verb(instance.verb_id) ? &params.verb_proj.at(instance.verb_id) : nullptr;

  InstanceWorkspace ws;
  ws.projections.reserve(static_cast<std::size_t>(n));
  ws.messages.resize(params.projection_dim, n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd projection =
        Eigen::MatrixXd::Zero(params.embedding_dim, params.projection_dim);
    for (int s = 0; s < roles; ++s) {
      const double weight = mu(i, s);
      projection.noalias() += weight * params.shared_proj[static_cast<std::size_t>(s)];
      if (verb_blocks) {
        projection.noalias() += weight * (*verb_blocks)[static_cast<std::size_t>(s)];
      }
    }
    const int lemma = instance.arguments[static_cast<std::size_t>(i)].lemma_id;
    ws.messages.col(i).noalias() = projection.transpose() * params.embeddings.col(lemma);
    ws.projections.push_back(std::move(projection));
  }
  ws.total = ws.messages.rowwise().sum();

  ws.context.resize(params.embedding_dim, n);
  for (int i = 0; i < n; ++i) {
    ws.context.col(i).noalias() =
        ws.projections[static_cast<std::size_t>(i)] * (ws.total - ws.messages.col(i));
  }
  return ws;
}

double phi(const InstanceWorkspace& workspace, const ReconParams& params, int position,
           int lemma) {
  return params.embeddings.col(lemma).dot(workspace.context.col(position)) + params.bias(lemma);
}

double recon_position_term(const InstanceWorkspace& workspace, const ReconParams& params,
                           const PredicateInstance& instance, int position,
                           std::span<const int> negatives) {
  const int lemma = instance.arguments[static_cast<std::size_t>(position)].lemma_id;
  double term = log_sigmoid(phi(workspace, params, position, lemma));
  for (int negative : negatives) {
    term += log_sigmoid(-phi(workspace, params, position, negative));
  }
  return term;
}

double recon_objective(const PredicateInstance& instance, const Eigen::MatrixXd& mu,
                       const std::vector<std::vector<int>>& negatives,
                       const ReconParams& params) {
  const InstanceWorkspace ws = build_workspace(instance, mu, params);
  double objective = 0.0;
  for (int i = 0; i < static_cast<int>(instance.arguments.size()); ++i) {
    objective += recon_position_term(ws, params, instance, i,
                                     negatives[static_cast<std::size_t>(i)]);
  }
  return objective;
}

ReconGradient recon_backward(const PredicateInstance& instance, const Eigen::MatrixXd& mu,
                             const std::vector<std::vector<int>>& negatives,
                             const ReconParams& params, double* objective_out) {
  const int n = static_cast<int>(instance.arguments.size());
  const int roles = params.roles();
  const int d = params.embedding_dim;
  const int k = params.projection_dim;
  const InstanceWorkspace ws = build_workspace(instance, mu, params);

  ReconGradient grad;
  grad.posteriors = Eigen::MatrixXd::Zero(n, roles);
  grad.projections.assign(static_cast<std::size_t>(roles), Eigen::MatrixXd::Zero(d, k));
  grad.verb_specific = params.has_verb(instance.verb_id);

  double objective = 0.0;

  // For every scored candidate (i, a) with coefficient gamma:
  //   gamma = 1 - sigma(phi)   for the true lemma,
  //   gamma = -sigma(phi)      for a negative sample,
  // phi depends on u_a directly and on the context through A_i and the
  // other positions' messages. gamma_embedding[i] collects
  // sum_events gamma * u_a for the indirect parts.
  Eigen::MatrixXd gamma_embedding = Eigen::MatrixXd::Zero(d, n);
  auto add_event = [&](int position, int lemma, double gamma) {
    grad.bias[lemma] += gamma;
    auto [it, inserted] = grad.embeddings.try_emplace(lemma, Eigen::VectorXd::Zero(d));
    it->second.noalias() += gamma * ws.context.col(position);
    gamma_embedding.col(position).noalias() += gamma * params.embeddings.col(lemma);
  };

  for (int i = 0; i < n; ++i) {
    const int lemma = instance.arguments[static_cast<std::size_t>(i)].lemma_id;
    const double positive_phi = phi(ws, params, i, lemma);
    objective += log_sigmoid(positive_phi);
    add_event(i, lemma, 1.0 - sigmoid(positive_phi));
    for (int negative : negatives[static_cast<std::size_t>(i)]) {
      const double negative_phi = phi(ws, params, i, negative);
      objective += log_sigmoid(-negative_phi);
      add_event(i, negative, -sigmoid(negative_phi));
    }
  }

  // dL/dK_i where K_i = total - m_i is the context sum seen by position i.
  Eigen::MatrixXd context_grad(k, n);
  for (int i = 0; i < n; ++i) {
    context_grad.col(i).noalias() =
        ws.projections[static_cast<std::size_t>(i)].transpose() * gamma_embedding.col(i);
  }
  const Eigen::VectorXd context_grad_total = context_grad.rowwise().sum();

  const auto* verb_blocks =
      grad.verb_specific ? &params.verb_proj.at(instance.verb_id) : nullptr;

  for (int i = 0; i < n; ++i) {
    const int lemma = instance.arguments[static_cast<std::size_t>(i)].lemma_id;
    // Everything flowing into this position's message m_i = A_i^T u_{a_i}.
    const Eigen::VectorXd message_grad = context_grad_total - context_grad.col(i);

    auto [it, inserted] = grad.embeddings.try_emplace(lemma, Eigen::VectorXd::Zero(d));
    it->second.noalias() += ws.projections[static_cast<std::size_t>(i)] * message_grad;

    // dL/dA_i: the direct candidate part plus the message part.
    Eigen::MatrixXd projection_grad =
        gamma_embedding.col(i) * (ws.total - ws.messages.col(i)).transpose();
    projection_grad.noalias() += params.embeddings.col(lemma) * message_grad.transpose();

    for (int s = 0; s < roles; ++s) {
      grad.projections[static_cast<std::size_t>(s)].noalias() += mu(i, s) * projection_grad;
      double coupling =
          projection_grad.cwiseProduct(params.shared_proj[static_cast<std::size_t>(s)]).sum();
      if (verb_blocks) {
        coupling +=
            projection_grad.cwiseProduct((*verb_blocks)[static_cast<std::size_t>(s)]).sum();
      }
      grad.posteriors(i, s) = grad.posteriors(i, s) + coupling;
    }
  }

  if (objective_out != nullptr) {
    *objective_out = objective;
  }
  return grad;
}

double score_tuple(std::span<const int> lemmas, std::span<const int> roles, int verb,
                   const ReconParams& params) {
  const int n = static_cast<int>(lemmas.size());
  const auto* verb_blocks = params.has_verb(verb) ? &params.verb_proj.at(verb) : nullptr;
  Eigen::MatrixXd messages(params.projection_dim, n);
  for (int i = 0; i < n; ++i) {
    const auto role = static_cast<std::size_t>(roles[static_cast<std::size_t>(i)]);
    Eigen::MatrixXd projection = params.shared_proj[role];
    if (verb_blocks) {
      projection += (*verb_blocks)[role];
    }
    messages.col(i).noalias() =
        projection.transpose() * params.embeddings.col(lemmas[static_cast<std::size_t>(i)]);
  }
  double score = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        score += messages.col(i).dot(messages.col(j));
      }
    }
  }
  return score;
}

}  // namespace srli
