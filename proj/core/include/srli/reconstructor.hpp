#pragma once

#include <Eigen/Core>
#include <map>
#include <span>
#include <vector>

#include "srli/corpus.hpp"

namespace srli {

// Bilinear argument-reconstruction model. An argument lemma a has an
// embedding u_a and a scalar bias b_a; each role s has a cross-predicate
// projection C_s and, for every known verb v, a verb-specific projection
// C_{v,s}; the effective projection is their sum.
struct ReconParams {
  int embedding_dim = 0;   // d
  int projection_dim = 0;  // k
  Eigen::MatrixXd embeddings;  // d x |lexicon|, one column per lemma
  Eigen::VectorXd bias;        // |lexicon|
  std::vector<Eigen::MatrixXd> shared_proj;            // per role, d x k
  std::map<int, std::vector<Eigen::MatrixXd>> verb_proj;  // verb id -> per role d x k

  int roles() const { return static_cast<int>(shared_proj.size()); }
  int lexicon_size() const { return static_cast<int>(bias.size()); }
  bool has_verb(int verb) const { return verb_proj.contains(verb); }
};

// Per-instance quantities reused across the argument predictions of one
// predicate. With B_s the effective projection for role s:
//   projections[i] = sum_s mu_{is} B_s              (d x k)
//   messages.col(i) = projections[i]^T u_{a_i}       (k)
//   total           = sum_i messages.col(i)          (k)
//   context.col(i)  = projections[i] (total - m_i)   (d)
// so that phi_i(a) = u_a . context.col(i) + b_a.
struct InstanceWorkspace {
  std::vector<Eigen::MatrixXd> projections;
  Eigen::MatrixXd messages;
  Eigen::VectorXd total;
  Eigen::MatrixXd context;
};

// mu has one row per argument. Unknown verbs fall back to the shared
// projections alone.
InstanceWorkspace build_workspace(const PredicateInstance& instance, const Eigen::MatrixXd& mu,
                                  const ReconParams& params);

// Score of lemma as the filler of the given argument position, with the
// other positions fixed to their true lemmas. N = 1 collapses to bias(lemma).
double phi(const InstanceWorkspace& workspace, const ReconParams& params, int position,
           int lemma);

// log sigma(phi(true)) + sum over negatives of log sigma(-phi(negative))
// for one argument position.
double recon_position_term(const InstanceWorkspace& workspace, const ReconParams& params,
                           const PredicateInstance& instance, int position,
                           std::span<const int> negatives);

// Sum of the position terms over all arguments; higher is better.
double recon_objective(const PredicateInstance& instance, const Eigen::MatrixXd& mu,
                       const std::vector<std::vector<int>>& negatives,
                       const ReconParams& params);

struct ReconGradient {
  std::map<int, Eigen::VectorXd> embeddings;  // lemma id -> d
  std::map<int, double> bias;                 // lemma id -> scalar
  // Gradient w.r.t. the effective projection B_s = C_{v,s} + C_s; the same
  // block applies to both the shared and (when present) verb-specific side.
  std::vector<Eigen::MatrixXd> projections;
  Eigen::MatrixXd posteriors;  // dL/dmu, one row per argument
  bool verb_specific = false;  // whether the instance verb has its own projections
};

// Exact analytic gradients of recon_objective.
ReconGradient recon_backward(const PredicateInstance& instance, const Eigen::MatrixXd& mu,
                             const std::vector<std::vector<int>>& negatives,
                             const ReconParams& params, double* objective_out = nullptr);

// Diagnostic score over a hard role assignment:
//   sum_{i != j} (B_{r_i}^T u_{a_i}) . (B_{r_j}^T u_{a_j}).
double score_tuple(std::span<const int> lemmas, std::span<const int> roles, int verb,
                   const ReconParams& params);

}  // namespace srli
