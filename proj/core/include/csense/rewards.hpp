#pragma once

#include <span>
#include <string_view>

#include "csense/belief.hpp"

namespace csense {

// Which uncertainty statistic drives the instantaneous reward.
enum class RewardKind { Entropy, Llr };

const char* to_string(RewardKind kind);
RewardKind reward_kind_from_string(std::string_view name);

struct CostParams {
    double eta = 1.0;          // regularizer weighting the sensing cost
    double lambda_cost = 1.0;  // cost per observation
};

// Binary entropy H(x) in nats; input clamped to [kBeliefFloor, 1 - kBeliefFloor].
double binary_entropy(double x);

// Average log-likelihood ratio L(x) = x ln(x/(1-x)) + (1-x) ln((1-x)/x), >= 0.
double llr_stat(double x);

// Entropy of a discrete pmf in nats (joint-pmf baseline reward).
double shannon_entropy(std::span<const double> pmf);

// Uncertainty reduction from one belief transition, summed over processes.
double central_reward(RewardKind kind, const BeliefVector& prev, const BeliefVector& next);

// Central reward minus the sensing cost eta * lambda * |A(k)|.
double decentral_reward(RewardKind kind, const BeliefVector& prev, const BeliefVector& next,
                        int num_selected, const CostParams& cost);

}  // namespace csense
