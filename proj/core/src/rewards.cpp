#include "csense/rewards.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace csense {

const char* to_string(RewardKind kind) {
    return kind == RewardKind::Entropy ? "entropy" : "llr";
}

RewardKind reward_kind_from_string(std::string_view name) {
    if (name == "entropy") return RewardKind::Entropy;
    if (name == "llr") return RewardKind::Llr;
    throw std::invalid_argument("unknown reward kind '" + std::string(name) +
                                "' (expected entropy|llr)");
}

namespace {

double clamp_prob(double x) {
    return std::clamp(x, kBeliefFloor, 1.0 - kBeliefFloor);
}

}  // namespace

double binary_entropy(double x) {
    const double p = clamp_prob(x);
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

double llr_stat(double x) {
    const double p = clamp_prob(x);
    return p * std::log(p / (1.0 - p)) + (1.0 - p) * std::log((1.0 - p) / p);
}

double shannon_entropy(std::span<const double> pmf) {
    double h = 0.0;
    for (double m : pmf) {
        if (m <= 0.0) continue;
        h -= m * std::log(m);
    }
    return h;
}

double central_reward(RewardKind kind, const BeliefVector& prev, const BeliefVector& next) {
    if (prev.size() != next.size())
        throw std::invalid_argument("central_reward: belief lengths differ");
    double r = 0.0;
    if (kind == RewardKind::Entropy) {
        for (std::size_t i = 0; i < prev.size(); ++i)
            r += binary_entropy(prev[i]) - binary_entropy(next[i]);
    } else {
        for (std::size_t i = 0; i < prev.size(); ++i)
            r += llr_stat(next[i]) - llr_stat(prev[i]);
    }
    return r;
}

double decentral_reward(RewardKind kind, const BeliefVector& prev, const BeliefVector& next,
                        int num_selected, const CostParams& cost) {
    if (num_selected < 0)
        throw std::invalid_argument("decentral_reward: negative selection count");
    return central_reward(kind, prev, next) - cost.eta * cost.lambda_cost * num_selected;
}

}  // namespace csense
