#include "csense/belief.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace csense {

namespace {

double clamp_belief(double x) {
    return std::clamp(x, kBeliefFloor, 1.0 - kBeliefFloor);
}

}  // namespace

PairwiseModel::PairwiseModel(const DependenceStructure& dep) : n_(dep.n()) {
    const double q = dep.q();
    const double rho = dep.rho();
    table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) * 4, 0.0);
    mask_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a) {
        for (int i = 0; i < n_; ++i) {
            for (int s = 0; s < 2; ++s) {
                double p0;  // P[s_a = 0 | s_i = s]
                if (a == i) {
                    p0 = s == 0 ? 1.0 : 0.0;
                } else if (dep.dependent(a, i)) {
                    p0 = s == 0 ? q + rho * (1.0 - q) : (1.0 - rho) * q;
                } else {
                    p0 = q;
                }
                table_[index(a, i, s, 0)] = p0;
                table_[index(a, i, s, 1)] = 1.0 - p0;
            }
            mask_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(i)] = (a == i || dep.dependent(a, i)) ? 1 : 0;
        }
    }
}

BeliefVector prior_belief(const DependenceStructure& dep) {
    return BeliefVector(static_cast<std::size_t>(dep.n()), dep.q());
}

double likelihood(int y_a, int a, int i, int s, const PairwiseModel& model, double flip_prob) {
    double acc = 0.0;
    for (int s_prime = 0; s_prime < 2; ++s_prime)
        acc += channel_likelihood(y_a, s_prime, flip_prob) * model.cond(a, s_prime, i, s);
    return acc;
}

void update_marginal(BeliefVector& sigma, const Observation& obs, const PairwiseModel& model,
                     double flip_prob) {
    if (obs.empty()) return;
    const int n = model.n();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("update_marginal: belief length does not match model");
    for (int i = 0; i < n; ++i) {
        double lik0 = 1.0;
        double lik1 = 1.0;
        bool touched = false;
        for (std::size_t k = 0; k < obs.selected.size(); ++k) {
            const int a = obs.selected[k];
            if (!model.informative(a, i)) continue;
            touched = true;
            const int y = obs.values[k];
            lik0 *= likelihood(y, a, i, 0, model, flip_prob);
            lik1 *= likelihood(y, a, i, 1, model, flip_prob);
        }
        if (!touched) continue;  // observation independent of s_i: identity update
        const double num0 = sigma[static_cast<std::size_t>(i)] * lik0;
        const double num1 = (1.0 - sigma[static_cast<std::size_t>(i)]) * lik1;
        const double den = num0 + num1;
        if (den <= 0.0)
            throw ContradictionError("update_marginal: both hypotheses for process " +
                                     std::to_string(i) + " have zero likelihood");
        sigma[static_cast<std::size_t>(i)] = clamp_belief(num0 / den);
    }
}

void update_naive(BeliefVector& sigma, const Observation& obs, double flip_prob) {
    for (std::size_t k = 0; k < obs.selected.size(); ++k) {
        const int i = obs.selected[k];
        if (i < 0 || i >= static_cast<int>(sigma.size()))
            throw std::invalid_argument("update_naive: selected index out of range");
        const int y = obs.values[k];
        const double num0 = sigma[static_cast<std::size_t>(i)] * channel_likelihood(y, 0, flip_prob);
        const double num1 =
            (1.0 - sigma[static_cast<std::size_t>(i)]) * channel_likelihood(y, 1, flip_prob);
        const double den = num0 + num1;
        if (den <= 0.0)
            throw ContradictionError("update_naive: both hypotheses for process " +
                                     std::to_string(i) + " have zero likelihood");
        sigma[static_cast<std::size_t>(i)] = clamp_belief(num0 / den);
    }
}

JointBelief::JointBelief(const DependenceStructure& dep) : n_(dep.n()) {
    if (n_ > kMaxProcesses)
        throw std::invalid_argument("JointBelief: refusing n = " + std::to_string(n_) +
                                    " (> " + std::to_string(kMaxProcesses) +
                                    "); the 2^N table would be impractical");
    const double q = dep.q();
    const double rho = dep.rho();
    const std::size_t size = std::size_t{1} << n_;
    pi_.assign(size, 1.0);
    for (std::size_t r = 0; r < size; ++r) {
        for (const auto& g : dep.groups()) {
            if (g.size() == 1) {
                const bool anomalous = (r >> g[0]) & 1;
                pi_[r] *= anomalous ? 1.0 - q : q;
            } else {
                const bool a = (r >> g[0]) & 1;
                const bool b = (r >> g[1]) & 1;
                double mass;
                if (!a && !b)
                    mass = q * q + rho * q * (1.0 - q);
                else if (a && b)
                    mass = (1.0 - q) * (1.0 - q) + rho * q * (1.0 - q);
                else
                    mass = (1.0 - rho) * q * (1.0 - q);
                pi_[r] *= mass;
            }
        }
    }
    normalize();
}

void JointBelief::update(const Observation& obs, double flip_prob) {
    if (obs.empty()) return;
    for (std::size_t r = 0; r < pi_.size(); ++r) {
        double factor = 1.0;
        for (std::size_t k = 0; k < obs.selected.size(); ++k) {
            const int s_a = static_cast<int>((r >> obs.selected[k]) & 1);
            factor *= channel_likelihood(obs.values[k], s_a, flip_prob);
        }
        pi_[r] *= factor;
    }
    normalize();
}

void JointBelief::normalize() {
    double total = 0.0;
    for (double m : pi_) total += m;
    if (total <= 0.0)
        throw ContradictionError("JointBelief: posterior mass vanished for every state");
    for (double& m : pi_) m /= total;
}

BeliefVector JointBelief::marginalize() const {
    BeliefVector sigma(static_cast<std::size_t>(n_), 0.0);
    for (std::size_t r = 0; r < pi_.size(); ++r)
        for (int i = 0; i < n_; ++i)
            if (((r >> i) & 1) == 0) sigma[static_cast<std::size_t>(i)] += pi_[r];
    return sigma;
}

double JointBelief::max_mass() const {
    return *std::max_element(pi_.begin(), pi_.end());
}

std::size_t JointBelief::argmax_state() const {
    return static_cast<std::size_t>(
        std::distance(pi_.begin(), std::max_element(pi_.begin(), pi_.end())));
}

ProcessStateVector JointBelief::argmax_estimate() const {
    const std::size_t r = argmax_state();
    ProcessStateVector s(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = (r >> i) & 1;
    return s;
}

ProcessStateVector estimate_states(const BeliefVector& sigma) {
    ProcessStateVector s(sigma.size(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i)
        s[i] = sigma[i] >= 1.0 - sigma[i] ? 0 : 1;
    return s;
}

bool stopping_met(const BeliefVector& sigma, double upsilon) {
    for (double x : sigma)
        if (!(confidence(x) > upsilon)) return false;
    return true;
}

bool joint_stopping_met(const JointBelief& joint, double upsilon) {
    return joint.max_mass() > upsilon;
}

}  // namespace csense
