#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "csense/world.hpp"

namespace csense {

// Marginal posterior: sigma_i = P[s_i = 0 | observations so far].
using BeliefVector = std::vector<double>;

// Numerical floor keeping beliefs away from 0 and 1 so log-based rewards stay
// finite and the recursion cannot absorb permanently.
inline constexpr double kBeliefFloor = 1e-12;

// Every hypothesis for some entry received zero likelihood. Reachable only
// when the flip probability is exactly 0 or 1 and the inputs are inconsistent.
class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conditional table P[s_a = s' | s_i = s] for every ordered pair, derived
// analytically from the dependence structure, plus the mask of pairs whose
// observation actually moves the belief.
class PairwiseModel {
public:
    explicit PairwiseModel(const DependenceStructure& dep);

    int n() const { return n_; }

    // P[s_a = s_prime | s_i = s]
    double cond(int a, int s_prime, int i, int s) const {
        return table_[index(a, i, s, s_prime)];
    }

    // True when an observation of a carries information about i.
    bool informative(int a, int i) const {
        return mask_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(i)] != 0;
    }

private:
    std::size_t index(int a, int i, int s, int s_prime) const {
        return ((static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(i)) *
                    2 +
                static_cast<std::size_t>(s)) *
                   2 +
               static_cast<std::size_t>(s_prime);
    }

    int n_;
    std::vector<double> table_;
    std::vector<std::uint8_t> mask_;
};

inline PairwiseModel build_pairwise(const DependenceStructure& dep) {
    return PairwiseModel(dep);
}

// sigma(0) = q * 1
BeliefVector prior_belief(const DependenceStructure& dep);

// P[y_a | s_i = s], marginalized over the state of process a.
double likelihood(int y_a, int a, int i, int s, const PairwiseModel& model, double flip_prob);

// One step of the marginal recursion. Entries structurally independent of
// every observed process are left untouched (the recursion reduces to the
// identity for them). Results are clamped to [kBeliefFloor, 1 - kBeliefFloor].
void update_marginal(BeliefVector& sigma, const Observation& obs, const PairwiseModel& model,
                     double flip_prob);

// Restricted variant that ignores cross-process coupling entirely: only the
// observed entries move, each through its own channel likelihood.
void update_naive(BeliefVector& sigma, const Observation& obs, double flip_prob);

// Exact posterior over all 2^N assignments. Bit i of a state index r is s_i.
// Serves as the correctness oracle for the marginal recursion and as the
// belief state of the joint-pmf baseline.
class JointBelief {
public:
    static constexpr int kMaxProcesses = 20;

    // Prior constructed from the dependence structure.
    explicit JointBelief(const DependenceStructure& dep);

    int n() const { return n_; }
    std::span<const double> pmf() const { return pi_; }

    void update(const Observation& obs, double flip_prob);

    BeliefVector marginalize() const;

    double max_mass() const;
    std::size_t argmax_state() const;
    ProcessStateVector argmax_estimate() const;

private:
    void normalize();

    int n_;
    std::vector<double> pi_;
};

// Componentwise MAP decision; the tie sigma_i = 0.5 declares "normal".
ProcessStateVector estimate_states(const BeliefVector& sigma);

inline double confidence(double sigma_i) { return sigma_i >= 0.5 ? sigma_i : 1.0 - sigma_i; }

// True when every process's confidence exceeds upsilon.
bool stopping_met(const BeliefVector& sigma, double upsilon);

// True when one joint assignment holds more than upsilon of the mass.
bool joint_stopping_met(const JointBelief& joint, double upsilon);

}  // namespace csense
