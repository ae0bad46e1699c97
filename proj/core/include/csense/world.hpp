#pragma once

#include <cstdint>
#include <vector>

#include "csense/rng.hpp"

namespace csense {

// Hidden truth for one episode: 0 = normal, 1 = anomalous.
using ProcessStateVector = std::vector<std::uint8_t>;

// Partition of the processes into independent groups of size 1 or 2.
// Members of a pair share the correlation coefficient rho; every process is
// normal with prior probability q.
class DependenceStructure {
public:
    DependenceStructure(int n, std::vector<std::vector<int>> groups, double rho, double q);

    // Consecutive pairs (0,1), (2,3), ... with a trailing singleton when n is odd.
    static DependenceStructure paired(int n, double rho, double q);

    int n() const { return n_; }
    double rho() const { return rho_; }
    double q() const { return q_; }
    const std::vector<std::vector<int>>& groups() const { return groups_; }

    // True when i and j are distinct members of the same pair.
    bool dependent(int i, int j) const {
        return i != j && partner_[static_cast<std::size_t>(i)] == j;
    }
    // Pair partner of i, or -1 for a singleton.
    int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }

private:
    int n_;
    std::vector<std::vector<int>> groups_;
    std::vector<int> partner_;
    double rho_;
    double q_;
};

// Noisy snapshot of a subset of processes at one time instant.
struct Observation {
    std::vector<int> selected;         // ascending process indices
    std::vector<std::uint8_t> values;  // parallel to selected
    bool empty() const { return selected.empty(); }
};

// Draws the hidden state. Pair outcomes (s_i, s_j):
//   P[00] = q^2 + rho q(1-q)
//   P[11] = (1-q)^2 + rho q(1-q)
//   P[01] = P[10] = (1-rho) q(1-q)
// Singletons are anomalous with probability 1-q. Both marginals equal q.
ProcessStateVector sample_state(const DependenceStructure& dep, RngStream& rng);

// Binary symmetric channel: each selected process reports its true state
// with probability 1-p and the flipped state with probability p.
Observation observe(const ProcessStateVector& state, const std::vector<int>& selected,
                    double flip_prob, RngStream& rng);

// P[y | s] for a single reading through the flip channel.
inline double channel_likelihood(int y, int s, double flip_prob) {
    return y == s ? 1.0 - flip_prob : flip_prob;
}

}  // namespace csense
