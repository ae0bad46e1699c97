#include "csense/world.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace csense {

DependenceStructure::DependenceStructure(int n, std::vector<std::vector<int>> groups,
                                         double rho, double q)
    : n_(n), groups_(std::move(groups)), rho_(rho), q_(q) {
    if (n <= 0) throw std::invalid_argument("DependenceStructure: n must be positive");
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("DependenceStructure: rho must lie in [0, 1]");
    if (q < 0.0 || q > 1.0)
        throw std::invalid_argument("DependenceStructure: q must lie in [0, 1]");

    partner_.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int covered = 0;
    for (const auto& g : groups_) {
        if (g.empty() || g.size() > 2)
            throw std::invalid_argument("DependenceStructure: groups must have size 1 or 2");
        for (int idx : g) {
            if (idx < 0 || idx >= n)
                throw std::invalid_argument("DependenceStructure: group index " +
                                            std::to_string(idx) + " out of range");
            if (seen[static_cast<std::size_t>(idx)])
                throw std::invalid_argument("DependenceStructure: process " +
                                            std::to_string(idx) + " appears in two groups");
            seen[static_cast<std::size_t>(idx)] = 1;
            ++covered;
        }
        if (g.size() == 2) {
            partner_[static_cast<std::size_t>(g[0])] = g[1];
            partner_[static_cast<std::size_t>(g[1])] = g[0];
        }
    }
    if (covered != n)
        throw std::invalid_argument("DependenceStructure: groups must partition all processes");
}

DependenceStructure DependenceStructure::paired(int n, double rho, double q) {
    std::vector<std::vector<int>> groups;
    for (int i = 0; i + 1 < n; i += 2) groups.push_back({i, i + 1});
    if (n % 2 == 1) groups.push_back({n - 1});
    return DependenceStructure(n, std::move(groups), rho, q);
}

ProcessStateVector sample_state(const DependenceStructure& dep, RngStream& rng) {
    const double q = dep.q();
    const double rho = dep.rho();
    ProcessStateVector s(static_cast<std::size_t>(dep.n()), 0);
    for (const auto& g : dep.groups()) {
        if (g.size() == 1) {
            s[static_cast<std::size_t>(g[0])] = rng.bernoulli(1.0 - q) ? 1 : 0;
            continue;
        }
        const double p00 = q * q + rho * q * (1.0 - q);
        const double p01 = (1.0 - rho) * q * (1.0 - q);
        const double p10 = p01;
        const double u = rng.uniform();
        std::uint8_t a;
        std::uint8_t b;
        if (u < p00) {
            a = 0, b = 0;
        } else if (u < p00 + p01) {
            a = 0, b = 1;
        } else if (u < p00 + p01 + p10) {
            a = 1, b = 0;
        } else {
            a = 1, b = 1;
        }
        s[static_cast<std::size_t>(g[0])] = a;
        s[static_cast<std::size_t>(g[1])] = b;
    }
    return s;
}

Observation observe(const ProcessStateVector& state, const std::vector<int>& selected,
                    double flip_prob, RngStream& rng) {
    if (flip_prob < 0.0 || flip_prob > 1.0)
        throw std::invalid_argument("observe: flip probability must lie in [0, 1]");
    Observation obs;
    obs.selected = selected;
    obs.values.reserve(selected.size());
    int prev = -1;
    for (int idx : selected) {
        if (idx < 0 || idx >= static_cast<int>(state.size()))
            throw std::invalid_argument("observe: selected index " + std::to_string(idx) +
                                        " out of range");
        if (idx <= prev)
            throw std::invalid_argument("observe: selected indices must be ascending and unique");
        prev = idx;
        const std::uint8_t truth = state[static_cast<std::size_t>(idx)];
        obs.values.push_back(rng.bernoulli(flip_prob) ? static_cast<std::uint8_t>(1 - truth)
                                                      : truth);
    }
    return obs;
}

}  // namespace csense
