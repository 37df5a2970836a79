// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dockchain/chain.hpp"
#include "dockchain/discovery.hpp"

namespace dockchain {

struct PolicyKind {
    enum class Kind { FcfsWaterFilling, EqualCharge, PriorityWeighted };

    Kind kind = Kind::EqualCharge;
    double alpha = 0.9;                  // EqualCharge smoothing factor
    std::map<EvId, double> weights;      // PriorityWeighted

    static PolicyKind fcfs() { return {Kind::FcfsWaterFilling, 0.0, {}}; }
    static PolicyKind equal_charge(double alpha = 0.9) {
        if (alpha < 0.0 || alpha >= 1.0)
            throw ValidationError("alpha must lie in [0,1)");
        return {Kind::EqualCharge, alpha, {}};
    }
    static PolicyKind priority(std::map<EvId, double> weights) {
        for (const auto& [ev, w] : weights)
            if (w <= 0.0) throw ZeroWeight("weight for " + ev + " must be positive");
        return {Kind::PriorityWeighted, 0.0, std::move(weights)};
    }
};

// Algorithm-2 state: the IIR-smoothed probability of routing to socket 0.
struct IirState {
    double p = 0.5;
    double alpha = 0.9;
};

/// One IIR step: p <- alpha*p + (1-alpha)*L0/(L0+L1). With both lengths zero
/// there is nothing to serve and p is left unchanged.
inline IirState update_p(IirState state, double len0, double len1) {
    if (len0 < 0.0 || len1 < 0.0)
        throw ValidationError("chain lengths must be nonnegative");
    if (len0 + len1 == 0.0) return state;
    state.p = state.alpha * state.p +
              (1.0 - state.alpha) * (len0 / (len0 + len1));
    return state;
}

/// The unique fixed point of update_p for any alpha < 1.
inline double steady_state_p(double len0, double len1) {
    if (len0 < 0.0 || len1 < 0.0)
        throw ValidationError("chain lengths must be nonnegative");
    if (len0 + len1 == 0.0) throw DegenerateChain();
    return len0 / (len0 + len1);
}

/// Iterates update_p with constant lengths until |dp| < tol; returns the
/// visited p values (index 0 = start). Geometric, so the loop is short.
inline std::vector<double> iterate_to_fixed_point(IirState state, double len0,
                                                  double len1,
                                                  double tol = 1e-12,
                                                  int max_iters = 100000) {
    std::vector<double> trajectory{state.p};
    for (int i = 0; i < max_iters; ++i) {
        IirState next = update_p(state, len0, len1);
        trajectory.push_back(next.p);
        if (std::abs(next.p - state.p) < tol) return trajectory;
        state = next;
    }
    return trajectory;
}

using SocketLengths = std::map<AdapterId, std::array<int, 2>>;

/// Rounded per-socket lengths out of a discovery result.
inline SocketLengths lengths_from_discovery(const DiscoveryResult& result) {
    SocketLengths lengths;
    for (const auto& [id, entry] : result)
        lengths[id] = {entry.estimates[0].rounded, entry.estimates[1].rounded};
    return lengths;
}

/// Ground-truth per-socket authorized-EV counts (what discovery estimates).
inline SocketLengths ground_truth_lengths(const ChainNetwork& net) {
    SocketLengths lengths;
    for (const auto& [id, a] : net.adapters) {
        if (a.orphaned) continue;
        lengths[id] = {authorized_evs_below(net, id, 0),
                       authorized_evs_below(net, id, 1)};
    }
    return lengths;
}

/// Equal-charge probabilities: each adapter routes to socket 0 with
/// p = L0/(L0+L1). With exact lengths on a linear chain of N EVs, every EV
/// is reached with per-slot probability exactly 1/N and the terminal empty
/// socket with probability 0.
inline std::map<AdapterId, double> equal_charge_probabilities(
    const ChainNetwork& net, const SocketLengths& lengths) {
    std::map<AdapterId, double> out;
    for (const auto& [id, a] : net.adapters) {
        if (a.orphaned) continue;
        auto it = lengths.find(id);
        if (it == lengths.end())
            throw ValidationError("no length estimates for adapter " + id);
        out[id] = steady_state_p(it->second[0], it->second[1]);
    }
    return out;
}

namespace detail {

inline double weight_below(const ChainNetwork& net,
                           const std::map<EvId, double>& weights,
                           const AdapterId& id, int socket) {
    const SocketOccupant& s = net.adapter(id).sockets[static_cast<size_t>(socket)];
    if (s.is_empty()) return 0.0;
    if (s.is_ev()) {
        if (!s.authorized) return 0.0;
        auto it = weights.find(s.ev);
        if (it == weights.end() || it->second <= 0.0)
            throw ZeroWeight("EV " + s.ev + " has no positive weight");
        return it->second;
    }
    if (net.adapter(s.adapter).orphaned) return 0.0;
    return weight_below(net, weights, s.adapter, 0) +
           weight_below(net, weights, s.adapter, 1);
}

}  // namespace detail

/// Premium-user generalization: p = W0/(W0+W1) with per-socket weight sums
/// replacing EV counts. Uniform weights reduce to equal charge exactly.
inline std::map<AdapterId, double> priority_probabilities(
    const ChainNetwork& net, const std::map<EvId, double>& weights) {
    std::map<AdapterId, double> out;
    for (const auto& [id, a] : net.adapters) {
        if (a.orphaned) continue;
        double w0 = detail::weight_below(net, weights, id, 0);
        double w1 = detail::weight_below(net, weights, id, 1);
        if (w0 + w1 == 0.0) throw DegenerateChain();
        out[id] = w0 / (w0 + w1);
    }
    return out;
}

inline void apply_probabilities(ChainNetwork& net,
                                const std::map<AdapterId, double>& probabilities) {
    for (auto& [id, a] : net.adapters) {
        auto it = probabilities.find(id);
        if (it != probabilities.end()) a.p = it->second;
    }
}

inline void reset_discovery_p(ChainNetwork& net) {
    for (auto& [id, a] : net.adapters) a.p = 0.5;
}

// ---------------------------------------------------------------------------
// FCFS water filling.

struct FcfsPlan {
    double quantum_ah = 0.0;                      // Ah delivered per slot
    std::vector<EvId> slot_targets;               // slot_targets[i] served in slot i+1
    std::map<EvId, std::uint64_t> completion_slot;  // 1-based
};

/// Serves EVs to completion strictly in arrival order: the full supply goes
/// to the earliest unsatisfied EV each slot.
inline FcfsPlan fcfs_schedule(const std::vector<EvId>& arrival_order,
                              const std::map<EvId, double>& demands_ah,
                              double supply_a, double tau_s) {
    if (supply_a <= 0.0) throw ValidationError("supply must be positive");
    if (tau_s <= 0.0) throw ValidationError("tau must be positive");
    FcfsPlan plan;
    plan.quantum_ah = supply_a * tau_s / 3600.0;
    std::uint64_t slot = 0;
    for (const EvId& ev : arrival_order) {
        auto it = demands_ah.find(ev);
        double demand = it == demands_ah.end() ? 0.0 : it->second;
        if (demand < 0.0) throw ValidationError("negative demand for " + ev);
        if (!std::isfinite(demand))
            throw ValidationError("unbounded demand has no finite schedule: " + ev);
        auto slots_needed = static_cast<std::uint64_t>(
            std::ceil(demand / plan.quantum_ah - 1e-12));
        for (std::uint64_t i = 0; i < slots_needed; ++i)
            plan.slot_targets.push_back(ev);
        slot += slots_needed;
        plan.completion_slot[ev] = slot;
    }
    return plan;
}

}  // namespace dockchain
