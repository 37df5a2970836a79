// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dockchain/chain.hpp"
#include "dockchain/discovery.hpp"
#include "dockchain/policy.hpp"
#include "dockchain/propagate.hpp"
#include "dockchain/rng.hpp"

namespace dockchain {

struct SimConfig {
    std::uint64_t slots = 1000;
    double tau_s = 1.0;
    double threshold_a = 0.0;
    NoiseModel noise;
    bool record_trace = false;

    void validate() const {
        if (tau_s <= 0.0) throw ValidationError("tau must be positive");
        if (threshold_a < 0.0) throw ValidationError("threshold must be nonnegative");
    }
};

// One trace row; CSV column order is exactly the field order here:
// slot, adapter_id, chosen_socket, powered, draw_flag, sink_kind, sink_id, delivered_A
struct SimTraceRecord {
    std::uint64_t slot = 0;
    AdapterId adapter_id;
    int chosen_socket = 0;
    bool powered = false;
    bool drew = false;
    SinkKind sink = SinkKind::EmptySocket;
    std::string sink_id;
    double delivered_a = 0.0;
};

struct StepMeasurement {
    std::map<AdapterId, int> choices;
    std::set<AdapterId> powered;
    std::set<AdapterId> drew;
};

namespace detail {

// Adapter socket hosting the given EV, or nullopt.
inline std::optional<std::pair<AdapterId, int>> locate_ev(const ChainNetwork& net,
                                                          const EvId& ev) {
    for (const auto& [id, a] : net.adapters)
        for (int i : {0, 1})
            if (a.sockets[static_cast<size_t>(i)].is_ev() &&
                a.sockets[static_cast<size_t>(i)].ev == ev)
                return std::make_pair(id, i);
    return std::nullopt;
}

// Earliest-arrived authorized, locked, unsatisfied EV on the powered tree.
inline std::optional<EvId> fcfs_target(const ChainNetwork& net) {
    std::optional<EvId> best;
    std::uint64_t best_seq = 0;
    for (const auto& [id, a] : net.adapters) {
        if (a.orphaned) continue;
        for (const auto& s : a.sockets) {
            if (!s.is_ev() || !s.authorized || !s.locked) continue;
            auto it = net.evs.find(s.ev);
            if (it == net.evs.end() || it->second.battery.full()) continue;
            if (!best || it->second.arrival_seq < best_seq) {
                best = s.ev;
                best_seq = it->second.arrival_seq;
            }
        }
    }
    return best;
}

// Overrides choices along the root-to-EV path so the slot serves `ev`.
inline void route_to_ev(const ChainNetwork& net, const EvId& ev,
                        std::map<AdapterId, int>& choices) {
    auto loc = locate_ev(net, ev);
    if (!loc) return;
    choices[loc->first] = loc->second;
    const Adapter* cur = &net.adapter(loc->first);
    while (cur->upstream.kind == Upstream::Kind::Adapter) {
        choices[cur->upstream.parent] = cur->upstream.socket;
        cur = &net.adapter(cur->upstream.parent);
    }
}

}  // namespace detail

/// Advances the network by one slot: every adapter draws its routing choice
/// with its own p (FCFS overrides the path to the head-of-line EV), current
/// propagates, measurement noise is applied, and the sink EV's battery is
/// credited delivered_current * tau.
inline SlotOutcome step(ChainNetwork& net, const PolicyKind& policy, Rng& rng,
                        const SimConfig& config, std::uint64_t slot_index = 0,
                        StepMeasurement* meas = nullptr) {
    std::map<AdapterId, int> choices;
    for (const auto& [id, a] : net.adapters) {
        if (a.orphaned) continue;
        choices[id] = rng.flip(a.p) ? 0 : 1;
    }
    if (policy.kind == PolicyKind::Kind::FcfsWaterFilling) {
        if (auto target = detail::fcfs_target(net))
            detail::route_to_ev(net, *target, choices);
    }
    SlotOutcome outcome = propagate_current(net, choices, net.root.max_current_a);
    outcome.slot_index = slot_index;
    if (outcome.delivered_a > 0.0) {
        auto it = net.evs.find(outcome.sink_ev);
        if (it != net.evs.end())
            it->second.battery.received_ah +=
                outcome.delivered_a * config.tau_s / 3600.0;
    }
    if (meas != nullptr) {
        meas->choices = choices;
        meas->powered.clear();
        meas->drew.clear();
        for (const AdapterId& id : outcome.powered_path) {
            meas->powered.insert(id);
            double measured = outcome.delivered_a;
            if (config.noise.kind == NoiseModel::Kind::Gaussian)
                measured += config.noise.sigma_a * rng.gaussian();
            if (measured > config.threshold_a) meas->drew.insert(id);
        }
    } else if (config.noise.kind == NoiseModel::Kind::Gaussian) {
        // keep the stream position independent of whether stats are recorded
        for (std::size_t i = 0; i < outcome.powered_path.size(); ++i)
            rng.gaussian();
    }
    return outcome;
}

struct RunResult {
    std::vector<SimTraceRecord> trace;  // filled when config.record_trace
    std::map<EvId, double> energy_ah;   // credited during this run only
    std::map<AdapterId, UtilizationStats> utilization;
    std::vector<double> root_socket0_running_avg;  // one entry per slot
    double total_delivered_ah = 0.0;
};

/// Executes config.slots steps and aggregates the trace, per-EV energy,
/// per-socket utilization and the running socket-0 utilization of the
/// root-most adapter (the convergence curve).
inline RunResult run_slots(ChainNetwork& net, const PolicyKind& policy,
                           const SimConfig& config, std::uint64_t seed) {
    config.validate();
    Rng rng(seed);
    RunResult result;
    std::map<EvId, double> before;
    for (const auto& [ev, rec] : net.evs) before[ev] = rec.battery.received_ah;

    AdapterId root_id;
    if (net.root_occupant.is_adapter()) root_id = net.root_occupant.adapter;

    StepMeasurement meas;
    for (std::uint64_t slot = 0; slot < config.slots; ++slot) {
        SlotOutcome outcome = step(net, policy, rng, config, slot, &meas);
        result.total_delivered_ah += outcome.delivered_a * config.tau_s / 3600.0;
        for (const AdapterId& id : meas.powered) {
            auto& st = result.utilization[id];
            int x = meas.choices[id];
            ++st.activations[static_cast<size_t>(x)];
            ++st.valid_samples;
            if (meas.drew.count(id))
                ++st.socket_utilization[static_cast<size_t>(x)];
        }
        if (!root_id.empty()) {
            const auto& st = result.utilization[root_id];
            result.root_socket0_running_avg.push_back(
                st.activations[0] == 0
                    ? 0.0
                    : static_cast<double>(st.socket_utilization[0]) /
                          static_cast<double>(st.activations[0]));
        }
        if (config.record_trace) {
            for (const auto& [id, x] : meas.choices) {
                SimTraceRecord rec;
                rec.slot = slot;
                rec.adapter_id = id;
                rec.chosen_socket = x;
                rec.powered = meas.powered.count(id) > 0;
                rec.drew = meas.drew.count(id) > 0;
                rec.sink = outcome.sink;
                rec.sink_id = outcome.sink_ev;
                rec.delivered_a = outcome.delivered_a;
                result.trace.push_back(rec);
            }
        }
    }
    for (auto& [id, st] : result.utilization)
        for (int i : {0, 1})
            if (st.activations[static_cast<size_t>(i)] > 0)
                st.fraction_utilization[static_cast<size_t>(i)] =
                    static_cast<double>(st.socket_utilization[static_cast<size_t>(i)]) /
                    static_cast<double>(st.activations[static_cast<size_t>(i)]);
    for (const auto& [ev, rec] : net.evs) {
        double delta = rec.battery.received_ah -
                       (before.count(ev) ? before[ev] : 0.0);
        result.energy_ah[ev] = delta;
    }
    return result;
}

}  // namespace dockchain
