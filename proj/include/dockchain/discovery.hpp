// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "dockchain/chain.hpp"
#include "dockchain/propagate.hpp"
#include "dockchain/rng.hpp"

namespace dockchain {

struct DiscoveryConfig {
    std::uint64_t slot_count = 10000;  // N
    double slot_duration_s = 1.0;      // tau
    double threshold_a = 0.0;          // draw registered when current exceeds this
    int max_chain_length = 6;          // saturation cap on discovered estimates

    void validate() const {
        if (slot_count < 1) throw ValidationError("discovery slot_count must be >= 1");
        if (slot_duration_s <= 0.0) throw ValidationError("slot_duration must be positive");
        if (threshold_a < 0.0) throw ValidationError("threshold must be nonnegative");
        if (max_chain_length < 0) throw ValidationError("max_chain_length must be nonnegative");
    }
};

// Per-adapter counters accumulated over a discovery run. A sample is only
// recorded in slots where the adapter had upstream power; counting powerless
// slots as non-draws would bias fractions downward at depth.
struct UtilizationStats {
    std::array<std::uint64_t, 2> socket_utilization{0, 0};
    std::array<std::uint64_t, 2> activations{0, 0};
    std::array<double, 2> fraction_utilization{
        std::numeric_limits<double>::quiet_NaN(),
        std::numeric_limits<double>::quiet_NaN()};
    std::uint64_t valid_samples = 0;
};

enum class EstimateSource { Discovered, KnownEv, KnownEmpty };

struct LengthEstimate {
    double raw = 0.0;
    bool saturated = false;
    int rounded = 0;
    EstimateSource source = EstimateSource::KnownEmpty;
};

// Closed-form statistics of the per-activation utilization (Bernoulli with
// success probability 1 - 1/2^chain_length, averaged over sample_count draws).
struct UtilizationMoments {
    double p = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    int chain_length = 0;
    std::uint64_t sample_count = 0;
};

/// Probability that a slot's randomized routing reaches the terminal empty
/// socket of a chain of `chain_length` adapters all at p = 0.5.
inline double no_draw_probability(int chain_length) {
    if (chain_length < 0) throw ValidationError("chain_length must be nonnegative");
    return std::ldexp(1.0, -chain_length);
}

inline UtilizationMoments utilization_moments(int chain_length,
                                              std::uint64_t sample_count) {
    if (sample_count < 1) throw ValidationError("sample_count must be >= 1");
    UtilizationMoments m;
    m.chain_length = chain_length;
    m.sample_count = sample_count;
    m.p = 1.0 - no_draw_probability(chain_length);
    m.mean = m.p;
    m.variance = m.p * (1.0 - m.p) / static_cast<double>(sample_count);
    return m;
}

/// Inverts a measured utilization fraction into a chain length:
/// raw = -log2(1 - fraction). A fraction of exactly 1 saturates to `cap`.
/// Ties (x.5) round up.
inline LengthEstimate estimate_length(double fraction, int cap = 6) {
    if (fraction < 0.0 || fraction > 1.0)
        throw ValidationError("fraction must lie in [0,1]");
    LengthEstimate e;
    e.source = EstimateSource::Discovered;
    if (fraction >= 1.0) {
        e.raw = std::numeric_limits<double>::infinity();
        e.saturated = true;
        e.rounded = cap;
        return e;
    }
    e.raw = -std::log2(1.0 - fraction);
    e.rounded = static_cast<int>(std::floor(e.raw + 0.5));
    return e;
}

struct AdapterDiscovery {
    UtilizationStats stats;
    std::array<LengthEstimate, 2> estimates;
};

using DiscoveryResult = std::map<AdapterId, AdapterDiscovery>;

// One row of the per-slot discovery trace (CSV columns in this order).
struct DiscoveryTraceRecord {
    std::uint64_t slot = 0;
    AdapterId adapter_id;
    int chosen_socket = 0;
    bool powered = false;
    bool drew = false;
};

/// Algorithm-1 run over the network snapshot: N slots of randomized routing,
/// per-socket utilization counting conditioned on upstream power, then
/// length estimation. Estimates for sockets known to host an EV or nothing
/// come from the occupant kind, not the formula. Pure in (net, config, seed).
inline DiscoveryResult run_discovery(const ChainNetwork& net,
                                     const DiscoveryConfig& config,
                                     std::uint64_t seed,
                                     const NoiseModel& noise = NoiseModel::none(),
                                     std::vector<DiscoveryTraceRecord>* trace = nullptr) {
    config.validate();
    Rng rng(seed);
    DiscoveryResult result;
    for (const auto& [id, a] : net.adapters)
        if (!a.orphaned) result[id] = AdapterDiscovery{};

    std::map<AdapterId, int> choices;
    for (std::uint64_t slot = 0; slot < config.slot_count; ++slot) {
        choices.clear();
        for (const auto& [id, a] : net.adapters) {
            if (a.orphaned) continue;
            choices[id] = rng.flip(a.p) ? 0 : 1;
        }
        SlotOutcome outcome = propagate_current(net, choices, net.root.max_current_a);
        std::set<AdapterId> powered(outcome.powered_path.begin(),
                                    outcome.powered_path.end());
        std::map<AdapterId, bool> drew;
        for (const AdapterId& id : outcome.powered_path) {
            auto& st = result[id].stats;
            int x = choices[id];
            ++st.activations[static_cast<size_t>(x)];
            ++st.valid_samples;
            double measured = outcome.delivered_a;
            if (noise.kind == NoiseModel::Kind::Gaussian)
                measured += noise.sigma_a * rng.gaussian();
            if (measured > config.threshold_a) {
                ++st.socket_utilization[static_cast<size_t>(x)];
                drew[id] = true;
            }
        }
        if (trace != nullptr) {
            for (const auto& [id, x] : choices) {
                DiscoveryTraceRecord rec;
                rec.slot = slot;
                rec.adapter_id = id;
                rec.chosen_socket = x;
                rec.powered = powered.count(id) > 0;
                rec.drew = rec.powered && drew.count(id) > 0;
                trace->push_back(rec);
            }
        }
    }

    for (auto& [id, entry] : result) {
        const Adapter& a = net.adapter(id);
        auto& st = entry.stats;
        for (int i : {0, 1}) {
            if (st.activations[static_cast<size_t>(i)] > 0)
                st.fraction_utilization[static_cast<size_t>(i)] =
                    static_cast<double>(st.socket_utilization[static_cast<size_t>(i)]) /
                    static_cast<double>(st.activations[static_cast<size_t>(i)]);
            const SocketOccupant& occ = a.sockets[static_cast<size_t>(i)];
            LengthEstimate& est = entry.estimates[static_cast<size_t>(i)];
            if (occ.is_ev() && occ.authorized) {
                est = LengthEstimate{1.0, false, 1, EstimateSource::KnownEv};
            } else if (occ.is_adapter() && !net.adapter(occ.adapter).orphaned) {
                if (st.activations[static_cast<size_t>(i)] == 0)
                    throw NoSamples("adapter " + id + " socket " + std::to_string(i) +
                                    " was never activated; increase slot_count");
                est = estimate_length(st.fraction_utilization[static_cast<size_t>(i)],
                                      config.max_chain_length);
            } else {
                // Empty, unauthorized EV, or orphan boundary: nothing chargeable.
                est = LengthEstimate{0.0, false, 0, EstimateSource::KnownEmpty};
            }
        }
    }
    return result;
}

}  // namespace dockchain
