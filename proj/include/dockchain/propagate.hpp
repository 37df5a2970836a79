// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dockchain/chain.hpp"

namespace dockchain {

enum class SinkKind { Ev, EmptySocket, UnauthorizedEv, Orphaned };

inline const char* to_string(SinkKind k) {
    switch (k) {
        case SinkKind::Ev: return "ev";
        case SinkKind::EmptySocket: return "empty";
        case SinkKind::UnauthorizedEv: return "unauthorized_ev";
        case SinkKind::Orphaned: return "orphaned";
    }
    return "?";
}

// Where one slot's current ended up. The full supply follows a single
// root-to-sink path: multi-EV charging emerges as time-averaging across
// slots, never as intra-slot splitting.
struct SlotOutcome {
    std::uint64_t slot_index = 0;
    std::map<AdapterId, int> choices;
    std::vector<AdapterId> powered_path;
    SinkKind sink = SinkKind::EmptySocket;
    EvId sink_ev;  // valid for Ev / UnauthorizedEv sinks
    double delivered_a = 0.0;
};

struct NoiseModel {
    enum class Kind { None, Gaussian };
    Kind kind = Kind::None;
    double sigma_a = 0.0;  // additive std-dev on measured samples only

    static NoiseModel none() { return {}; }
    static NoiseModel gaussian(double sigma) {
        return {Kind::Gaussian, sigma};
    }
};

/// Follows each adapter's chosen socket from the charge point down to the
/// single sink this slot. Current is delivered only to a locked, authorized,
/// non-full EV; empty sockets, unauthorized EVs and orphan boundaries sink
/// nothing.
inline SlotOutcome propagate_current(const ChainNetwork& net,
                                     const std::map<AdapterId, int>& choices,
                                     double supply_a) {
    SlotOutcome out;
    out.choices = choices;
    const SocketOccupant* cur = &net.root_occupant;
    while (true) {
        switch (cur->kind) {
            case SocketOccupant::Kind::Empty:
                out.sink = SinkKind::EmptySocket;
                return out;
            case SocketOccupant::Kind::Ev: {
                if (!cur->authorized) {
                    out.sink = SinkKind::UnauthorizedEv;
                    out.sink_ev = cur->ev;
                    return out;
                }
                out.sink = SinkKind::Ev;
                out.sink_ev = cur->ev;
                if (cur->locked) {
                    auto it = net.evs.find(cur->ev);
                    if (it != net.evs.end() && !it->second.battery.full())
                        out.delivered_a =
                            std::min(supply_a, it->second.battery.draw_current_a);
                }
                return out;
            }
            case SocketOccupant::Kind::Adapter: {
                const Adapter& a = net.adapter(cur->adapter);
                if (a.orphaned) {
                    out.sink = SinkKind::Orphaned;
                    return out;
                }
                out.powered_path.push_back(a.id);
                auto it = choices.find(a.id);
                if (it == choices.end())
                    throw ValidationError("no routing choice for powered adapter " + a.id);
                cur = &a.sockets[static_cast<size_t>(it->second)];
                break;
            }
        }
    }
}

}  // namespace dockchain
