// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dockchain/errors.hpp"

namespace dockchain {

using AdapterId = std::string;
using EvId = std::string;

enum class ChargePointKind { Public, Private, SemiPublic };

// Fixed supply equipment at the head of the network. Public points deliver
// up to 32 A three-phase, private/semi-public up to 16 A.
struct ChargePoint {
    double max_current_a = 32.0;
    int phases = 3;
    ChargePointKind kind = ChargePointKind::Public;

    void validate() const {
        if (max_current_a <= 0.0)
            throw ValidationError("charge point max_current must be positive");
        double cap = kind == ChargePointKind::Public ? 32.0 : 16.0;
        if (max_current_a > cap)
            throw ValidationError("charge point max_current exceeds rating");
        if (phases != 1 && phases != 3)
            throw ValidationError("charge point phases must be 1 or 3");
    }
};

struct SocketOccupant {
    enum class Kind { Empty, Ev, Adapter };

    Kind kind = Kind::Empty;
    EvId ev;             // valid when kind == Ev
    bool locked = false;
    bool authorized = false;
    AdapterId adapter;   // valid when kind == Adapter

    static SocketOccupant empty() { return {}; }
    static SocketOccupant of_ev(EvId id, bool locked, bool authorized) {
        SocketOccupant o;
        o.kind = Kind::Ev;
        o.ev = std::move(id);
        o.locked = locked;
        o.authorized = authorized;
        return o;
    }
    static SocketOccupant of_adapter(AdapterId id) {
        SocketOccupant o;
        o.kind = Kind::Adapter;
        o.adapter = std::move(id);
        return o;
    }

    bool is_empty() const { return kind == Kind::Empty; }
    bool is_ev() const { return kind == Kind::Ev; }
    bool is_adapter() const { return kind == Kind::Adapter; }
    // A socket that can accept a new adapter: truly empty.
    bool is_free() const { return kind == Kind::Empty; }

    bool operator==(const SocketOccupant&) const = default;
};

struct Upstream {
    enum class Kind { ChargePoint, Adapter, Detached };

    Kind kind = Kind::Detached;
    AdapterId parent;  // valid when kind == Adapter
    int socket = 0;    // valid when kind == Adapter

    static Upstream charge_point() { return {Kind::ChargePoint, {}, 0}; }
    static Upstream of(AdapterId parent, int socket) {
        return {Kind::Adapter, std::move(parent), socket};
    }
    static Upstream detached() { return {}; }

    bool operator==(const Upstream&) const = default;
};

// Two-socket pass-through device. Socket 1 conventionally hosts the owner's
// EV and socket 0 the downstream continuation; p is the probability of
// routing current to socket 0 on a given slot (0.5 during discovery).
struct Adapter {
    AdapterId id;
    Upstream upstream;
    std::array<SocketOccupant, 2> sockets;
    std::string pairing_token;
    double p = 0.5;
    bool orphaned = false;

    // Index of the socket hosting a downstream adapter, or -1. Throws on a
    // branching node when `unique` is requested.
    int downstream_socket() const {
        if (sockets[0].is_adapter()) return 0;
        if (sockets[1].is_adapter()) return 1;
        return -1;
    }
    bool has_downstream_adapter() const { return downstream_socket() >= 0; }
    bool is_branching() const {
        return sockets[0].is_adapter() && sockets[1].is_adapter();
    }
    int authorized_ev_count() const {
        int n = 0;
        for (const auto& s : sockets)
            if (s.is_ev() && s.authorized) ++n;
        return n;
    }
};

// Battery state used by the energy accounting. An unbounded demand models
// the paper's statistics runs where EVs never fill.
struct EvBattery {
    double demand_ah = std::numeric_limits<double>::infinity();
    double received_ah = 0.0;
    double draw_current_a = 32.0;

    bool full() const { return received_ah >= demand_ah; }
};

struct EvRecord {
    EvBattery battery;
    std::uint64_t arrival_seq = 0;
    bool present = true;     // false once unplugged; kept for energy summaries
    bool authorized = true;  // mirrors the socket flag for departed EVs
};

// Raised once per structural mutation of a powered chain segment.
struct Reconfigured {
    std::uint64_t seq = 0;
    bool whole_network = true;  // false when only the upstream portion remains
    std::string cause;
};

enum class UnlockResult { Unlocked, NoEvPresent };

// The network structure the §II protocol maintains: a tree of adapters
// rooted at the charge point.
//
// Invariants (checked by validate_structure):
//  1. Every non-orphaned adapter has exactly one upstream, consistent with
//     the referencing socket; the reachable adapters form a tree (no cycles).
//  2. Orphaned adapters form detached trees whose roots have Detached
//     upstream; they never appear on a powered path.
//  3. At most one socket of an adapter hosts an authorized EV.
//  4. An unauthorized EV is never locked; an authorized EV with an active
//     charging session is locked.
//  5. Under the default chain policy every terminal adapter has exactly one
//     socket that is Empty (or holds an unauthorized EV awaiting removal).
struct ChainNetwork {
    ChargePoint root;
    SocketOccupant root_occupant;
    std::map<AdapterId, Adapter> adapters;
    std::map<EvId, EvRecord> evs;
    std::vector<Reconfigured> reconfig_log;
    std::uint64_t next_arrival_seq = 0;

    Adapter& adapter(const AdapterId& id) {
        auto it = adapters.find(id);
        if (it == adapters.end()) throw NoSuchAdapter(id);
        return it->second;
    }
    const Adapter& adapter(const AdapterId& id) const {
        auto it = adapters.find(id);
        if (it == adapters.end()) throw NoSuchAdapter(id);
        return it->second;
    }

    SocketOccupant& occupant_at(const Upstream& up) {
        if (up.kind == Upstream::Kind::ChargePoint) return root_occupant;
        return adapter(up.parent).sockets[static_cast<size_t>(up.socket)];
    }

    void raise_reconfigured(bool whole, std::string cause) {
        reconfig_log.push_back(
            {static_cast<std::uint64_t>(reconfig_log.size()) + 1, whole,
             std::move(cause)});
    }
};

namespace detail {

inline std::string default_token(const AdapterId& id) { return id + "-token"; }

inline void register_ev(ChainNetwork& net, const EvId& ev, bool authorized,
                        const EvBattery& battery) {
    auto it = net.evs.find(ev);
    if (it != net.evs.end() && it->second.present)
        throw ValidationError("EV id already present: " + ev);
    EvRecord rec;
    if (it != net.evs.end()) rec = it->second;  // returning EV keeps its battery history
    rec.battery.demand_ah = battery.demand_ah;
    rec.battery.draw_current_a = battery.draw_current_a;
    rec.arrival_seq = net.next_arrival_seq++;
    rec.present = true;
    rec.authorized = authorized;
    net.evs[ev] = rec;
}

inline void depart_ev(ChainNetwork& net, const EvId& ev) {
    auto it = net.evs.find(ev);
    if (it != net.evs.end()) it->second.present = false;
}

}  // namespace detail

// Walks the default chain from the root, preferring socket 0 at a branching
// node, and returns the terminal adapter (no downstream adapter).
inline const Adapter* terminal_adapter(const ChainNetwork& net) {
    if (!net.root_occupant.is_adapter()) return nullptr;
    const Adapter* cur = &net.adapter(net.root_occupant.adapter);
    std::set<AdapterId> seen;
    while (true) {
        if (!seen.insert(cur->id).second)
            throw ValidationError("cycle detected while walking chain");
        int ds = cur->downstream_socket();
        if (ds < 0) return cur;
        cur = &net.adapter(cur->sockets[static_cast<size_t>(ds)].adapter);
    }
}

// Locates the chain's terminal continuation socket: the non-EV socket of the
// terminal adapter (socket 0 when both qualify). Returns (adapter id, index).
inline std::optional<std::pair<AdapterId, int>> terminal_socket(
    const ChainNetwork& net) {
    const Adapter* term = terminal_adapter(net);
    if (term == nullptr) return std::nullopt;
    for (int i : {0, 1})
        if (!term->sockets[static_cast<size_t>(i)].is_ev() ||
            !term->sockets[static_cast<size_t>(i)].authorized)
            if (!term->sockets[static_cast<size_t>(i)].is_adapter())
                return std::make_pair(term->id, i);
    return std::nullopt;
}

/// First arrival: plug an adapter into the free charge point and lock the
/// owner's EV into it.
inline void connect_first(ChainNetwork& net, const AdapterId& adapter_id,
                          const EvId& ev, const EvBattery& battery = {},
                          std::string token = {}) {
    if (!net.root_occupant.is_empty()) throw RootOccupied();
    if (net.adapters.count(adapter_id))
        throw ValidationError("adapter id already present: " + adapter_id);
    detail::register_ev(net, ev, /*authorized=*/true, battery);
    Adapter a;
    a.id = adapter_id;
    a.upstream = Upstream::charge_point();
    a.sockets[1] = SocketOccupant::of_ev(ev, /*locked=*/true, /*authorized=*/true);
    a.sockets[0] = SocketOccupant::empty();
    a.pairing_token = token.empty() ? detail::default_token(adapter_id) : std::move(token);
    net.adapters.emplace(adapter_id, std::move(a));
    net.root_occupant = SocketOccupant::of_adapter(adapter_id);
    net.raise_reconfigured(true, "connect_first " + adapter_id);
}

/// Subsequent arrival: append an adapter at the chain's terminal empty
/// socket. Fails with NoEmptySocket while an unauthorized EV blocks it.
inline void connect_subsequent(ChainNetwork& net, const AdapterId& adapter_id,
                               const EvId& ev, const EvBattery& battery = {},
                               std::string token = {}) {
    if (net.adapters.count(adapter_id))
        throw ValidationError("adapter id already present: " + adapter_id);
    if (net.root_occupant.is_empty()) {
        connect_first(net, adapter_id, ev, battery, std::move(token));
        return;
    }
    if (net.root_occupant.is_ev())
        throw NoEmptySocket("charge point socket holds an EV");
    auto ts = terminal_socket(net);
    if (!ts) throw NoEmptySocket("terminal adapter has no free socket");
    Adapter& term = net.adapter(ts->first);
    SocketOccupant& slot = term.sockets[static_cast<size_t>(ts->second)];
    if (slot.is_ev())
        throw NoEmptySocket("terminal socket holds an unauthorized EV; remove it first");
    detail::register_ev(net, ev, /*authorized=*/true, battery);
    Adapter a;
    a.id = adapter_id;
    a.upstream = Upstream::of(term.id, ts->second);
    a.sockets[1] = SocketOccupant::of_ev(ev, true, true);
    a.sockets[0] = SocketOccupant::empty();
    a.pairing_token = token.empty() ? detail::default_token(adapter_id) : std::move(token);
    slot = SocketOccupant::of_adapter(adapter_id);
    net.adapters.emplace(adapter_id, std::move(a));
    net.raise_reconfigured(true, "connect_subsequent " + adapter_id);
}

// User-facing notice produced when an EV plugs in without an adapter.
struct DirectEvNotice {
    EvId ev;
    std::string message;
};

/// §II-A.3: an EV plugged straight into the terminal socket is recorded
/// unauthorized and unlocked; it will never receive charge.
inline DirectEvNotice attempt_direct_ev(ChainNetwork& net, const EvId& ev,
                                        const EvBattery& battery = {}) {
    if (net.root_occupant.is_empty()) {
        detail::register_ev(net, ev, /*authorized=*/false, battery);
        net.root_occupant = SocketOccupant::of_ev(ev, false, false);
        return {ev, "EV " + ev + " will not receive any charge; please unplug it"};
    }
    if (net.root_occupant.is_ev())
        throw NoEmptySocket("charge point socket already holds an EV");
    auto ts = terminal_socket(net);
    if (!ts) throw NoEmptySocket("terminal adapter has no free socket");
    SocketOccupant& slot =
        net.adapter(ts->first).sockets[static_cast<size_t>(ts->second)];
    if (slot.is_ev())
        throw NoEmptySocket("terminal socket already holds an unauthorized EV");
    detail::register_ev(net, ev, /*authorized=*/false, battery);
    slot = SocketOccupant::of_ev(ev, false, false);
    // Not a structural change to the powered chain: no Reconfigured.
    return {ev, "EV " + ev + " will not receive any charge; please unplug it"};
}

/// Removes the unauthorized EV blocking the chain's terminal socket. Any
/// user may do this; the cable was never locked.
inline void remove_unauthorized(ChainNetwork& net) {
    if (net.root_occupant.is_ev() && !net.root_occupant.authorized) {
        detail::depart_ev(net, net.root_occupant.ev);
        net.root_occupant = SocketOccupant::empty();
        return;
    }
    for (auto& [id, a] : net.adapters) {
        for (auto& s : a.sockets) {
            if (s.is_ev() && !s.authorized) {
                detail::depart_ev(net, s.ev);
                s = SocketOccupant::empty();
                return;
            }
        }
    }
    throw NoSuchEv("no unauthorized EV present");
}

/// Token-gated lock release. Leaves the network unchanged on mismatch.
inline UnlockResult request_unlock(ChainNetwork& net, const AdapterId& id,
                                   const std::string& token) {
    Adapter& a = net.adapter(id);
    if (token != a.pairing_token) throw AuthFailure(id);
    for (auto& s : a.sockets) {
        if (s.is_ev() && s.authorized && s.locked) {
            s.locked = false;
            return UnlockResult::Unlocked;
        }
    }
    return UnlockResult::NoEvPresent;
}

namespace detail {

inline void mark_orphaned(ChainNetwork& net, const AdapterId& root_id) {
    Adapter& a = net.adapter(root_id);
    a.orphaned = true;
    for (const auto& s : a.sockets)
        if (s.is_adapter()) mark_orphaned(net, s.adapter);
}

inline void erase_adapter_and_evs(ChainNetwork& net, const AdapterId& id) {
    Adapter& a = net.adapter(id);
    for (const auto& s : a.sockets)
        if (s.is_ev()) depart_ev(net, s.ev);
    net.adapters.erase(id);
}

}  // namespace detail

/// §II-B.1: terminal removal. Unlocks the EV, detaches the adapter and frees
/// the upstream socket.
inline void remove_end(ChainNetwork& net, const AdapterId& id,
                       const std::string& token) {
    Adapter& a = net.adapter(id);
    if (token != a.pairing_token) throw AuthFailure(id);
    if (a.has_downstream_adapter()) throw NotTerminal(id);
    Upstream up = a.upstream;
    bool powered = !a.orphaned;
    detail::erase_adapter_and_evs(net, id);
    if (up.kind == Upstream::Kind::ChargePoint) {
        net.root_occupant = SocketOccupant::empty();
    } else if (up.kind == Upstream::Kind::Adapter) {
        net.adapter(up.parent).sockets[static_cast<size_t>(up.socket)] =
            SocketOccupant::empty();
    }
    if (powered) net.raise_reconfigured(true, "remove_end " + id);
}

/// §II-B.2: mid-chain removal. With reconnect the downstream sub-chain moves
/// to the vacated socket; without it the sub-chain is orphaned unpowered.
inline void remove_mid(ChainNetwork& net, const AdapterId& id,
                       const std::string& token, bool reconnect) {
    Adapter& a = net.adapter(id);
    if (token != a.pairing_token) throw AuthFailure(id);
    if (!a.has_downstream_adapter()) throw NotMid(id);
    if (a.is_branching())
        throw ValidationError("cannot remove a branching adapter: " + id);
    AdapterId child_id =
        a.sockets[static_cast<size_t>(a.downstream_socket())].adapter;
    Upstream up = a.upstream;
    bool powered = !a.orphaned;
    detail::erase_adapter_and_evs(net, id);
    Adapter& child = net.adapter(child_id);
    if (reconnect) {
        child.upstream = up;
        if (up.kind == Upstream::Kind::ChargePoint)
            net.root_occupant = SocketOccupant::of_adapter(child_id);
        else if (up.kind == Upstream::Kind::Adapter)
            net.adapter(up.parent).sockets[static_cast<size_t>(up.socket)] =
                SocketOccupant::of_adapter(child_id);
        if (powered) net.raise_reconfigured(true, "remove_mid+reconnect " + id);
    } else {
        child.upstream = Upstream::detached();
        if (powered) detail::mark_orphaned(net, child_id);
        if (up.kind == Upstream::Kind::ChargePoint)
            net.root_occupant = SocketOccupant::empty();
        else if (up.kind == Upstream::Kind::Adapter)
            net.adapter(up.parent).sockets[static_cast<size_t>(up.socket)] =
                SocketOccupant::empty();
        if (powered) net.raise_reconfigured(false, "remove_mid broken " + id);
    }
}

// ---------------------------------------------------------------------------
// Reconfiguration detection from an adapter's local power observations.

struct SupplySample {
    double supply_a = 0.0;  // input power seen by the adapter this slot
    int chosen_socket = 0;
    bool drew = false;
};

/// Assumption-2 test: true iff the trace shows a momentary power loss or the
/// per-socket draw fraction shifted by more than `shift` between the two most
/// recent windows of `window` slots.
inline bool detect_reconfiguration(std::span<const SupplySample> trace,
                                   std::size_t window = 32,
                                   double shift = 0.25) {
    for (const auto& s : trace)
        if (s.supply_a <= 0.0) return true;
    if (trace.size() < 2 * window) return false;
    auto fraction = [](std::span<const SupplySample> w, int socket) {
        std::size_t acts = 0, draws = 0;
        for (const auto& s : w) {
            if (s.chosen_socket != socket) continue;
            ++acts;
            if (s.drew) ++draws;
        }
        return acts == 0 ? std::optional<double>{}
                         : std::optional<double>{double(draws) / double(acts)};
    };
    auto prev = trace.subspan(trace.size() - 2 * window, window);
    auto cur = trace.subspan(trace.size() - window, window);
    for (int socket : {0, 1}) {
        auto f0 = fraction(prev, socket);
        auto f1 = fraction(cur, socket);
        if (f0 && f1 && std::abs(*f0 - *f1) > shift) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Structure checks and ground-truth queries.

namespace detail {

inline void walk_subtree(const ChainNetwork& net, const AdapterId& id,
                         bool expect_orphaned, std::set<AdapterId>& visited) {
    if (!visited.insert(id).second)
        throw ValidationError("adapter visited twice (cycle or shared child): " + id);
    const Adapter& a = net.adapter(id);
    if (a.orphaned != expect_orphaned)
        throw ValidationError("orphan flag inconsistent at " + id);
    int authorized = 0;
    for (int i : {0, 1}) {
        const SocketOccupant& s = a.sockets[static_cast<size_t>(i)];
        if (s.is_ev()) {
            if (!s.authorized && s.locked)
                throw ValidationError("unauthorized EV locked at " + id);
            if (s.authorized) ++authorized;
            if (s.authorized && !net.evs.count(s.ev))
                throw ValidationError("EV not registered: " + s.ev);
        } else if (s.is_adapter()) {
            const Adapter& child = net.adapter(s.adapter);
            if (child.upstream != Upstream::of(id, i))
                throw ValidationError("upstream back-pointer mismatch at " + s.adapter);
            walk_subtree(net, s.adapter, expect_orphaned, visited);
        }
    }
    if (authorized > 1)
        throw ValidationError("two authorized EVs on one adapter: " + id);
}

}  // namespace detail

/// Full structural validation: tree property, back-pointer consistency,
/// orphan bookkeeping, lock safety, no-two-EVs rule. Throws ValidationError.
inline void validate_structure(const ChainNetwork& net) {
    net.root.validate();
    std::set<AdapterId> visited;
    if (net.root_occupant.is_adapter()) {
        const Adapter& first = net.adapter(net.root_occupant.adapter);
        if (first.upstream != Upstream::charge_point())
            throw ValidationError("root adapter upstream must be the charge point");
        detail::walk_subtree(net, net.root_occupant.adapter, false, visited);
    } else if (net.root_occupant.is_ev()) {
        if (net.root_occupant.authorized || net.root_occupant.locked)
            throw ValidationError("a direct EV at the charge point is never authorized");
    }
    for (const auto& [id, a] : net.adapters) {
        if (visited.count(id)) continue;
        if (!a.orphaned)
            throw ValidationError("unreachable adapter not marked orphaned: " + id);
        if (a.upstream.kind == Upstream::Kind::Detached)
            detail::walk_subtree(net, id, true, visited);
    }
    for (const auto& [id, a] : net.adapters)
        if (!visited.count(id))
            throw ValidationError("orphaned adapter with dangling upstream: " + id);
}

/// Chain-policy check for protocol-produced (linear) networks: every terminal
/// adapter exposes exactly one free-or-unauthorized socket, non-terminal
/// adapters none.
inline void validate_chain_policy(const ChainNetwork& net) {
    for (const auto& [id, a] : net.adapters) {
        if (a.orphaned) continue;
        int open = 0;
        for (const auto& s : a.sockets)
            if (s.is_empty() || (s.is_ev() && !s.authorized)) ++open;
        if (a.has_downstream_adapter()) {
            if (a.is_branching()) continue;  // explicit tree, not default policy
            if (open != 0)
                throw ValidationError("non-terminal adapter with an open socket: " + id);
        } else if (open != 1) {
            throw ValidationError("terminal adapter without exactly one open socket: " + id);
        }
    }
}

/// Number of authorized EVs in the subtree hanging off `socket` of `id`
/// (the ground truth the discovery algorithm estimates).
inline int authorized_evs_below(const ChainNetwork& net, const AdapterId& id,
                                int socket) {
    const SocketOccupant& s = net.adapter(id).sockets[static_cast<size_t>(socket)];
    if (s.is_empty()) return 0;
    if (s.is_ev()) return s.authorized ? 1 : 0;
    return authorized_evs_below(net, s.adapter, 0) +
           authorized_evs_below(net, s.adapter, 1);
}

/// Structural equality ignoring batteries, statistics and the event log.
inline bool structural_equal(const ChainNetwork& a, const ChainNetwork& b) {
    if (!(a.root_occupant == b.root_occupant)) return false;
    if (a.adapters.size() != b.adapters.size()) return false;
    for (const auto& [id, ad] : a.adapters) {
        auto it = b.adapters.find(id);
        if (it == b.adapters.end()) return false;
        const Adapter& bd = it->second;
        if (ad.upstream != bd.upstream || ad.sockets != bd.sockets ||
            ad.pairing_token != bd.pairing_token || ad.orphaned != bd.orphaned)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Scriptable protocol events.

struct NetworkEvent {
    enum class Kind {
        ArrivalWithAdapter,
        DirectEvPlug,
        UnlockRequest,
        RemoveEnd,
        RemoveMid,
        RemoveUnauthorized,
        Reconfigured,
    };

    Kind kind = Kind::Reconfigured;
    AdapterId adapter;
    EvId ev;
    std::optional<std::string> token;  // omitted = the adapter's own token
    bool reconnect = true;             // RemoveMid only
    EvBattery battery;                 // arrival events only

    static NetworkEvent arrival(AdapterId a, EvId e, EvBattery b = {}) {
        NetworkEvent ev;
        ev.kind = Kind::ArrivalWithAdapter;
        ev.adapter = std::move(a);
        ev.ev = std::move(e);
        ev.battery = b;
        return ev;
    }
    static NetworkEvent direct_plug(EvId e, EvBattery b = {}) {
        NetworkEvent ev;
        ev.kind = Kind::DirectEvPlug;
        ev.ev = std::move(e);
        ev.battery = b;
        return ev;
    }
};

inline std::string event_token(const ChainNetwork& net, const NetworkEvent& e) {
    if (e.token) return *e.token;
    return net.adapter(e.adapter).pairing_token;
}

/// Dispatches one protocol event against the network.
inline void apply_event(ChainNetwork& net, const NetworkEvent& e) {
    switch (e.kind) {
        case NetworkEvent::Kind::ArrivalWithAdapter:
            if (net.root_occupant.is_empty())
                connect_first(net, e.adapter, e.ev, e.battery,
                              e.token.value_or(""));
            else
                connect_subsequent(net, e.adapter, e.ev, e.battery,
                                   e.token.value_or(""));
            break;
        case NetworkEvent::Kind::DirectEvPlug:
            attempt_direct_ev(net, e.ev, e.battery);
            break;
        case NetworkEvent::Kind::UnlockRequest:
            request_unlock(net, e.adapter, event_token(net, e));
            break;
        case NetworkEvent::Kind::RemoveEnd:
            remove_end(net, e.adapter, event_token(net, e));
            break;
        case NetworkEvent::Kind::RemoveMid:
            remove_mid(net, e.adapter, event_token(net, e), e.reconnect);
            break;
        case NetworkEvent::Kind::RemoveUnauthorized:
            remove_unauthorized(net);
            break;
        case NetworkEvent::Kind::Reconfigured:
            net.raise_reconfigured(true, "scripted reconfiguration");
            break;
    }
}

/// Chain length (adapter count) of the linear chain from the root.
inline int chain_length(const ChainNetwork& net) {
    int n = 0;
    if (!net.root_occupant.is_adapter()) return 0;
    const Adapter* cur = &net.adapter(net.root_occupant.adapter);
    while (true) {
        ++n;
        int ds = cur->downstream_socket();
        if (ds < 0) return n;
        cur = &net.adapter(cur->sockets[static_cast<size_t>(ds)].adapter);
    }
}

}  // namespace dockchain
