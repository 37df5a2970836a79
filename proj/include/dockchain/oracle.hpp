// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "dockchain/chain.hpp"

namespace dockchain {

// Exact rational, kept reduced with a positive denominator. Sized for path
// products over desk-scale networks; construction throws on overflow risk.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw ValidationError("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    static Ratio of(std::int64_t n, std::int64_t d = 1) { return Ratio(n, d); }

    Ratio operator*(const Ratio& o) const {
        Ratio a(num, o.den), b(o.num, den);  // cross-reduce before multiplying
        return Ratio(a.num * b.num, a.den * b.den);
    }
    Ratio operator+(const Ratio& o) const {
        std::int64_t g = std::gcd(den, o.den);
        std::int64_t scale = o.den / g;
        return Ratio(num * scale + o.num * (den / g), den * scale);
    }
    Ratio operator-(const Ratio& o) const { return *this + Ratio(-o.num, o.den); }
    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Ratio& o) const { return !(*this == o); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Recursive description of what hangs off a measured socket.
struct OccupantDesc {
    enum class Kind { Empty, Ev, Adapter };
    Kind kind = Kind::Empty;
    std::unique_ptr<OccupantDesc> socket0;
    std::unique_ptr<OccupantDesc> socket1;

    static OccupantDesc empty() { return {}; }
    static OccupantDesc ev() {
        OccupantDesc d;
        d.kind = Kind::Ev;
        return d;
    }
    static OccupantDesc adapter(OccupantDesc s0, OccupantDesc s1) {
        OccupantDesc d;
        d.kind = Kind::Adapter;
        d.socket0 = std::make_unique<OccupantDesc>(std::move(s0));
        d.socket1 = std::make_unique<OccupantDesc>(std::move(s1));
        return d;
    }
};

/// Linear chain of `n` adapters: each hosts an EV on socket 1 and continues
/// on socket 0; the last continues into an empty socket.
inline OccupantDesc linear_chain_desc(int n) {
    if (n == 0) return OccupantDesc::empty();
    return OccupantDesc::adapter(linear_chain_desc(n - 1), OccupantDesc::ev());
}

/// Description of the subtree below `socket` of `id` in a live network.
/// Unauthorized EVs and orphan boundaries draw nothing and map to Empty.
inline OccupantDesc describe_subtree(const ChainNetwork& net, const AdapterId& id,
                                     int socket) {
    const SocketOccupant& s = net.adapter(id).sockets[static_cast<size_t>(socket)];
    switch (s.kind) {
        case SocketOccupant::Kind::Empty:
            return OccupantDesc::empty();
        case SocketOccupant::Kind::Ev:
            return s.authorized ? OccupantDesc::ev() : OccupantDesc::empty();
        case SocketOccupant::Kind::Adapter:
            if (net.adapter(s.adapter).orphaned) return OccupantDesc::empty();
            return OccupantDesc::adapter(describe_subtree(net, s.adapter, 0),
                                         describe_subtree(net, s.adapter, 1));
    }
    return OccupantDesc::empty();
}

namespace detail {

inline void collect_adapters(const OccupantDesc& d,
                             std::vector<const OccupantDesc*>& out) {
    if (d.kind != OccupantDesc::Kind::Adapter) return;
    out.push_back(&d);
    collect_adapters(*d.socket0, out);
    collect_adapters(*d.socket1, out);
}

}  // namespace detail

/// Exhaustive Eq.-(1) oracle: enumerates every joint routing choice of the k
/// adapters below the measured socket (all at p = 0.5) and returns the exact
/// fraction whose path terminates at an EV.
inline Ratio brute_force_draw_frequency(const OccupantDesc& measured) {
    std::vector<const OccupantDesc*> adapters;
    detail::collect_adapters(measured, adapters);
    std::size_t k = adapters.size();
    if (k > 20) throw TooLarge("more than 20 adapters in subtree");
    std::map<const OccupantDesc*, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) index[adapters[i]] = i;

    std::int64_t total = std::int64_t{1} << k;
    std::int64_t hits = 0;
    for (std::int64_t mask = 0; mask < total; ++mask) {
        const OccupantDesc* cur = &measured;
        while (cur->kind == OccupantDesc::Kind::Adapter) {
            bool to_socket0 = (mask >> index.at(cur)) & 1;
            cur = to_socket0 ? cur->socket0.get() : cur->socket1.get();
        }
        if (cur->kind == OccupantDesc::Kind::Ev) ++hits;
    }
    return Ratio(hits, total);
}

// ---------------------------------------------------------------------------
// Analytic sink distribution: exact path probabilities through a network for
// given per-adapter rational routing probabilities. Independent of the slot
// engine's propagation code, so it can verify it.

struct SinkProbability {
    std::string key;  // "ev:<id>" | "empty:<where>" | "unauthorized:<id>" | "orphan:<id>"
    Ratio probability;
};

namespace detail {

inline void enumerate_paths(const ChainNetwork& net, const SocketOccupant& occ,
                            const std::map<AdapterId, Ratio>& probabilities,
                            const std::string& where, Ratio acc,
                            std::vector<SinkProbability>& out) {
    switch (occ.kind) {
        case SocketOccupant::Kind::Empty:
            out.push_back({"empty:" + where, acc});
            return;
        case SocketOccupant::Kind::Ev:
            out.push_back({(occ.authorized ? "ev:" : "unauthorized:") + occ.ev, acc});
            return;
        case SocketOccupant::Kind::Adapter: {
            const Adapter& a = net.adapter(occ.adapter);
            if (a.orphaned) {
                out.push_back({"orphan:" + a.id, acc});
                return;
            }
            auto it = probabilities.find(a.id);
            if (it == probabilities.end())
                throw ValidationError("no routing probability for adapter " + a.id);
            Ratio p = it->second;
            enumerate_paths(net, a.sockets[0], probabilities, a.id + ".0",
                            acc * p, out);
            enumerate_paths(net, a.sockets[1], probabilities, a.id + ".1",
                            acc * (p * Ratio(-1, 1) + Ratio(1, 1)), out);
            return;
        }
    }
}

}  // namespace detail

inline std::vector<SinkProbability> enumerate_sink_probabilities(
    const ChainNetwork& net, const std::map<AdapterId, Ratio>& probabilities) {
    std::vector<SinkProbability> out;
    detail::enumerate_paths(net, net.root_occupant, probabilities, "root",
                            Ratio(1, 1), out);
    return out;
}

/// Exact per-slot probability that `ev` is the sink.
inline Ratio ev_path_probability(const ChainNetwork& net,
                                 const std::map<AdapterId, Ratio>& probabilities,
                                 const EvId& ev) {
    for (const auto& s : enumerate_sink_probabilities(net, probabilities))
        if (s.key == "ev:" + ev) return s.probability;
    return Ratio(0, 1);
}

}  // namespace dockchain
