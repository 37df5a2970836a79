// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dockchain/chain.hpp"
#include "dockchain/discovery.hpp"
#include "dockchain/policy.hpp"
#include "dockchain/sim.hpp"

namespace dockchain {

using nlohmann::json;

struct TimedEvent {
    std::uint64_t t = 0;
    NetworkEvent event;
};

struct SweepSpec {
    std::vector<int> socket0_chain;
    std::vector<int> socket1_chain;
};

// A full experiment description: initial topology, event timeline, policy,
// discovery config, noise and seed. Parsed from / serialized to JSON with
// every default materialized, so serialize(parse(x)) is a fixed point.
struct Scenario {
    ChargePoint charge_point;
    json topology = json::object();  // validated at parse time
    std::vector<TimedEvent> events;
    PolicyKind policy = PolicyKind::equal_charge();
    DiscoveryConfig discovery;
    NoiseModel noise;
    std::uint64_t seed = 42;
    std::uint64_t slots = 1000;
    double tau_s = 1.0;
    double threshold_a = 0.0;
    std::optional<SweepSpec> sweep;
};

namespace detail {

inline double demand_from_json(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return std::numeric_limits<double>::infinity();
    return j.at(key).get<double>();
}

inline json demand_to_json(double demand) {
    if (!std::isfinite(demand)) return nullptr;
    return demand;
}

inline EvBattery battery_from_json(const json& j) {
    EvBattery b;
    b.demand_ah = demand_from_json(j, "demand_ah");
    if (j.contains("draw_a")) b.draw_current_a = j.at("draw_a").get<double>();
    return b;
}

// Builds the occupant subtree described by `node` into the network.
inline SocketOccupant build_node(ChainNetwork& net, const json& node,
                                 const Upstream& up) {
    if (node.is_null()) return SocketOccupant::empty();
    if (!node.is_object()) throw ParseError("topology node must be null or an object");
    if (node.contains("ev")) {
        EvId ev = node.at("ev").get<std::string>();
        bool authorized = node.value("authorized", true);
        register_ev(net, ev, authorized, battery_from_json(node));
        return SocketOccupant::of_ev(ev, authorized, authorized);
    }
    if (node.contains("adapter")) {
        AdapterId id = node.at("adapter").get<std::string>();
        if (net.adapters.count(id))
            throw ValidationError("duplicate adapter id in topology: " + id);
        Adapter a;
        a.id = id;
        a.upstream = up;
        a.pairing_token = node.value("token", default_token(id));
        net.adapters.emplace(id, std::move(a));
        net.adapter(id).sockets[0] =
            build_node(net, node.contains("socket0") ? node.at("socket0") : json(),
                       Upstream::of(id, 0));
        net.adapter(id).sockets[1] =
            build_node(net, node.contains("socket1") ? node.at("socket1") : json(),
                       Upstream::of(id, 1));
        return SocketOccupant::of_adapter(id);
    }
    throw ParseError("topology node needs an \"ev\" or \"adapter\" key");
}

// Linear chain of n adapters named <prefix>A1..An hosting <prefix>E1..En.
inline json chain_json(int n, const std::string& prefix) {
    json node;  // innermost continuation socket stays empty
    for (int i = n; i >= 1; --i) {
        json adapter = {{"adapter", prefix + "A" + std::to_string(i)},
                        {"socket1", {{"ev", prefix + "E" + std::to_string(i)}}}};
        adapter["socket0"] = node;
        node = adapter;
    }
    return node;
}

}  // namespace detail

/// Materializes the scenario's initial topology. Supported forms:
///   {}                                       empty charge point
///   {"chain": N}                             linear chain of N adapters
///   {"socket0_chain": n, "socket1_chain": m} root adapter R with two sub-chains
///   {"root": <node>}                         explicit occupant tree
inline ChainNetwork build_network(const Scenario& scenario) {
    ChainNetwork net;
    net.root = scenario.charge_point;
    const json& topo = scenario.topology;
    if (!topo.is_object()) throw ParseError("topology must be an object");
    if (topo.contains("chain")) {
        int n = topo.at("chain").get<int>();
        if (n < 0) throw ValidationError("chain length must be nonnegative");
        net.root_occupant = detail::build_node(net, detail::chain_json(n, ""),
                                               Upstream::charge_point());
    } else if (topo.contains("socket0_chain") || topo.contains("socket1_chain")) {
        int l0 = topo.value("socket0_chain", 0);
        int l1 = topo.value("socket1_chain", 0);
        if (l0 < 0 || l1 < 0) throw ValidationError("chain length must be nonnegative");
        json root = {{"adapter", "R"},
                     {"socket0", detail::chain_json(l0, "S0")},
                     {"socket1", detail::chain_json(l1, "S1")}};
        net.root_occupant =
            detail::build_node(net, root, Upstream::charge_point());
    } else if (topo.contains("root")) {
        net.root_occupant = detail::build_node(net, topo.at("root"),
                                               Upstream::charge_point());
    } else if (!topo.empty()) {
        throw ParseError("topology needs \"chain\", \"socket0_chain\"/\"socket1_chain\" or \"root\"");
    }
    validate_structure(net);
    return net;
}

// ---------------------------------------------------------------------------
// JSON (de)serialization.

namespace detail {

inline NetworkEvent::Kind event_kind_from_string(const std::string& s) {
    if (s == "arrival_with_adapter") return NetworkEvent::Kind::ArrivalWithAdapter;
    if (s == "direct_ev_plug") return NetworkEvent::Kind::DirectEvPlug;
    if (s == "unlock_request") return NetworkEvent::Kind::UnlockRequest;
    if (s == "remove_end") return NetworkEvent::Kind::RemoveEnd;
    if (s == "remove_mid") return NetworkEvent::Kind::RemoveMid;
    if (s == "remove_unauthorized") return NetworkEvent::Kind::RemoveUnauthorized;
    if (s == "reconfigured") return NetworkEvent::Kind::Reconfigured;
    throw ParseError("unknown event kind: " + s);
}

inline std::string event_kind_to_string(NetworkEvent::Kind k) {
    switch (k) {
        case NetworkEvent::Kind::ArrivalWithAdapter: return "arrival_with_adapter";
        case NetworkEvent::Kind::DirectEvPlug: return "direct_ev_plug";
        case NetworkEvent::Kind::UnlockRequest: return "unlock_request";
        case NetworkEvent::Kind::RemoveEnd: return "remove_end";
        case NetworkEvent::Kind::RemoveMid: return "remove_mid";
        case NetworkEvent::Kind::RemoveUnauthorized: return "remove_unauthorized";
        case NetworkEvent::Kind::Reconfigured: return "reconfigured";
    }
    return "?";
}

}  // namespace detail

inline Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("scenario must be a JSON object");
    Scenario s;
    if (j.contains("charge_point")) {
        const json& cp = j.at("charge_point");
        s.charge_point.max_current_a = cp.value("max_current_a", 32.0);
        s.charge_point.phases = cp.value("phases", 3);
        std::string kind = cp.value("kind", "public");
        if (kind == "public") s.charge_point.kind = ChargePointKind::Public;
        else if (kind == "private") s.charge_point.kind = ChargePointKind::Private;
        else if (kind == "semi_public") s.charge_point.kind = ChargePointKind::SemiPublic;
        else throw ParseError("unknown charge point kind: " + kind);
    }
    if (j.contains("topology")) s.topology = j.at("topology");

    if (j.contains("events")) {
        std::uint64_t prev_t = 0;
        for (const json& ej : j.at("events")) {
            TimedEvent te;
            if (!ej.contains("t")) throw ParseError("event missing timestamp \"t\"");
            long long t = ej.at("t").get<long long>();
            if (t < 0) throw ValidationError("event timestamps must be nonnegative");
            te.t = static_cast<std::uint64_t>(t);
            if (!s.events.empty() && te.t < prev_t)
                throw ValidationError("event timestamps must be nondecreasing");
            prev_t = te.t;
            NetworkEvent& e = te.event;
            e.kind = detail::event_kind_from_string(ej.at("kind").get<std::string>());
            if (ej.contains("adapter")) e.adapter = ej.at("adapter").get<std::string>();
            if (ej.contains("ev")) e.ev = ej.at("ev").get<std::string>();
            if (ej.contains("token")) e.token = ej.at("token").get<std::string>();
            if (ej.contains("reconnect")) e.reconnect = ej.at("reconnect").get<bool>();
            e.battery = detail::battery_from_json(ej);
            s.events.push_back(std::move(te));
        }
    }

    if (j.contains("policy")) {
        const json& pj = j.at("policy");
        std::string kind = pj.value("kind", "equal_charge");
        if (kind == "fcfs") {
            s.policy = PolicyKind::fcfs();
        } else if (kind == "equal_charge") {
            s.policy = PolicyKind::equal_charge(pj.value("alpha", 0.9));
        } else if (kind == "priority") {
            std::map<EvId, double> weights;
            if (pj.contains("weights"))
                for (const auto& [ev, w] : pj.at("weights").items())
                    weights[ev] = w.get<double>();
            s.policy = PolicyKind::priority(std::move(weights));
        } else {
            throw ParseError("unknown policy kind: " + kind);
        }
    }

    if (j.contains("discovery")) {
        const json& dj = j.at("discovery");
        s.discovery.slot_count = dj.value("slots", std::uint64_t{10000});
        s.discovery.slot_duration_s = dj.value("tau_s", 1.0);
        s.discovery.threshold_a = dj.value("threshold_a", 0.0);
        s.discovery.max_chain_length = dj.value("cap", 6);
    }
    if (j.contains("noise")) {
        const json& nj = j.at("noise");
        std::string kind = nj.value("kind", "none");
        if (kind == "none") s.noise = NoiseModel::none();
        else if (kind == "gaussian") s.noise = NoiseModel::gaussian(nj.value("sigma_a", 0.0));
        else throw ParseError("unknown noise kind: " + kind);
        if (s.noise.sigma_a < 0.0) throw ValidationError("noise sigma must be nonnegative");
    }
    s.seed = j.value("seed", std::uint64_t{42});
    s.slots = j.value("slots", std::uint64_t{1000});
    s.tau_s = j.value("tau_s", 1.0);
    s.threshold_a = j.value("threshold_a", 0.0);
    if (s.tau_s <= 0.0) throw ValidationError("tau must be positive");

    if (j.contains("sweep")) {
        SweepSpec sw;
        for (const json& v : j.at("sweep").at("socket0_chain"))
            sw.socket0_chain.push_back(v.get<int>());
        for (const json& v : j.at("sweep").at("socket1_chain"))
            sw.socket1_chain.push_back(v.get<int>());
        s.sweep = std::move(sw);
    }

    // Static id-uniqueness validation and a dry topology build.
    build_network(s);
    std::set<std::string> adapter_ids;
    std::set<std::string> ev_ids;
    std::function<void(const json&)> collect = [&](const json& node) {
        if (!node.is_object()) return;
        if (node.contains("adapter")) {
            if (!adapter_ids.insert(node.at("adapter").get<std::string>()).second)
                throw ValidationError("duplicate adapter id: " +
                                      node.at("adapter").get<std::string>());
            if (node.contains("socket0")) collect(node.at("socket0"));
            if (node.contains("socket1")) collect(node.at("socket1"));
        }
        if (node.contains("ev"))
            if (!ev_ids.insert(node.at("ev").get<std::string>()).second)
                throw ValidationError("duplicate EV id: " +
                                      node.at("ev").get<std::string>());
    };
    {
        ChainNetwork probe = build_network(s);
        for (const auto& [id, a] : probe.adapters) adapter_ids.insert(id);
        for (const auto& [id, rec] : probe.evs) ev_ids.insert(id);
    }
    for (const TimedEvent& te : s.events) {
        if (te.event.kind == NetworkEvent::Kind::ArrivalWithAdapter) {
            if (!adapter_ids.insert(te.event.adapter).second)
                throw ValidationError("duplicate adapter id: " + te.event.adapter);
            if (!ev_ids.insert(te.event.ev).second)
                throw ValidationError("duplicate EV id: " + te.event.ev);
        } else if (te.event.kind == NetworkEvent::Kind::DirectEvPlug) {
            if (!ev_ids.insert(te.event.ev).second)
                throw ValidationError("duplicate EV id: " + te.event.ev);
        }
    }
    return s;
}

inline json scenario_to_json(const Scenario& s) {
    json j;
    j["charge_point"] = {
        {"max_current_a", s.charge_point.max_current_a},
        {"phases", s.charge_point.phases},
        {"kind", s.charge_point.kind == ChargePointKind::Public       ? "public"
                 : s.charge_point.kind == ChargePointKind::Private ? "private"
                                                                   : "semi_public"}};
    j["topology"] = s.topology;
    json events = json::array();
    for (const TimedEvent& te : s.events) {
        json ej;
        ej["t"] = te.t;
        ej["kind"] = detail::event_kind_to_string(te.event.kind);
        if (!te.event.adapter.empty()) ej["adapter"] = te.event.adapter;
        if (!te.event.ev.empty()) ej["ev"] = te.event.ev;
        if (te.event.token) ej["token"] = *te.event.token;
        if (te.event.kind == NetworkEvent::Kind::RemoveMid)
            ej["reconnect"] = te.event.reconnect;
        if (te.event.kind == NetworkEvent::Kind::ArrivalWithAdapter ||
            te.event.kind == NetworkEvent::Kind::DirectEvPlug) {
            ej["demand_ah"] = detail::demand_to_json(te.event.battery.demand_ah);
            ej["draw_a"] = te.event.battery.draw_current_a;
        }
        events.push_back(std::move(ej));
    }
    j["events"] = std::move(events);
    json pj;
    switch (s.policy.kind) {
        case PolicyKind::Kind::FcfsWaterFilling:
            pj = {{"kind", "fcfs"}};
            break;
        case PolicyKind::Kind::EqualCharge:
            pj = {{"kind", "equal_charge"}, {"alpha", s.policy.alpha}};
            break;
        case PolicyKind::Kind::PriorityWeighted: {
            json w = json::object();
            for (const auto& [ev, weight] : s.policy.weights) w[ev] = weight;
            pj = {{"kind", "priority"}, {"weights", std::move(w)}};
            break;
        }
    }
    j["policy"] = std::move(pj);
    j["discovery"] = {{"slots", s.discovery.slot_count},
                      {"tau_s", s.discovery.slot_duration_s},
                      {"threshold_a", s.discovery.threshold_a},
                      {"cap", s.discovery.max_chain_length}};
    j["noise"] = s.noise.kind == NoiseModel::Kind::None
                     ? json{{"kind", "none"}}
                     : json{{"kind", "gaussian"}, {"sigma_a", s.noise.sigma_a}};
    j["seed"] = s.seed;
    j["slots"] = s.slots;
    j["tau_s"] = s.tau_s;
    j["threshold_a"] = s.threshold_a;
    if (s.sweep) {
        j["sweep"] = {{"socket0_chain", s.sweep->socket0_chain},
                      {"socket1_chain", s.sweep->socket1_chain}};
    }
    return j;
}

inline Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        return scenario_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

inline std::string serialize_scenario(const Scenario& s) {
    return scenario_to_json(s).dump(2) + "\n";
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

/// Expands the sweep section into concrete scenarios (cartesian product of
/// the two chain-length lists), in list order.
inline std::vector<Scenario> expand_sweep(const Scenario& s) {
    if (!s.sweep) return {s};
    std::vector<Scenario> out;
    for (int l1 : s.sweep->socket1_chain) {
        for (int l0 : s.sweep->socket0_chain) {
            Scenario v = s;
            v.sweep.reset();
            v.topology = {{"socket0_chain", l0}, {"socket1_chain", l1}};
            out.push_back(std::move(v));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Timeline runner.

struct ScenarioOutcome {
    std::vector<SimTraceRecord> trace;
    ChainNetwork final_network;
    std::uint64_t discovery_phases = 0;
    DiscoveryResult last_discovery;
    double total_delivered_ah = 0.0;
};

namespace detail {

// Discovery then policy application; called out-of-band at each
// reconfiguration so no main-clock slots are consumed.
inline DiscoveryResult rediscover_and_apply(ChainNetwork& net,
                                            const Scenario& scenario,
                                            std::uint64_t phase_index) {
    if (!net.root_occupant.is_adapter()) return {};
    reset_discovery_p(net);
    std::uint64_t seed = Rng::substream_seed(scenario.seed, 1000 + phase_index);
    DiscoveryResult disc =
        run_discovery(net, scenario.discovery, seed, scenario.noise);
    switch (scenario.policy.kind) {
        case PolicyKind::Kind::FcfsWaterFilling:
            break;  // routing is retargeted every slot
        case PolicyKind::Kind::EqualCharge: {
            SocketLengths lengths = lengths_from_discovery(disc);
            for (auto& [id, a] : net.adapters) {
                if (a.orphaned) continue;
                auto it = lengths.find(id);
                if (it == lengths.end()) continue;
                IirState st{a.p, scenario.policy.alpha};
                a.p = iterate_to_fixed_point(st, it->second[0], it->second[1]).back();
            }
            break;
        }
        case PolicyKind::Kind::PriorityWeighted:
            apply_probabilities(net,
                                priority_probabilities(net, scenario.policy.weights));
            break;
    }
    return disc;
}

}  // namespace detail

/// Runs the full event timeline: protocol events in timestamp order,
/// re-discovery plus policy application after every Reconfigured, slotted
/// charging in between. Protocol errors carry the offending timestamp.
inline ScenarioOutcome run_scenario(const Scenario& scenario) {
    ScenarioOutcome out;
    ChainNetwork net = build_network(scenario);
    SimConfig cfg;
    cfg.slots = scenario.slots;
    cfg.tau_s = scenario.tau_s;
    cfg.threshold_a = scenario.threshold_a;
    cfg.noise = scenario.noise;

    Rng rng(scenario.seed);
    std::size_t event_cursor = 0;
    std::size_t reconfig_cursor = net.reconfig_log.size();

    // The initial topology counts as a reconfiguration: discover, then apply
    // the policy before the first slot.
    if (net.root_occupant.is_adapter()) {
        out.last_discovery =
            detail::rediscover_and_apply(net, scenario, out.discovery_phases++);
    }

    StepMeasurement meas;
    std::map<AdapterId, UtilizationStats> util;
    for (std::uint64_t t = 0; t < scenario.slots; ++t) {
        while (event_cursor < scenario.events.size() &&
               scenario.events[event_cursor].t <= t) {
            const TimedEvent& te = scenario.events[event_cursor];
            try {
                apply_event(net, te.event);
            } catch (const Error& e) {
                throw Error("event at t=" + std::to_string(te.t) + ": " + e.what());
            }
            ++event_cursor;
        }
        if (net.reconfig_log.size() > reconfig_cursor) {
            reconfig_cursor = net.reconfig_log.size();
            out.last_discovery =
                detail::rediscover_and_apply(net, scenario, out.discovery_phases++);
        }
        SlotOutcome outcome = step(net, scenario.policy, rng, cfg, t, &meas);
        out.total_delivered_ah += outcome.delivered_a * cfg.tau_s / 3600.0;
        for (const auto& [id, x] : meas.choices) {
            SimTraceRecord rec;
            rec.slot = t;
            rec.adapter_id = id;
            rec.chosen_socket = x;
            rec.powered = meas.powered.count(id) > 0;
            rec.drew = meas.drew.count(id) > 0;
            rec.sink = outcome.sink;
            rec.sink_id = outcome.sink_ev;
            rec.delivered_a = outcome.delivered_a;
            out.trace.push_back(rec);
        }
    }
    out.final_network = std::move(net);
    return out;
}

// ---------------------------------------------------------------------------
// Output emission.

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace detail

/// Simulation trace CSV; column order is fixed:
/// slot,adapter_id,chosen_socket,powered,draw_flag,sink_kind,sink_id,delivered_A
inline void write_sim_trace_csv(std::ostream& os,
                                const std::vector<SimTraceRecord>& trace) {
    os << "slot,adapter_id,chosen_socket,powered,draw_flag,sink_kind,sink_id,delivered_A\n";
    for (const auto& r : trace) {
        os << r.slot << ',' << r.adapter_id << ',' << r.chosen_socket << ','
           << (r.powered ? 1 : 0) << ',' << (r.drew ? 1 : 0) << ','
           << to_string(r.sink) << ',' << r.sink_id << ','
           << detail::fmt_double(r.delivered_a) << '\n';
    }
}

/// Discovery trace CSV: slot,adapter_id,chosen_socket,powered,draw_flag
inline void write_discovery_trace_csv(
    std::ostream& os, const std::vector<DiscoveryTraceRecord>& trace) {
    os << "slot,adapter_id,chosen_socket,powered,draw_flag\n";
    for (const auto& r : trace)
        os << r.slot << ',' << r.adapter_id << ',' << r.chosen_socket << ','
           << (r.powered ? 1 : 0) << ',' << (r.drew ? 1 : 0) << '\n';
}

inline json estimates_to_json(const DiscoveryResult& disc) {
    json j = json::object();
    for (const auto& [id, entry] : disc) {
        json sockets = json::array();
        for (int i : {0, 1}) {
            const LengthEstimate& e = entry.estimates[static_cast<size_t>(i)];
            const auto& st = entry.stats;
            json sj;
            sj["source"] = e.source == EstimateSource::Discovered ? "discovered"
                           : e.source == EstimateSource::KnownEv  ? "known_ev"
                                                                  : "known_empty";
            sj["raw"] = std::isfinite(e.raw) ? json(e.raw) : json();
            sj["saturated"] = e.saturated;
            sj["rounded"] = e.rounded;
            sj["activations"] = st.activations[static_cast<size_t>(i)];
            sj["draws"] = st.socket_utilization[static_cast<size_t>(i)];
            if (st.activations[static_cast<size_t>(i)] > 0)
                sj["fraction"] = st.fraction_utilization[static_cast<size_t>(i)];
            else
                sj["fraction"] = nullptr;
            sockets.push_back(std::move(sj));
        }
        j[id] = {{"sockets", std::move(sockets)},
                 {"valid_samples", entry.stats.valid_samples}};
    }
    return j;
}

inline json summary_to_json(const ScenarioOutcome& out) {
    json evs = json::object();
    for (const auto& [id, rec] : out.final_network.evs) {
        evs[id] = {{"received_ah", rec.battery.received_ah},
                   {"demand_ah", detail::demand_to_json(rec.battery.demand_ah)},
                   {"draw_a", rec.battery.draw_current_a},
                   {"authorized", rec.authorized},
                   {"present", rec.present},
                   {"arrival_seq", rec.arrival_seq}};
    }
    return {{"evs", std::move(evs)},
            {"total_delivered_ah", out.total_delivered_ah},
            {"discovery_phases", out.discovery_phases}};
}

namespace detail {

inline json occupant_to_json(const ChainNetwork& net, const SocketOccupant& occ) {
    switch (occ.kind) {
        case SocketOccupant::Kind::Empty:
            return nullptr;
        case SocketOccupant::Kind::Ev:
            return {{"ev", occ.ev},
                    {"locked", occ.locked},
                    {"authorized", occ.authorized}};
        case SocketOccupant::Kind::Adapter: {
            const Adapter& a = net.adapter(occ.adapter);
            return {{"adapter", a.id},
                    {"p", a.p},
                    {"orphaned", a.orphaned},
                    {"socket0", occupant_to_json(net, a.sockets[0])},
                    {"socket1", occupant_to_json(net, a.sockets[1])}};
        }
    }
    return nullptr;
}

}  // namespace detail

inline json network_to_json(const ChainNetwork& net) {
    json orphans = json::array();
    for (const auto& [id, a] : net.adapters)
        if (a.orphaned && a.upstream.kind == Upstream::Kind::Detached)
            orphans.push_back(
                detail::occupant_to_json(net, SocketOccupant::of_adapter(id)));
    return {{"charge_point",
             {{"max_current_a", net.root.max_current_a},
              {"phases", net.root.phases}}},
            {"root", detail::occupant_to_json(net, net.root_occupant)},
            {"orphans", std::move(orphans)},
            {"reconfigurations", net.reconfig_log.size()}};
}

}  // namespace dockchain
