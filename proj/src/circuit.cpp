#include "qotp/circuit.hpp"

#include "qotp/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace qotp {

using nlohmann::json;

std::string node_type_name(NodeType t) {
    switch (t) {
        case NodeType::Input: return "input";
        case NodeType::Const: return "const";
        case NodeType::OtpSlot: return "otp_slot";
        case NodeType::Not: return "not";
        case NodeType::Xor: return "xor";
        case NodeType::Fanout: return "fanout";
        case NodeType::Output: return "output";
    }
    return "?";
}

NodeType node_type_from_name(const std::string& s) {
    if (s == "input") return NodeType::Input;
    if (s == "const") return NodeType::Const;
    if (s == "otp_slot") return NodeType::OtpSlot;
    if (s == "not") return NodeType::Not;
    if (s == "xor") return NodeType::Xor;
    if (s == "fanout") return NodeType::Fanout;
    if (s == "output") return NodeType::Output;
    throw std::invalid_argument("unknown node type: " + s);
}

namespace {

int expected_in_degree(const Node& n) {
    switch (n.type) {
        case NodeType::Input:
        case NodeType::Const: return 0;
        case NodeType::OtpSlot: return n.table ? n.table->k() : 0;
        case NodeType::Not:
        case NodeType::Fanout:
        case NodeType::Output: return 1;
        case NodeType::Xor: return 2;
    }
    return 0;
}

int out_port_count(NodeType t) {
    switch (t) {
        case NodeType::Fanout: return 2;
        case NodeType::Output: return 0;
        default: return 1;
    }
}

}  // namespace

Circuit::Circuit(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    validate_and_sort();
}

void Circuit::validate_and_sort() {
    std::set<int> ids;
    for (const auto& n : nodes_)
        if (!ids.insert(n.id).second)
            throw std::invalid_argument("circuit: duplicate node id " +
                                        std::to_string(n.id));

    std::map<int, int> in_count;
    std::map<std::pair<int, int>, int> out_count;
    std::map<std::pair<int, int>, int> in_port_seen;
    for (const auto& e : edges_) {
        if (!ids.count(e.from) || !ids.count(e.to))
            throw std::invalid_argument("circuit: edge references unknown node");
        const Node& src = node(e.from);
        if (e.from_port < 0 || e.from_port >= out_port_count(src.type))
            throw std::invalid_argument("circuit: bad source port");
        if (++out_count[{e.from, e.from_port}] > 1)
            throw std::invalid_argument("circuit: source port wired twice");
        if (++in_port_seen[{e.to, e.to_port}] > 1)
            throw std::invalid_argument("circuit: input port wired twice");
        ++in_count[e.to];
    }
    for (const auto& n : nodes_) {
        const int want = expected_in_degree(n);
        const int got = in_count.count(n.id) ? in_count[n.id] : 0;
        if (n.type == NodeType::OtpSlot && !n.table) {
            // redacted slot: arity comes from the wiring
            continue;
        }
        if (got != want)
            throw std::invalid_argument("circuit: node " + std::to_string(n.id) + " (" +
                                        node_type_name(n.type) + ") expects " +
                                        std::to_string(want) + " inputs, has " +
                                        std::to_string(got));
    }

    // Kahn with a min-id heap so the order is canonical
    std::map<int, int> pending = in_count;
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (const auto& n : nodes_)
        if (!pending.count(n.id)) ready.push(n.id);
    topo_.clear();
    while (!ready.empty()) {
        const int id = ready.top();
        ready.pop();
        topo_.push_back(id);
        for (const auto& e : edges_) {
            if (e.from != id) continue;
            if (--pending[e.to] == 0) ready.push(e.to);
        }
    }
    if (topo_.size() != nodes_.size()) throw std::invalid_argument("circuit: cycle detected");
}

const Node& Circuit::node(int id) const {
    for (const auto& n : nodes_)
        if (n.id == id) return n;
    throw std::invalid_argument("circuit: no node with id " + std::to_string(id));
}

std::vector<int> Circuit::otp_slot_ids() const {
    std::vector<int> out;
    for (int id : topo_)
        if (node(id).type == NodeType::OtpSlot) out.push_back(id);
    return out;
}

std::vector<int> Circuit::output_ids() const {
    std::vector<int> out;
    for (int id : topo_)
        if (node(id).type == NodeType::Output) out.push_back(id);
    return out;
}

std::vector<std::string> Circuit::input_labels() const {
    std::vector<std::string> out;
    for (int id : topo_)
        if (node(id).type == NodeType::Input) out.push_back(node(id).label);
    return out;
}

std::vector<Edge> Circuit::in_edges(int id) const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (e.to == id) out.push_back(e);
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return a.to_port < b.to_port;
    });
    return out;
}

std::vector<Edge> Circuit::out_edges(int id, int port) const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (e.from == id && e.from_port == port) out.push_back(e);
    return out;
}

std::map<std::string, int> Circuit::ideal_eval(const std::map<std::string, int>& inputs) const {
    std::map<int, int> value;  // node id -> output value (Fanout: same on both ports)
    std::map<std::string, int> out;
    for (int id : topo_) {
        const Node& n = node(id);
        auto ins = in_edges(id);
        std::vector<int> v;
        v.reserve(ins.size());
        for (const auto& e : ins) v.push_back(value.at(e.from));
        switch (n.type) {
            case NodeType::Input: {
                auto it = inputs.find(n.label);
                if (it == inputs.end())
                    throw std::invalid_argument("ideal_eval: missing input " + n.label);
                value[id] = it->second ? 1 : 0;
                break;
            }
            case NodeType::Const: value[id] = n.const_bit; break;
            case NodeType::OtpSlot: {
                if (!n.table)
                    throw std::invalid_argument("ideal_eval: redacted slot has no table");
                std::size_t idx = 0;
                for (int b : v) idx = (idx << 1) | std::size_t(b);
                value[id] = n.table->value(idx);
                break;
            }
            case NodeType::Not: value[id] = v[0] ^ 1; break;
            case NodeType::Xor: value[id] = v[0] ^ v[1]; break;
            case NodeType::Fanout: value[id] = v[0]; break;
            case NodeType::Output:
                value[id] = v[0];
                out[n.label] = v[0];
                break;
        }
    }
    return out;
}

std::string Circuit::to_json(bool redact_tables) const {
    json j;
    j["nodes"] = json::array();
    for (const auto& n : nodes_) {
        json nj;
        nj["id"] = n.id;
        nj["type"] = node_type_name(n.type);
        if (n.type == NodeType::Input || n.type == NodeType::Output) nj["label"] = n.label;
        if (n.type == NodeType::Const) nj["bit"] = n.const_bit;
        if (n.type == NodeType::OtpSlot) {
            nj["k"] = n.table ? n.table->k() : 0;
            if (n.table && !redact_tables) nj["table"] = n.table->label();
        }
        j["nodes"].push_back(nj);
    }
    j["edges"] = json::array();
    for (const auto& e : edges_) {
        j["edges"].push_back({{"from", e.from},
                              {"from_port", e.from_port},
                              {"to", e.to},
                              {"to_port", e.to_port}});
    }
    return j.dump();
}

Circuit Circuit::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("circuit json: ") + err.what(), err.byte);
    }
    std::vector<Node> nodes;
    for (const auto& nj : j.at("nodes")) {
        Node n;
        n.id = nj.at("id").get<int>();
        n.type = node_type_from_name(nj.at("type").get<std::string>());
        if (nj.contains("label")) n.label = nj["label"].get<std::string>();
        if (nj.contains("bit")) n.const_bit = nj["bit"].get<int>();
        if (nj.contains("table")) n.table = GateTable(nj["table"].get<std::string>());
        nodes.push_back(n);
    }
    std::vector<Edge> edges;
    for (const auto& ej : j.at("edges")) {
        edges.push_back({ej.at("from").get<int>(), ej.at("from_port").get<int>(),
                         ej.at("to").get<int>(), ej.at("to_port").get<int>()});
    }
    return Circuit(std::move(nodes), std::move(edges));
}

Circuit compile_millionaires(const std::string& alice_bits, std::size_t n) {
    if (alice_bits.size() != n || n < 1)
        throw std::invalid_argument("compile_millionaires: width mismatch");
    for (char c : alice_bits)
        if (c != '0' && c != '1')
            throw std::invalid_argument("compile_millionaires: bits must be 0/1");

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    int next = 0;

    Node carry;
    carry.id = next++;
    carry.type = NodeType::Const;
    carry.const_bit = 0;
    nodes.push_back(carry);
    int carry_id = carry.id;

    // least significant bit first; string position n-1 is the LSB
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t pos = n - 1 - step;
        Node in;
        in.id = next++;
        in.type = NodeType::Input;
        in.label = "b" + std::to_string(pos);
        nodes.push_back(in);

        Node slot;
        slot.id = next++;
        slot.type = NodeType::OtpSlot;
        slot.table = GateTable(alice_bits[pos] == '1' ? kAndLabel : kOrLabel);
        nodes.push_back(slot);

        edges.push_back({in.id, 0, slot.id, 0});
        edges.push_back({carry_id, 0, slot.id, 1});
        carry_id = slot.id;
    }

    Node out;
    out.id = next++;
    out.type = NodeType::Output;
    out.label = "gt";
    nodes.push_back(out);
    edges.push_back({carry_id, 0, out.id, 0});

    return Circuit(std::move(nodes), std::move(edges));
}

namespace {

RandomizedCircuit randomize_impl(const Circuit& c, const std::function<bool()>& draw) {
    std::vector<Node> nodes = c.nodes();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].id] = i;

    std::map<int, int> pads;
    for (int oid : c.output_ids()) pads[oid] = 0;

    auto propagate_from = [&](int node_id, int port) {
        std::vector<std::pair<int, int>> work{{node_id, port}};
        while (!work.empty()) {
            auto [nid, p] = work.back();
            work.pop_back();
            for (const auto& e : c.out_edges(nid, p)) {
                Node& consumer = nodes[index.at(e.to)];
                switch (consumer.type) {
                    case NodeType::OtpSlot:
                        consumer.table = consumer.table->flip_input(e.to_port);
                        break;
                    case NodeType::Xor:
                    case NodeType::Not:
                        work.push_back({consumer.id, 0});
                        break;
                    case NodeType::Fanout:
                        work.push_back({consumer.id, 0});
                        work.push_back({consumer.id, 1});
                        break;
                    case NodeType::Output: pads[consumer.id] ^= 1; break;
                    default:
                        throw std::invalid_argument("randomize_not_pairs: cannot push a NOT into " +
                                                    node_type_name(consumer.type));
                }
            }
        }
    };

    for (int sid : c.otp_slot_ids()) {
        if (!draw()) continue;
        Node& slot = nodes[index.at(sid)];
        if (!slot.table)
            throw std::invalid_argument("randomize_not_pairs: slot without a table");
        slot.table = slot.table->flip_all();
        propagate_from(sid, 0);
    }
    return {Circuit(std::move(nodes), c.edges()), pads};
}

}  // namespace

RandomizedCircuit randomize_not_pairs(const Circuit& c, Rng& rng) {
    return randomize_impl(c, [&rng] { return rng.bernoulli(0.5); });
}

RandomizedCircuit randomize_not_pairs(const Circuit& c, const std::vector<bool>& draws) {
    std::size_t i = 0;
    return randomize_impl(c, [&draws, &i] {
        if (i >= draws.size()) throw std::invalid_argument("randomize: not enough draws");
        return bool(draws[i++]);
    });
}

std::map<std::string, double> predict_success(const Circuit& c,
                                              const std::map<std::string, int>& bob_inputs,
                                              double per_line_p) {
    if (per_line_p < 0.0 || per_line_p > 1.0)
        throw std::invalid_argument("predict_success: probability outside [0,1]");
    const auto ideal = c.ideal_eval(bob_inputs);

    const auto slots = c.otp_slot_ids();
    std::map<int, std::size_t> slot_index;
    for (std::size_t i = 0; i < slots.size(); ++i) slot_index[slots[i]] = i;

    struct WireDist {
        double p1 = 0.0;
        std::vector<bool> anc;  // which slots this wire depends on
    };
    auto disjoint = [](const std::vector<bool>& a, const std::vector<bool>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] && b[i]) return false;
        return true;
    };
    auto unite = [](std::vector<bool> a, const std::vector<bool>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
        return a;
    };

    std::map<int, WireDist> dist;
    std::map<std::string, double> prediction;
    const std::vector<bool> none(slots.size(), false);

    for (int id : c.topo_order()) {
        const Node& n = c.node(id);
        auto ins = c.in_edges(id);
        std::vector<WireDist> v;
        for (const auto& e : ins) v.push_back(dist.at(e.from));
        switch (n.type) {
            case NodeType::Input: {
                auto it = bob_inputs.find(n.label);
                if (it == bob_inputs.end())
                    throw std::invalid_argument("predict_success: missing input " + n.label);
                dist[id] = {it->second ? 1.0 : 0.0, none};
                break;
            }
            case NodeType::Const: dist[id] = {double(n.const_bit), none}; break;
            case NodeType::OtpSlot: {
                for (std::size_t i = 0; i < v.size(); ++i)
                    for (std::size_t j = i + 1; j < v.size(); ++j)
                        if (!disjoint(v[i].anc, v[j].anc))
                            throw UnsupportedTopologyError(
                                "predict_success: slot inputs share a gate ancestor");
                const GateTable& t = *n.table;
                double p1 = 0.0;
                const std::size_t k = v.size();
                for (std::size_t a = 0; a < (std::size_t(1) << k); ++a) {
                    double pa = 1.0;
                    for (std::size_t i = 0; i < k; ++i) {
                        const bool bit = (a >> (k - 1 - i)) & 1;
                        pa *= bit ? v[i].p1 : 1.0 - v[i].p1;
                    }
                    const double out1 = t.value(a) ? per_line_p : 1.0 - per_line_p;
                    p1 += pa * out1;
                }
                std::vector<bool> anc = none;
                for (const auto& w : v) anc = unite(anc, w.anc);
                anc[slot_index.at(id)] = true;
                dist[id] = {p1, anc};
                break;
            }
            case NodeType::Not: dist[id] = {1.0 - v[0].p1, v[0].anc}; break;
            case NodeType::Xor: {
                if (!disjoint(v[0].anc, v[1].anc))
                    throw UnsupportedTopologyError(
                        "predict_success: xor inputs share a gate ancestor");
                dist[id] = {v[0].p1 * (1.0 - v[1].p1) + v[1].p1 * (1.0 - v[0].p1),
                            unite(v[0].anc, v[1].anc)};
                break;
            }
            case NodeType::Fanout: dist[id] = v[0]; break;
            case NodeType::Output: {
                const double p1 = v[0].p1;
                prediction[n.label] = ideal.at(n.label) ? p1 : 1.0 - p1;
                break;
            }
        }
    }
    return prediction;
}

}  // namespace qotp
