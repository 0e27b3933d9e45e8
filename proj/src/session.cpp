#include "qotp/session.hpp"

#include "qotp/errors.hpp"

#include <json.hpp>

#include <deque>
#include <stdexcept>

namespace qotp::proto {

using nlohmann::json;

void ChannelConfig::validate() const {
    if (loss_probability < 0.0 || loss_probability >= 1.0)
        throw std::invalid_argument("channel: loss probability must be in [0, 1)");
    if (copies_per_gate < 1) throw std::invalid_argument("channel: copies_per_gate < 1");
}

namespace {

json measurement_json(const GateMeasurement& m) {
    return json{{"gate_id", m.gate_id},     {"copy_id", m.copy_id},
                {"input_bits", m.input_bits}, {"qubit_bits", m.qubit_bits},
                {"raw", m.raw},             {"pad", m.pad},
                {"corrected", m.corrected}};
}

}  // namespace

std::string Transcript::to_json() const {
    json j;
    j["program"] = program_public_json.empty() ? json(nullptr) : json::parse(program_public_json);
    j["messages"] = json::array();
    for (const auto& m : messages) j["messages"].push_back(json::parse(encode_message(m)));
    j["measurements"] = json::array();
    for (const auto& m : measurements) j["measurements"].push_back(measurement_json(m));
    j["outputs"] = outputs;
    j["aborted"] = aborted;
    j["abort_reason"] = abort_reason;
    return j.dump(2);
}

bool structurally_equal(const Transcript& a, const Transcript& b) {
    if (a.aborted != b.aborted || a.abort_reason != b.abort_reason) return false;
    if (a.outputs != b.outputs) return false;
    if (a.messages.size() != b.messages.size()) return false;
    for (std::size_t i = 0; i < a.messages.size(); ++i)
        if (encode_message(a.messages[i]) != encode_message(b.messages[i])) return false;
    if (a.measurements.size() != b.measurements.size()) return false;
    for (std::size_t i = 0; i < a.measurements.size(); ++i)
        if (measurement_json(a.measurements[i]) != measurement_json(b.measurements[i]))
            return false;
    return true;
}

AliceEngine::AliceEngine(const Circuit& program, const SessionConfig& cfg)
    : cfg_(cfg),
      program_{program, {}},
      alice_rng_(cfg.alice_seed),
      channel_rng_(cfg.channel.seed) {
    cfg_.channel.validate();
    if (cfg_.fidelity <= 0.0 || cfg_.fidelity > 1.0)
        throw std::invalid_argument("session: fidelity must be in (0, 1]");
    if (cfg_.randomize_gates) {
        program_ = randomize_not_pairs(program, alice_rng_);
    } else {
        for (int oid : program.output_ids()) program_.output_pads[oid] = 0;
    }
    slots_ = program_.circuit.otp_slot_ids();
}

ProtocolMessage AliceEngine::make_offer() {
    const int gid = slots_[current_slot_];
    ++current_copy_;
    current_pad_ = alice_rng_.bit();
    const GateTable& table = *program_.circuit.node(gid).table;
    GateOtp otp = make_otp(cfg_.scheme, table, alice_rng_, cfg_.fidelity, current_pad_);
    otp = corrupt_preparation(std::move(otp), alice_rng_);

    StateOffer offer;
    offer.gate_id = gid;
    offer.copy_id = current_copy_;
    offer.lost = channel_rng_.bernoulli(cfg_.channel.loss_probability);
    if (!offer.lost)
        for (const auto& s : otp.qubit_states) offer.qubit_states.push_back(pack_amplitudes(s));
    return offer;
}

std::vector<ProtocolMessage> AliceEngine::start() {
    ProgramHeader header;
    header.circuit_json = program_.circuit.to_json(/*redact_tables=*/true);
    header.scheme = scheme_name(cfg_.scheme);
    header.copies_per_gate = cfg_.channel.copies_per_gate;
    header.loss_probability = cfg_.channel.loss_probability;
    std::vector<ProtocolMessage> out{header};
    if (slots_.empty()) {
        auto tail = advance_gate();  // degenerate program: straight to pads
        out.insert(out.end(), tail.begin(), tail.end());
    } else {
        out.push_back(make_offer());
    }
    return out;
}

std::vector<ProtocolMessage> AliceEngine::advance_gate() {
    ++current_slot_;
    current_copy_ = -1;
    if (current_slot_ < slots_.size()) return {make_offer()};
    OutputPadReveal reveal;
    for (const auto& [oid, pad] : program_.output_pads)
        reveal.output_pads[program_.circuit.node(oid).label] = pad;
    done_ = true;
    return {reveal};
}

std::vector<ProtocolMessage> AliceEngine::on_message(const ProtocolMessage& m) {
    if (done_) return {};
    if (std::holds_alternative<LossReport>(m)) {
        const auto& r = std::get<LossReport>(m);
        if (r.gate_id != slots_[current_slot_] || r.copy_id != current_copy_)
            throw ProtocolAbort("loss report for an unexpected copy");
        if (current_copy_ + 1 >= cfg_.channel.copies_per_gate) {
            done_ = true;
            aborted_ = true;
            return {Abort{"all " + std::to_string(cfg_.channel.copies_per_gate) +
                          " copies of gate " + std::to_string(r.gate_id) + " lost"}};
        }
        return {make_offer()};
    }
    if (std::holds_alternative<ReceiveAck>(m)) {
        const auto& a = std::get<ReceiveAck>(m);
        if (a.gate_id != slots_[current_slot_] || a.copy_id != current_copy_)
            throw ProtocolAbort("ack for an unexpected copy");
        std::vector<ProtocolMessage> out{PadReveal{a.gate_id, a.copy_id, current_pad_}};
        auto tail = advance_gate();
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    if (std::holds_alternative<Abort>(m)) {
        done_ = true;
        aborted_ = true;
        return {};
    }
    throw ProtocolAbort("unexpected message for the sender: " + message_type(m));
}

BobEngine::BobEngine(std::map<std::string, int> inputs, std::uint64_t seed)
    : inputs_(std::move(inputs)), rng_(seed) {}

int BobEngine::resolve(int node_id) const {
    const Node& n = circuit_->node(node_id);
    switch (n.type) {
        case NodeType::Input: {
            auto it = inputs_.find(n.label);
            if (it == inputs_.end()) throw ProtocolAbort("missing input " + n.label);
            return it->second ? 1 : 0;
        }
        case NodeType::Const: return n.const_bit;
        case NodeType::OtpSlot: {
            auto it = gate_value_.find(node_id);
            if (it == gate_value_.end())
                throw ProtocolAbort("gate " + std::to_string(node_id) + " not yet decoded");
            return it->second;
        }
        case NodeType::Not: return resolve(circuit_->in_edges(node_id)[0].from) ^ 1;
        case NodeType::Xor: {
            auto ins = circuit_->in_edges(node_id);
            return resolve(ins[0].from) ^ resolve(ins[1].from);
        }
        case NodeType::Fanout:
        case NodeType::Output: return resolve(circuit_->in_edges(node_id)[0].from);
    }
    throw ProtocolAbort("bad node");
}

std::vector<int> BobEngine::slot_inputs(int slot_id) const {
    std::vector<int> bits;
    for (const auto& e : circuit_->in_edges(slot_id)) bits.push_back(resolve(e.from));
    return bits;
}

std::vector<ProtocolMessage> BobEngine::on_message(const ProtocolMessage& m) {
    if (done_) return {};
    if (std::holds_alternative<ProgramHeader>(m)) {
        const auto& h = std::get<ProgramHeader>(m);
        circuit_ = Circuit::from_json(h.circuit_json);
        scheme_ = scheme_from_name(h.scheme);
        program_json_ = h.circuit_json;
        return {};
    }
    if (!circuit_) throw ProtocolAbort("message before program header");

    if (std::holds_alternative<StateOffer>(m)) {
        const auto& offer = std::get<StateOffer>(m);
        if (offer.lost) return {LossReport{offer.gate_id, offer.copy_id}};

        const auto input_bits = slot_inputs(offer.gate_id);
        const int k = int(input_bits.size());
        std::size_t input = 0;
        for (int b : input_bits) input = (input << 1) | std::size_t(b);

        GateOtp otp;
        otp.scheme = scheme_;
        otp.table = GateTable(std::string(std::size_t(1) << k, '0'));  // only k matters here
        for (const auto& packed : offer.qubit_states)
            otp.qubit_states.push_back(unpack_amplitudes(packed));

        auto rec = measure_otp(otp, input, rng_);
        GateMeasurement gm;
        gm.gate_id = offer.gate_id;
        gm.copy_id = offer.copy_id;
        gm.input_bits = input_bits;
        gm.qubit_bits = rec.qubit_bits;
        gm.raw = rec.raw;
        pending_ = gm;
        return {ReceiveAck{offer.gate_id, offer.copy_id}};
    }
    if (std::holds_alternative<PadReveal>(m)) {
        const auto& r = std::get<PadReveal>(m);
        if (!pending_ || pending_->gate_id != r.gate_id || pending_->copy_id != r.copy_id)
            throw ProtocolAbort("pad reveal without a matching acknowledged copy");
        pending_->pad = r.pad;
        pending_->corrected = pending_->raw ^ r.pad;
        gate_value_[r.gate_id] = pending_->corrected;
        measurements_.push_back(*pending_);
        pending_.reset();
        return {};
    }
    if (std::holds_alternative<OutputPadReveal>(m)) {
        const auto& r = std::get<OutputPadReveal>(m);
        for (int oid : circuit_->output_ids()) {
            const std::string& label = circuit_->node(oid).label;
            auto it = r.output_pads.find(label);
            const int pad = it == r.output_pads.end() ? 0 : it->second;
            outputs_[label] = resolve(oid) ^ pad;
        }
        done_ = true;
        return {};
    }
    if (std::holds_alternative<Abort>(m)) {
        done_ = true;
        aborted_ = true;
        abort_reason_ = std::get<Abort>(m).reason;
        return {};
    }
    throw ProtocolAbort("unexpected message for the receiver: " + message_type(m));
}

Transcript run_session(const Circuit& program, const std::map<std::string, int>& bob_inputs,
                       const SessionConfig& cfg) {
    AliceEngine alice(program, cfg);
    BobEngine bob(bob_inputs, cfg.bob_seed);

    Transcript t;
    std::deque<ProtocolMessage> to_bob, to_alice;
    for (auto& m : alice.start()) to_bob.push_back(std::move(m));

    // the log is the receiver's view: messages in the order Bob saw or sent
    while (!to_bob.empty() || !to_alice.empty()) {
        if (!to_bob.empty()) {
            ProtocolMessage m = std::move(to_bob.front());
            to_bob.pop_front();
            if (cfg.record_log) t.messages.push_back(m);
            for (auto& reply : bob.on_message(m)) {
                if (cfg.record_log) t.messages.push_back(reply);
                to_alice.push_back(std::move(reply));
            }
            continue;
        }
        ProtocolMessage m = std::move(to_alice.front());
        to_alice.pop_front();
        for (auto& reply : alice.on_message(m)) to_bob.push_back(std::move(reply));
    }

    t.program_public_json = bob.program_json();
    if (cfg.record_log) t.measurements = bob.measurements();
    t.outputs = bob.outputs();
    t.aborted = bob.aborted();
    t.abort_reason = bob.abort_reason();
    return t;
}

}  // namespace qotp::proto
