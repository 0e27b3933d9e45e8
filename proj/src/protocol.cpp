#include "qotp/protocol.hpp"

#include "qotp/errors.hpp"

#include <json.hpp>

namespace qotp::proto {

using nlohmann::json;

std::string message_type(const ProtocolMessage& m) {
    struct Visitor {
        std::string operator()(const ProgramHeader&) { return "program_header"; }
        std::string operator()(const StateOffer&) { return "state_offer"; }
        std::string operator()(const ReceiveAck&) { return "receive_ack"; }
        std::string operator()(const LossReport&) { return "loss_report"; }
        std::string operator()(const PadReveal&) { return "pad_reveal"; }
        std::string operator()(const OutputPadReveal&) { return "output_pad_reveal"; }
        std::string operator()(const Abort&) { return "abort"; }
    };
    return std::visit(Visitor{}, m);
}

std::vector<std::array<double, 2>> pack_amplitudes(const PureState& s) {
    std::vector<std::array<double, 2>> out;
    out.reserve(s.dim());
    for (const auto& a : s.amp) out.push_back({a.real(), a.imag()});
    return out;
}

PureState unpack_amplitudes(const std::vector<std::array<double, 2>>& a) {
    std::vector<cplx> amp;
    amp.reserve(a.size());
    for (const auto& p : a) amp.emplace_back(p[0], p[1]);
    return PureState(std::move(amp));
}

std::string encode_message(const ProtocolMessage& m) {
    json j;
    j["type"] = message_type(m);
    struct Visitor {
        json& j;
        void operator()(const ProgramHeader& x) {
            j["circuit"] = json::parse(x.circuit_json);
            j["scheme"] = x.scheme;
            j["copies_per_gate"] = x.copies_per_gate;
            j["loss_probability"] = x.loss_probability;
        }
        void operator()(const StateOffer& x) {
            j["gate_id"] = x.gate_id;
            j["copy_id"] = x.copy_id;
            j["lost"] = x.lost;
            if (!x.lost) j["qubit_states"] = x.qubit_states;
        }
        void operator()(const ReceiveAck& x) {
            j["gate_id"] = x.gate_id;
            j["copy_id"] = x.copy_id;
        }
        void operator()(const LossReport& x) {
            j["gate_id"] = x.gate_id;
            j["copy_id"] = x.copy_id;
        }
        void operator()(const PadReveal& x) {
            j["gate_id"] = x.gate_id;
            j["copy_id"] = x.copy_id;
            j["pad"] = x.pad;
        }
        void operator()(const OutputPadReveal& x) { j["output_pads"] = x.output_pads; }
        void operator()(const Abort& x) { j["reason"] = x.reason; }
    };
    std::visit(Visitor{j}, m);
    return j.dump();
}

ProtocolMessage decode_message(const std::string& frame) {
    json j;
    try {
        j = json::parse(frame);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("bad frame: ") + err.what(), err.byte);
    }
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "program_header") {
            ProgramHeader x;
            x.circuit_json = j.at("circuit").dump();
            x.scheme = j.at("scheme").get<std::string>();
            x.copies_per_gate = j.at("copies_per_gate").get<int>();
            x.loss_probability = j.at("loss_probability").get<double>();
            return x;
        }
        if (type == "state_offer") {
            StateOffer x;
            x.gate_id = j.at("gate_id").get<int>();
            x.copy_id = j.at("copy_id").get<int>();
            x.lost = j.at("lost").get<bool>();
            if (!x.lost)
                x.qubit_states =
                    j.at("qubit_states").get<std::vector<std::vector<std::array<double, 2>>>>();
            return x;
        }
        if (type == "receive_ack")
            return ReceiveAck{j.at("gate_id").get<int>(), j.at("copy_id").get<int>()};
        if (type == "loss_report")
            return LossReport{j.at("gate_id").get<int>(), j.at("copy_id").get<int>()};
        if (type == "pad_reveal")
            return PadReveal{j.at("gate_id").get<int>(), j.at("copy_id").get<int>(),
                             j.at("pad").get<int>()};
        if (type == "output_pad_reveal")
            return OutputPadReveal{j.at("output_pads").get<std::map<std::string, int>>()};
        if (type == "abort") return Abort{j.at("reason").get<std::string>()};
        throw ParseError("unknown message type: " + type, 0);
    } catch (const json::exception& err) {
        throw ParseError(std::string("bad frame: ") + err.what(), 0);
    }
}

}  // namespace qotp::proto
