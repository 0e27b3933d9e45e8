#pragma once

#include "qotp/states.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qotp::proto {

// Sent first; the circuit JSON is the redacted public view (slot tables
// stripped), which is all the receiver may learn about the program.
struct ProgramHeader {
    std::string circuit_json;
    std::string scheme;
    int copies_per_gate = 1;
    double loss_probability = 0.0;
};

// One padded copy of a gate encoding in transit. `lost` marks a copy the
// channel dropped; the classical announcement still arrives so the receiver
// can report the loss. Amplitudes are [re, im] pairs per basis state.
struct StateOffer {
    int gate_id = 0;
    int copy_id = 0;
    bool lost = false;
    std::vector<std::vector<std::array<double, 2>>> qubit_states;
};

struct ReceiveAck {
    int gate_id = 0;
    int copy_id = 0;
};

struct LossReport {
    int gate_id = 0;
    int copy_id = 0;
};

// Only ever sent for the copy the receiver acknowledged.
struct PadReveal {
    int gate_id = 0;
    int copy_id = 0;
    int pad = 0;
};

struct OutputPadReveal {
    std::map<std::string, int> output_pads;  // output label -> pad bit
};

struct Abort {
    std::string reason;
};

using ProtocolMessage = std::variant<ProgramHeader, StateOffer, ReceiveAck, LossReport,
                                     PadReveal, OutputPadReveal, Abort>;

std::string message_type(const ProtocolMessage& m);

// One JSON frame, no trailing newline; the stream transport delimits
// frames with '\n'. decode throws ParseError with the byte offset.
std::string encode_message(const ProtocolMessage& m);
ProtocolMessage decode_message(const std::string& frame);

std::vector<std::array<double, 2>> pack_amplitudes(const PureState& s);
PureState unpack_amplitudes(const std::vector<std::array<double, 2>>& a);

}  // namespace qotp::proto
