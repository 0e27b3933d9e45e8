#pragma once

#include "qotp/circuit.hpp"
#include "qotp/encoding.hpp"
#include "qotp/protocol.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qotp::proto {

struct ChannelConfig {
    double loss_probability = 0.0;
    int copies_per_gate = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SessionConfig {
    Scheme scheme = Scheme::LinearG2;
    ChannelConfig channel;
    std::uint64_t alice_seed = 1;
    std::uint64_t bob_seed = 2;
    double fidelity = 1.0;
    bool randomize_gates = true;  // NOT-pair layer on the sender side
    bool record_log = true;       // keep message / measurement logs
};

struct GateMeasurement {
    int gate_id = 0;
    int copy_id = 0;
    std::vector<int> input_bits;
    std::vector<int> qubit_bits;  // -1 for unmeasured qubits
    int raw = 0;
    int pad = 0;
    int corrected = 0;
};

// Receiver-side session record: the message exchange in the order the
// receiver saw it, what was measured, and the decoded outputs.
struct Transcript {
    std::string program_public_json;
    std::vector<ProtocolMessage> messages;
    std::vector<GateMeasurement> measurements;
    std::map<std::string, int> outputs;
    bool aborted = false;
    std::string abort_reason;

    std::string to_json() const;
};

// Same exchange, same measurements, same outputs, same abort state.
bool structurally_equal(const Transcript& a, const Transcript& b);

// Sender state machine. Owns the secret program; emits the header and the
// padded copies, reveals pads only for acknowledged copies.
class AliceEngine {
  public:
    AliceEngine(const Circuit& program, const SessionConfig& cfg);

    std::vector<ProtocolMessage> start();
    std::vector<ProtocolMessage> on_message(const ProtocolMessage& m);

    bool done() const { return done_; }
    bool aborted() const { return aborted_; }

  private:
    SessionConfig cfg_;
    RandomizedCircuit program_;
    std::vector<int> slots_;
    Rng alice_rng_;
    Rng channel_rng_;
    std::size_t current_slot_ = 0;
    int current_copy_ = -1;
    int current_pad_ = 0;
    bool done_ = false;
    bool aborted_ = false;

    ProtocolMessage make_offer();
    std::vector<ProtocolMessage> advance_gate();
};

// Receiver state machine. Sees only the redacted program; measures the
// acknowledged copy of each gate and applies revealed pads.
class BobEngine {
  public:
    BobEngine(std::map<std::string, int> inputs, std::uint64_t seed);

    std::vector<ProtocolMessage> on_message(const ProtocolMessage& m);

    bool done() const { return done_; }
    bool aborted() const { return aborted_; }
    const std::string& abort_reason() const { return abort_reason_; }
    const std::map<std::string, int>& outputs() const { return outputs_; }
    const std::vector<GateMeasurement>& measurements() const { return measurements_; }
    const std::string& program_json() const { return program_json_; }

  private:
    std::map<std::string, int> inputs_;
    Rng rng_;
    std::optional<Circuit> circuit_;
    Scheme scheme_ = Scheme::LinearG2;
    std::string program_json_;
    std::map<int, int> gate_value_;  // corrected outputs of measured slots
    std::optional<GateMeasurement> pending_;
    std::vector<GateMeasurement> measurements_;
    std::map<std::string, int> outputs_;
    bool done_ = false;
    bool aborted_ = false;
    std::string abort_reason_;

    int resolve(int node_id) const;
    std::vector<int> slot_inputs(int slot_id) const;
};

// Runs the full exchange in process and returns the receiver-side record.
Transcript run_session(const Circuit& program, const std::map<std::string, int>& bob_inputs,
                       const SessionConfig& cfg);

}  // namespace qotp::proto
