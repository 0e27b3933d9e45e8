#pragma once

#include "qotp/gate_table.hpp"
#include "qotp/rng.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qotp {

enum class NodeType { Input, Const, OtpSlot, Not, Xor, Fanout, Output };

std::string node_type_name(NodeType t);
NodeType node_type_from_name(const std::string& s);

struct Node {
    int id = 0;
    NodeType type = NodeType::Input;
    std::string label;               // Input / Output name
    int const_bit = 0;               // Const value
    std::optional<GateTable> table;  // OtpSlot truth table (secret)
};

struct Edge {
    int from = 0;
    int from_port = 0;  // 0 except for Fanout outputs (0 or 1)
    int to = 0;
    int to_port = 0;  // input slot: port 0 is the most significant gate input
};

// Public interconnect of gate slots with XOR / NOT / fan-out wiring.
// Immutable once validated; evaluation and transforms return new values.
class Circuit {
  public:
    Circuit(std::vector<Node> nodes, std::vector<Edge> edges);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& topo_order() const { return topo_; }

    const Node& node(int id) const;
    int in_degree(NodeType t) const;

    // ids of OtpSlot nodes in topological order
    std::vector<int> otp_slot_ids() const;
    std::vector<int> output_ids() const;
    std::vector<std::string> input_labels() const;

    // incoming edges of a node ordered by to_port
    std::vector<Edge> in_edges(int id) const;
    std::vector<Edge> out_edges(int id, int port) const;

    // Noiseless evaluation; keys of `inputs` are Input labels.
    std::map<std::string, int> ideal_eval(const std::map<std::string, int>& inputs) const;

    // JSON per the wire schema; redacted drops OtpSlot tables (the public
    // view a receiver is allowed to see).
    std::string to_json(bool redact_tables = false) const;
    static Circuit from_json(const std::string& text);

  private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<int> topo_;
    void validate_and_sort();
};

// Comparator chain: returns 1 iff Bob's number exceeds the compiled one.
// alice_bits is most-significant-bit first; Bob's inputs are named b0 (MSB)
// through b{n-1}. Gates run least-significant-bit first with carry
// seeded to 0; a 1-bit compiles to AND, a 0-bit to OR.
Circuit compile_millionaires(const std::string& alice_bits, std::size_t n);

struct RandomizedCircuit {
    Circuit circuit;
    std::map<int, int> output_pads;  // output node id -> pad bit
};

// After each gate slot, with probability one half, absorbs a NOT into the
// slot's table and pushes the paired NOT forward through the wiring; NOTs
// that reach outputs become pads. The padded circuit computes the original
// function.
RandomizedCircuit randomize_not_pairs(const Circuit& c, Rng& rng);
// deterministic variant for tests: draw i is taken for slot i (topo order)
RandomizedCircuit randomize_not_pairs(const Circuit& c, const std::vector<bool>& draws);

// Probability that each output equals its noiseless value when every gate
// slot emits the correct line with probability per_line_p. Exact forward
// dynamic program; throws UnsupportedTopologyError if a slot output
// reconverges.
std::map<std::string, double> predict_success(const Circuit& c,
                                              const std::map<std::string, int>& bob_inputs,
                                              double per_line_p);

}  // namespace qotp
