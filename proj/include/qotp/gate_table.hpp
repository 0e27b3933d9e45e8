#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qotp {

// Truth table of a k-input Boolean gate. The label string lists the outputs
// in input order with the first input bit most significant, so "0100" means
// 00->0, 01->1, 10->0, 11->0.
class GateTable {
  public:
    GateTable() = default;
    explicit GateTable(std::string outputs);

    static GateTable from_label(const std::string& label) { return GateTable(label); }
    // all 2^(2^k) gates, in label order
    static std::vector<GateTable> all(int k);

    int k() const { return k_; }
    std::size_t lines() const { return outputs_.size(); }
    int value(std::size_t input) const;
    const std::string& label() const { return outputs_; }

    // NOT absorbed on the output: every line flipped
    GateTable flip_all() const;
    // NOT absorbed on input port `port` (0 = most significant input bit):
    // rows permuted so new(x) = old(x with that bit flipped)
    GateTable flip_input(int port) const;

    // parity of all output lines
    int parity() const;

    bool operator==(const GateTable& o) const = default;

  private:
    int k_ = 0;
    std::string outputs_;
};

inline const char* kAndLabel = "0001";
inline const char* kOrLabel = "0111";

}  // namespace qotp
