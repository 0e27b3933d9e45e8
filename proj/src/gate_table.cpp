#include "qotp/gate_table.hpp"

#include <stdexcept>

namespace qotp {

namespace {
int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t(1) << k) < n) ++k;
    if ((std::size_t(1) << k) != n) return -1;
    return k;
}
}  // namespace

GateTable::GateTable(std::string outputs) : outputs_(std::move(outputs)) {
    k_ = log2_exact(outputs_.size());
    if (k_ < 1 || outputs_.size() < 2)
        throw std::invalid_argument("GateTable: output count must be 2^k, k >= 1");
    for (char c : outputs_)
        if (c != '0' && c != '1') throw std::invalid_argument("GateTable: label must be bits");
}

std::vector<GateTable> GateTable::all(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("GateTable::all: k out of range");
    const std::size_t lines = std::size_t(1) << k;
    const std::size_t count = std::size_t(1) << lines;
    std::vector<GateTable> out;
    out.reserve(count);
    for (std::size_t g = 0; g < count; ++g) {
        std::string s(lines, '0');
        for (std::size_t i = 0; i < lines; ++i)
            if ((g >> (lines - 1 - i)) & 1) s[i] = '1';
        out.emplace_back(std::move(s));
    }
    return out;
}

int GateTable::value(std::size_t input) const {
    if (input >= outputs_.size()) throw std::invalid_argument("GateTable: input out of range");
    return outputs_[input] - '0';
}

GateTable GateTable::flip_all() const {
    std::string s = outputs_;
    for (char& c : s) c = c == '0' ? '1' : '0';
    return GateTable(s);
}

GateTable GateTable::flip_input(int port) const {
    if (port < 0 || port >= k_) throw std::invalid_argument("GateTable: bad input port");
    const std::size_t mask = std::size_t(1) << (k_ - 1 - port);
    std::string s = outputs_;
    for (std::size_t x = 0; x < outputs_.size(); ++x) s[x] = outputs_[x ^ mask];
    return GateTable(s);
}

int GateTable::parity() const {
    int p = 0;
    for (char c : outputs_) p ^= c - '0';
    return p;
}

}  // namespace qotp
