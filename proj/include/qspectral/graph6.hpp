#ifndef QSPECTRAL_GRAPH6_HPP
#define QSPECTRAL_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "qspectral/graph.hpp"

namespace qspectral {

/// Parse failure; byte_offset points at the offending byte of the record.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    size_t byte_offset;
};

/// Decode a header-less graph6 record. Accepts the single-byte size form
/// (1 <= n <= 62) and the four-byte extended form (63 <= n <= 258047).
/// Rejects bytes outside [63,126], wrong record length, order 0, and
/// nonzero padding bits.
Graph from_graph6(std::string_view record);

/// Canonical graph6 encoding; round-trips with from_graph6 bit-exactly.
std::string to_graph6(const Graph& g);

}  // namespace qspectral

#endif
