#include "qspectral/graph6.hpp"

namespace qspectral {

namespace {

constexpr int kBias = 63;
constexpr long long kMaxExtendedOrder = 258047;  // 2^18 - 1

int sixbits(std::string_view record, size_t offset) {
    unsigned char c = static_cast<unsigned char>(record[offset]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range [63,126]", offset);
    return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view record) {
    if (record.empty()) throw Graph6Error("empty record", 0);

    long long n;
    size_t pos;
    int b0 = sixbits(record, 0);
    if (b0 < 63) {
        n = b0;
        pos = 1;
    } else {
        // 126 introduces the extended size; 126 126 (the 8-byte form) is out of range here.
        if (record.size() < 2) throw Graph6Error("truncated extended size", 1);
        if (static_cast<unsigned char>(record[1]) == 126)
            throw Graph6Error("orders above 258047 are not supported", 1);
        if (record.size() < 4) throw Graph6Error("truncated extended size", record.size());
        n = (static_cast<long long>(sixbits(record, 1)) << 12) |
            (static_cast<long long>(sixbits(record, 2)) << 6) |
            static_cast<long long>(sixbits(record, 3));
        if (n < 63) throw Graph6Error("non-canonical extended size for order < 63", 1);
        if (n > kMaxExtendedOrder) throw Graph6Error("order exceeds 258047", 1);
        pos = 4;
    }
    if (n == 0) throw Graph6Error("order 0 is not representable", 0);

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(record.size()) - static_cast<long long>(pos) != nbytes)
        throw Graph6Error("record length does not match order", record.size());

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int j = 1, i = 0;  // column-major walk over the upper triangle
    for (long long byte = 0; byte < nbytes; ++byte) {
        int v = sixbits(record, pos + static_cast<size_t>(byte));
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            bool on = (v >> shift) & 1;
            if (bit >= nbits) {
                if (on) throw Graph6Error("nonzero padding bits", pos + static_cast<size_t>(byte));
                continue;
            }
            if (on) g.add_edge(i, j);
            if (++i == j) {
                ++j;
                i = 0;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    }

    long long nbits = g.pair_count();
    int acc = 0, filled = 0;
    for (long long t = 0; t < nbits; ++t) {
        acc = (acc << 1) | (g.pair_bit(t) ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(kBias + acc));
            acc = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

}  // namespace qspectral
