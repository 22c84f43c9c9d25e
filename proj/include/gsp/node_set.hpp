#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsp {

// Subset of the simple-reflection index set I, stored as a bitmask.
// Node indices are 0-based internally; all text/JSON I/O is 1-based.
struct NodeSet {
    std::uint32_t bits = 0;

    constexpr NodeSet() = default;
    constexpr explicit NodeSet(std::uint32_t b) : bits(b) {}

    static constexpr NodeSet full(int rank) {
        return NodeSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
    }
    static NodeSet of(std::initializer_list<int> nodes) {
        NodeSet s;
        for (int i : nodes) s.bits |= (1u << i);
        return s;
    }

    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    int count() const { return __builtin_popcount(bits); }

    constexpr NodeSet with(int i) const { return NodeSet(bits | (1u << i)); }
    constexpr NodeSet without(int i) const { return NodeSet(bits & ~(1u << i)); }

    constexpr bool subset_of(NodeSet o) const { return (bits & ~o.bits) == 0; }

    friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits & b.bits); }
    friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits | b.bits); }
    friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(NodeSet a, NodeSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(NodeSet a, NodeSet b) { return a.bits != b.bits; }
    friend constexpr bool operator<(NodeSet a, NodeSet b) { return a.bits < b.bits; }

    std::vector<int> indices() const {
        std::vector<int> v;
        for (std::uint32_t b = bits; b; b &= b - 1) v.push_back(__builtin_ctz(b));
        return v;
    }

    // Render as "{1,3}" with 1-based node numbers; "{}" when empty.
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }
};

// All subsets of `universe`, in increasing bitmask order.
inline std::vector<NodeSet> subsets_of(NodeSet universe) {
    std::vector<NodeSet> out;
    std::uint32_t u = universe.bits;
    std::uint32_t s = 0;
    while (true) {
        out.push_back(NodeSet(s));
        if (s == u) break;
        s = (s - u) & u;  // next subset of u
    }
    return out;
}

}  // namespace gsp
