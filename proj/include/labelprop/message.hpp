#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "labelprop/partition.hpp"
#include "labelprop/propagation.hpp"

namespace labelprop {

constexpr std::uint8_t kProtocolVersion = 1;
constexpr std::uint16_t kMasterPart = 0xffff;      // sender id of the master
constexpr std::uint16_t kUnassignedPart = 0xfffe;  // worker before LoadPartition

// One adjacency entry as shipped to a worker: global neighbor id, edge
// weight, and the part that owns the neighbor.
struct PartEdge {
    std::uint64_t neighbor;
    double weight;
    std::uint16_t owner;
    bool operator==(const PartEdge&) const = default;
};

struct PartNode {
    std::uint64_t global_id;
    std::vector<std::string> seed_labels;  // empty unless the node is a seed
    std::vector<PartEdge> edges;           // ascending by neighbor id
    bool operator==(const PartNode&) const = default;
};

// Everything a worker needs to serve its part. peer_addrs is empty for the
// in-process transport and holds one host:port per part for TCP.
struct PartDescriptor {
    std::uint16_t part_id = 0;
    std::uint16_t k = 1;
    TieBreak tie_break = TieBreak::LexSmallest;
    std::uint64_t max_supersteps = 0;
    bool suppress_redundant_broadcasts = false;
    std::vector<std::string> peer_addrs;
    std::vector<PartNode> nodes;  // ascending by global id
    bool operator==(const PartDescriptor&) const = default;
};

// --- message variants (tags fixed by the wire format) ---

struct Hello {  // tag 8
    std::uint8_t version = kProtocolVersion;
    std::uint16_t sender = kUnassignedPart;
    std::uint16_t k = 1;
    std::uint8_t strategy = 0;
    std::uint8_t tie_break = 0;
    std::uint64_t max_supersteps = 0;
    std::uint8_t suppress = 0;
    std::uint64_t fingerprint = 0;  // FNV-1a over the config fields above
    bool operator==(const Hello&) const = default;
};

struct LoadPartition {  // tag 1
    PartDescriptor part;
    bool operator==(const LoadPartition&) const = default;
};

struct StartSuperstep {  // tag 2
    std::uint32_t t;
    bool operator==(const StartSuperstep&) const = default;
};

struct LabelBroadcast {  // tag 3
    std::uint64_t dest;
    std::uint64_t source;
    std::vector<std::string> labels;  // non-empty
    double weight;                    // > 0
    bool operator==(const LabelBroadcast&) const = default;
};

struct BroadcastsDone {  // tag 4
    std::uint32_t t;
    std::uint16_t source_part;
    bool operator==(const BroadcastsDone&) const = default;
};

struct SuperstepDone {  // tag 5
    std::uint32_t t;
    std::uint64_t changed;
    std::uint64_t unlabeled;
    bool operator==(const SuperstepDone&) const = default;
};

struct Halt {  // tag 6
    HaltReason reason;
    bool operator==(const Halt&) const = default;
};

struct SliceEntry {
    std::uint64_t node;
    std::vector<std::string> labels;
    std::int64_t labeled_at;  // -1 = unlabeled
    bool operator==(const SliceEntry&) const = default;
};

struct SliceTransfer {  // tag 7
    std::uint16_t part;
    std::uint64_t w2w_sent_total = 0;
    std::vector<std::uint64_t> w2w_sent_per_superstep;
    std::vector<SliceEntry> entries;  // ascending by node
    bool operator==(const SliceTransfer&) const = default;
};

using Message = std::variant<LoadPartition, StartSuperstep, LabelBroadcast, BroadcastsDone,
                             SuperstepDone, Halt, SliceTransfer, Hello>;

std::uint8_t message_tag(const Message& m);
const char* message_name(const Message& m);

// Frame layout: 4-byte big-endian payload length, 1-byte type tag, payload.
// Integers big-endian; node ids 8-byte unsigned; weights IEEE-754 binary64
// big-endian; label sets are a 2-byte count then per label a 2-byte byte
// length and the UTF-8 bytes.
std::vector<std::uint8_t> encode_message(const Message& m);

// Decodes one payload; validates invariants (positive broadcast weight,
// non-empty broadcast label set, known tag). Throws ProtocolError.
Message decode_payload(std::uint8_t tag, std::span<const std::uint8_t> payload);

// Convenience: decode a complete frame (as produced by encode_message).
Message decode_frame(std::span<const std::uint8_t> frame);

// Config fingerprint carried by Hello, over (version, k, strategy,
// tie_break, max_supersteps, suppress).
std::uint64_t config_fingerprint(const Hello& h);
Hello make_hello(std::uint16_t sender, std::uint16_t k, Strategy strategy,
                 const PropagationConfig& config, bool suppress);

}  // namespace labelprop
