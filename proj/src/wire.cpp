#include "labelprop/message.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "labelprop/common.hpp"

namespace labelprop {

namespace {

class Writer {
public:
    explicit Writer(std::vector<std::uint8_t>& buf) : buf_(buf) {}

    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16(std::uint16_t v) {
        buf_.push_back(static_cast<std::uint8_t>(v >> 8));
        buf_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v) {
        for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
    }
    void u64(std::uint64_t v) {
        for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
    }
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

    void str(const std::string& s) {
        if (s.size() > 0xffff) throw ProtocolError("string too long for wire format");
        u16(static_cast<std::uint16_t>(s.size()));
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

    void label_set(const std::vector<std::string>& labels) {
        if (labels.size() > 0xffff) throw ProtocolError("label set too large for wire format");
        u16(static_cast<std::uint16_t>(labels.size()));
        for (const auto& l : labels) str(l);
    }

private:
    std::vector<std::uint8_t>& buf_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() { return take(1)[0]; }
    std::uint16_t u16() {
        auto b = take(2);
        return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
    }
    std::uint32_t u32() {
        auto b = take(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | b[i];
        return v;
    }
    std::uint64_t u64() {
        auto b = take(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
        return v;
    }
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
    double f64() { return std::bit_cast<double>(u64()); }

    std::string str() {
        std::uint16_t len = u16();
        auto b = take(len);
        return {reinterpret_cast<const char*>(b.data()), b.size()};
    }

    std::vector<std::string> label_set() {
        std::uint16_t count = u16();
        std::vector<std::string> labels;
        labels.reserve(count);
        for (std::uint16_t i = 0; i < count; ++i) labels.push_back(str());
        return labels;
    }

    void expect_end() const {
        if (pos_ != data_.size()) throw ProtocolError("trailing bytes in message payload");
    }

private:
    std::span<const std::uint8_t> take(std::size_t n) {
        if (data_.size() - pos_ < n) throw ProtocolError("truncated message payload");
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

void encode_body(Writer& w, const LoadPartition& m) {
    const auto& p = m.part;
    w.u16(p.part_id);
    w.u16(p.k);
    w.u8(static_cast<std::uint8_t>(p.tie_break));
    w.u64(p.max_supersteps);
    w.u8(p.suppress_redundant_broadcasts ? 1 : 0);
    w.u16(static_cast<std::uint16_t>(p.peer_addrs.size()));
    for (const auto& a : p.peer_addrs) w.str(a);
    w.u64(p.nodes.size());
    for (const auto& node : p.nodes) {
        w.u64(node.global_id);
        w.label_set(node.seed_labels);
        w.u32(static_cast<std::uint32_t>(node.edges.size()));
        for (const auto& e : node.edges) {
            w.u64(e.neighbor);
            w.f64(e.weight);
            w.u16(e.owner);
        }
    }
}

LoadPartition decode_load_partition(Reader& r) {
    LoadPartition m;
    auto& p = m.part;
    p.part_id = r.u16();
    p.k = r.u16();
    p.tie_break = static_cast<TieBreak>(r.u8());
    p.max_supersteps = r.u64();
    p.suppress_redundant_broadcasts = r.u8() != 0;
    std::uint16_t addrs = r.u16();
    for (std::uint16_t i = 0; i < addrs; ++i) p.peer_addrs.push_back(r.str());
    std::uint64_t nodes = r.u64();
    p.nodes.reserve(nodes);
    for (std::uint64_t i = 0; i < nodes; ++i) {
        PartNode node;
        node.global_id = r.u64();
        node.seed_labels = r.label_set();
        std::uint32_t degree = r.u32();
        node.edges.reserve(degree);
        for (std::uint32_t e = 0; e < degree; ++e) {
            PartEdge edge;
            edge.neighbor = r.u64();
            edge.weight = r.f64();
            edge.owner = r.u16();
            node.edges.push_back(edge);
        }
        p.nodes.push_back(std::move(node));
    }
    return m;
}

}  // namespace

std::uint8_t message_tag(const Message& m) {
    return static_cast<std::uint8_t>(m.index() + 1);
}

const char* message_name(const Message& m) {
    static constexpr const char* names[] = {
        "LoadPartition", "StartSuperstep", "LabelBroadcast", "BroadcastsDone",
        "SuperstepDone", "Halt",           "SliceTransfer",  "Hello"};
    return names[m.index()];
}

std::vector<std::uint8_t> encode_message(const Message& m) {
    std::vector<std::uint8_t> frame(4);  // length patched at the end
    Writer w(frame);
    w.u8(message_tag(m));
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, LoadPartition>) {
                encode_body(w, body);
            } else if constexpr (std::is_same_v<T, StartSuperstep>) {
                w.u32(body.t);
            } else if constexpr (std::is_same_v<T, LabelBroadcast>) {
                w.u64(body.dest);
                w.u64(body.source);
                w.label_set(body.labels);
                w.f64(body.weight);
            } else if constexpr (std::is_same_v<T, BroadcastsDone>) {
                w.u32(body.t);
                w.u16(body.source_part);
            } else if constexpr (std::is_same_v<T, SuperstepDone>) {
                w.u32(body.t);
                w.u64(body.changed);
                w.u64(body.unlabeled);
            } else if constexpr (std::is_same_v<T, Halt>) {
                w.u8(static_cast<std::uint8_t>(body.reason));
            } else if constexpr (std::is_same_v<T, SliceTransfer>) {
                w.u16(body.part);
                w.u64(body.w2w_sent_total);
                w.u32(static_cast<std::uint32_t>(body.w2w_sent_per_superstep.size()));
                for (auto c : body.w2w_sent_per_superstep) w.u64(c);
                w.u64(body.entries.size());
                for (const auto& e : body.entries) {
                    w.u64(e.node);
                    w.label_set(e.labels);
                    w.i64(e.labeled_at);
                }
            } else if constexpr (std::is_same_v<T, Hello>) {
                w.u8(body.version);
                w.u16(body.sender);
                w.u16(body.k);
                w.u8(body.strategy);
                w.u8(body.tie_break);
                w.u64(body.max_supersteps);
                w.u8(body.suppress);
                w.u64(body.fingerprint);
            }
        },
        m);
    std::size_t payload_len = frame.size() - 5;
    if (payload_len > 0xffffffffull) throw ProtocolError("message payload too large");
    for (int i = 0; i < 4; ++i)
        frame[i] = static_cast<std::uint8_t>(payload_len >> (24 - 8 * i));
    return frame;
}

Message decode_payload(std::uint8_t tag, std::span<const std::uint8_t> payload) {
    Reader r(payload);
    Message m;
    switch (tag) {
        case 1: m = decode_load_partition(r); break;
        case 2: m = StartSuperstep{r.u32()}; break;
        case 3: {
            LabelBroadcast b;
            b.dest = r.u64();
            b.source = r.u64();
            b.labels = r.label_set();
            b.weight = r.f64();
            if (b.labels.empty()) throw ProtocolError("LabelBroadcast with empty label set");
            if (!std::isfinite(b.weight) || b.weight <= 0.0)
                throw ProtocolError("LabelBroadcast with non-positive weight");
            m = std::move(b);
            break;
        }
        case 4: {
            BroadcastsDone b;
            b.t = r.u32();
            b.source_part = r.u16();
            m = b;
            break;
        }
        case 5: {
            SuperstepDone d;
            d.t = r.u32();
            d.changed = r.u64();
            d.unlabeled = r.u64();
            m = d;
            break;
        }
        case 6: {
            std::uint8_t reason = r.u8();
            if (reason > 2) throw ProtocolError("unknown halt reason");
            m = Halt{static_cast<HaltReason>(reason)};
            break;
        }
        case 7: {
            SliceTransfer s;
            s.part = r.u16();
            s.w2w_sent_total = r.u64();
            std::uint32_t steps = r.u32();
            for (std::uint32_t i = 0; i < steps; ++i) s.w2w_sent_per_superstep.push_back(r.u64());
            std::uint64_t count = r.u64();
            s.entries.reserve(count);
            for (std::uint64_t i = 0; i < count; ++i) {
                SliceEntry e;
                e.node = r.u64();
                e.labels = r.label_set();
                e.labeled_at = r.i64();
                s.entries.push_back(std::move(e));
            }
            m = std::move(s);
            break;
        }
        case 8: {
            Hello h;
            h.version = r.u8();
            h.sender = r.u16();
            h.k = r.u16();
            h.strategy = r.u8();
            h.tie_break = r.u8();
            h.max_supersteps = r.u64();
            h.suppress = r.u8();
            h.fingerprint = r.u64();
            m = h;
            break;
        }
        default:
            throw ProtocolError("unknown message tag " + std::to_string(tag));
    }
    r.expect_end();
    return m;
}

Message decode_frame(std::span<const std::uint8_t> frame) {
    if (frame.size() < 5) throw ProtocolError("frame shorter than header");
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | frame[i];
    if (frame.size() != 5 + static_cast<std::size_t>(len))
        throw ProtocolError("frame length mismatch");
    return decode_payload(frame[4], frame.subspan(5));
}

std::uint64_t config_fingerprint(const Hello& h) {
    std::uint8_t bytes[14];
    bytes[0] = h.version;
    bytes[1] = static_cast<std::uint8_t>(h.k >> 8);
    bytes[2] = static_cast<std::uint8_t>(h.k);
    bytes[3] = h.strategy;
    bytes[4] = h.tie_break;
    for (int i = 0; i < 8; ++i)
        bytes[5 + i] = static_cast<std::uint8_t>(h.max_supersteps >> (56 - 8 * i));
    bytes[13] = h.suppress;
    return fnv1a64({reinterpret_cast<const char*>(bytes), sizeof bytes});
}

Hello make_hello(std::uint16_t sender, std::uint16_t k, Strategy strategy,
                 const PropagationConfig& config, bool suppress) {
    Hello h;
    h.version = kProtocolVersion;
    h.sender = sender;
    h.k = k;
    h.strategy = static_cast<std::uint8_t>(strategy);
    h.tie_break = static_cast<std::uint8_t>(config.tie_break);
    h.max_supersteps = config.max_supersteps;
    h.suppress = suppress ? 1 : 0;
    h.fingerprint = config_fingerprint(h);
    return h;
}

}  // namespace labelprop
