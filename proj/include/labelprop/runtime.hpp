#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "labelprop/graph.hpp"
#include "labelprop/labels.hpp"
#include "labelprop/message.hpp"
#include "labelprop/partition.hpp"
#include "labelprop/propagation.hpp"
#include "labelprop/transport.hpp"

namespace labelprop {

enum class Transport : std::uint8_t { Inproc = 0, Tcp = 1 };

struct DistConfig {
    std::uint16_t k = 1;
    Strategy strategy = Strategy::Hash;
    PropagationConfig prop;
    bool suppress_redundant_broadcasts = false;
};

struct DistStats {
    std::uint64_t edge_cut = 0;
    std::uint64_t w2w_messages = 0;
    std::vector<std::uint64_t> w2w_per_superstep;
};

struct DistResult {
    LabelState labels;
    RunReport report;
    DistStats stats;
};

// Builds the self-contained view worker `part` needs: owned nodes with seed
// labels and adjacency annotated with owning parts.
PartDescriptor make_descriptor(const Graph& graph, const Partitioning& parts,
                               const LabelState& seeds, std::uint16_t part,
                               const DistConfig& config,
                               std::vector<std::string> peer_addrs = {});

// One worker: owns a slice of nodes, speaks only through comm. The
// constructor indexes the descriptor; serve() acknowledges the load and
// processes master messages until Halt, then ships the final slice back.
class Worker {
public:
    Worker(Comm& comm, PartDescriptor descriptor);

    void serve();

    // Routes one data-plane message; exposed so tests can inject traffic.
    // Returns true for a BroadcastsDone matching superstep t.
    bool process_data_message(std::uint32_t t, const Envelope& env);

private:
    struct Incoming {
        std::uint64_t source;
        std::vector<std::string> labels;
        double weight;
    };

    void run_superstep(std::uint32_t t, std::uint64_t& changed, std::uint64_t& unlabeled);
    SliceTransfer make_slice() const;
    std::size_t local_index(std::uint64_t global_id) const;

    Comm& comm_;
    PartDescriptor desc_;
    std::vector<std::uint64_t> owned_ids_;               // ascending
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::int64_t> labeled_at_;
    std::vector<std::vector<Incoming>> pending_contribs_;
    std::vector<Envelope> stash_;  // data-plane messages that arrived early
    std::uint64_t unlabeled_ = 0;
    std::uint64_t w2w_total_ = 0;
    std::vector<std::uint64_t> w2w_per_step_;
};

// Drives k loaded workers through supersteps until a halt condition, then
// assembles the global result from their slices.节点 total_nodes is the
// global node count used for tallies.
DistResult master_loop(Comm& comm, std::vector<PartDescriptor> descriptors,
                       std::size_t total_nodes, const DistConfig& config);

// In-process execution: k worker threads over mailboxes.
DistResult run_distributed_inproc(const Graph& graph, const LabelState& seeds,
                                  const DistConfig& config);

struct TcpClusterOptions {
    // Path of the binary to spawn for `worker --listen`; empty means the
    // caller supplies running workers via worker_addrs.
    std::string worker_exe;
    std::vector<std::string> worker_addrs;
};

// Cross-process execution: spawns (or attaches to) k worker processes and
// runs the master over TCP loopback.
DistResult run_distributed_tcp(const Graph& graph, const LabelState& seeds,
                               const DistConfig& config, const TcpClusterOptions& options);

DistResult run_distributed(const Graph& graph, const LabelState& seeds,
                           const DistConfig& config, Transport transport,
                           const TcpClusterOptions& tcp_options = {});

// Entry point of `worker --listen`: accepts the master, performs the
// handshake, loads a partition, meshes with peers, serves, then waits for
// the master to close. Returns when the run is over.
void serve_tcp_worker(TcpListener& listener);

}  // namespace labelprop
