#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "labelprop/message.hpp"

namespace labelprop {

// A received message with the part id of its sender (kMasterPart for the
// master). An empty msg marks a closed link.
struct Envelope {
    std::uint16_t from = 0;
    std::optional<Message> msg;
};

// Message-passing endpoint shared by the master and every worker. dest is a
// part id or kMasterPart. recv blocks; it throws TransportError on timeout
// or when a link closed (a peer died).
class Comm {
public:
    virtual ~Comm() = default;
    virtual void send(std::uint16_t dest, Message m) = 0;
    virtual Envelope recv(std::chrono::milliseconds timeout) = 0;
};

constexpr std::chrono::milliseconds kDefaultRecvTimeout{300000};

// Unbounded MPSC queue with close semantics: queued envelopes drain before
// a close is reported.
class Mailbox {
public:
    void push(Envelope e);
    void close();
    // nullopt = timeout; throws TransportError once closed and drained.
    std::optional<Envelope> pop(std::chrono::milliseconds timeout);

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<Envelope> queue_;
    bool closed_ = false;
};

// Full mesh of mailboxes inside one process: k worker endpoints plus the
// master endpoint. poison() closes every mailbox so all parties unblock
// when one of them fails.
class InprocNet {
public:
    explicit InprocNet(std::uint16_t k);

    Comm& endpoint(std::uint16_t id);  // worker part id or kMasterPart
    void poison(const std::string& why);
    std::string fault() const;

private:
    class Endpoint;
    Mailbox& mailbox_of(std::uint16_t id);

    std::vector<std::unique_ptr<Endpoint>> endpoints_;
    mutable std::mutex fault_mu_;
    std::string fault_;
};

// --- TCP ---

// RAII socket with exact-length reads and writes.
class TcpSocket {
public:
    TcpSocket() = default;
    explicit TcpSocket(int fd) : fd_(fd) {}
    ~TcpSocket();
    TcpSocket(TcpSocket&& other) noexcept;
    TcpSocket& operator=(TcpSocket&& other) noexcept;
    TcpSocket(const TcpSocket&) = delete;
    TcpSocket& operator=(const TcpSocket&) = delete;

    static TcpSocket connect_to(const std::string& host_port);
    void send_all(const std::uint8_t* data, std::size_t len);
    // false = clean EOF before any byte; throws on mid-message EOF or error.
    bool recv_exact(std::uint8_t* data, std::size_t len);
    void shutdown_both();
    int fd() const { return fd_; }
    bool valid() const { return fd_ >= 0; }

private:
    int fd_ = -1;
};

class TcpListener {
public:
    // host_port may use port 0; the bound address is then reported by
    // address().
    explicit TcpListener(const std::string& host_port);
    ~TcpListener();
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    TcpSocket accept_one();
    const std::string& address() const { return address_; }

private:
    int fd_ = -1;
    std::string address_;
};

void send_message(TcpSocket& sock, const Message& m);
// nullopt = clean EOF between frames.
std::optional<Message> recv_message(TcpSocket& sock);

// Comm over a set of framed TCP links; one reader thread per link feeds a
// shared inbox.
class TcpComm : public Comm {
public:
    TcpComm() = default;
    ~TcpComm() override;

    void add_link(std::uint16_t peer, TcpSocket sock);
    void start();  // spawn reader threads; links are fixed afterwards

    void send(std::uint16_t dest, Message m) override;
    Envelope recv(std::chrono::milliseconds timeout) override;

private:
    struct Link {
        std::uint16_t peer;
        TcpSocket sock;
        std::mutex write_mu;
    };
    std::vector<std::unique_ptr<Link>> links_;
    std::vector<std::thread> readers_;
    Mailbox inbox_;
    bool started_ = false;
};

}  // namespace labelprop
