#include "labelprop/transport.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "labelprop/common.hpp"

namespace labelprop {

// --- Mailbox ---

void Mailbox::push(Envelope e) {
    {
        std::lock_guard lock(mu_);
        queue_.push_back(std::move(e));
    }
    cv_.notify_one();
}

void Mailbox::close() {
    {
        std::lock_guard lock(mu_);
        closed_ = true;
    }
    cv_.notify_all();
}

std::optional<Envelope> Mailbox::pop(std::chrono::milliseconds timeout) {
    std::unique_lock lock(mu_);
    if (!cv_.wait_for(lock, timeout, [&] { return !queue_.empty() || closed_; }))
        return std::nullopt;
    if (queue_.empty()) throw TransportError("channel closed");
    Envelope e = std::move(queue_.front());
    queue_.pop_front();
    return e;
}

// --- InprocNet ---

class InprocNet::Endpoint : public Comm {
public:
    Endpoint(InprocNet& net, std::uint16_t id) : net_(net), id_(id) {}

    void send(std::uint16_t dest, Message m) override {
        net_.mailbox_of(dest).push({id_, std::move(m)});
    }

    Envelope recv(std::chrono::milliseconds timeout) override {
        auto e = inbox_.pop(timeout);
        if (!e) throw TransportError("recv timed out");
        return std::move(*e);
    }

    Mailbox& inbox() { return inbox_; }

private:
    InprocNet& net_;
    std::uint16_t id_;
    Mailbox inbox_;
};

InprocNet::InprocNet(std::uint16_t k) {
    endpoints_.reserve(static_cast<std::size_t>(k) + 1);
    for (std::uint16_t p = 0; p < k; ++p)
        endpoints_.push_back(std::make_unique<Endpoint>(*this, p));
    endpoints_.push_back(std::make_unique<Endpoint>(*this, kMasterPart));
}

Comm& InprocNet::endpoint(std::uint16_t id) {
    return id == kMasterPart ? *endpoints_.back() : *endpoints_[id];
}

Mailbox& InprocNet::mailbox_of(std::uint16_t id) {
    auto& ep = id == kMasterPart ? *endpoints_.back() : *endpoints_[id];
    return static_cast<Endpoint&>(ep).inbox();
}

void InprocNet::poison(const std::string& why) {
    {
        std::lock_guard lock(fault_mu_);
        if (fault_.empty()) fault_ = why;
    }
    for (auto& ep : endpoints_) ep->inbox().close();
}

std::string InprocNet::fault() const {
    std::lock_guard lock(fault_mu_);
    return fault_;
}

// --- TCP sockets ---

namespace {

[[noreturn]] void throw_errno(const std::string& what) {
    throw TransportError(what + ": " + std::strerror(errno));
}

struct ParsedAddr {
    std::string host;
    std::uint16_t port;
};

ParsedAddr parse_host_port(const std::string& host_port) {
    std::size_t colon = host_port.rfind(':');
    if (colon == std::string::npos)
        throw TransportError("address \"" + host_port + "\" is not host:port");
    ParsedAddr a;
    a.host = host_port.substr(0, colon);
    unsigned long port = std::strtoul(host_port.c_str() + colon + 1, nullptr, 10);
    if (port > 0xffff) throw TransportError("bad port in \"" + host_port + "\"");
    a.port = static_cast<std::uint16_t>(port);
    return a;
}

sockaddr_in make_sockaddr(const ParsedAddr& a) {
    sockaddr_in sa{};
    sa.sin_family = AF_INET;
    sa.sin_port = htons(a.port);
    if (::inet_pton(AF_INET, a.host.c_str(), &sa.sin_addr) != 1)
        throw TransportError("cannot parse IPv4 address \"" + a.host + "\"");
    return sa;
}

void set_nodelay(int fd) {
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
}

}  // namespace

TcpSocket::~TcpSocket() {
    if (fd_ >= 0) ::close(fd_);
}

TcpSocket::TcpSocket(TcpSocket&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }

TcpSocket& TcpSocket::operator=(TcpSocket&& other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) ::close(fd_);
        fd_ = other.fd_;
        other.fd_ = -1;
    }
    return *this;
}

TcpSocket TcpSocket::connect_to(const std::string& host_port) {
    auto sa = make_sockaddr(parse_host_port(host_port));
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw_errno("socket");
    if (::connect(fd, reinterpret_cast<sockaddr*>(&sa), sizeof sa) != 0) {
        int saved = errno;
        ::close(fd);
        errno = saved;
        throw_errno("connect to " + host_port);
    }
    set_nodelay(fd);
    return TcpSocket(fd);
}

void TcpSocket::send_all(const std::uint8_t* data, std::size_t len) {
    while (len > 0) {
        ssize_t n = ::send(fd_, data, len, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_errno("send");
        }
        data += n;
        len -= static_cast<std::size_t>(n);
    }
}

bool TcpSocket::recv_exact(std::uint8_t* data, std::size_t len) {
    std::size_t got = 0;
    while (got < len) {
        ssize_t n = ::recv(fd_, data + got, len - got, 0);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_errno("recv");
        }
        if (n == 0) {
            if (got == 0) return false;
            throw TransportError("connection closed mid-message");
        }
        got += static_cast<std::size_t>(n);
    }
    return true;
}

void TcpSocket::shutdown_both() {
    if (fd_ >= 0) ::shutdown(fd_, SHUT_RDWR);
}

TcpListener::TcpListener(const std::string& host_port) {
    auto parsed = parse_host_port(host_port);
    auto sa = make_sockaddr(parsed);
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) throw_errno("socket");
    int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&sa), sizeof sa) != 0) {
        int saved = errno;
        ::close(fd_);
        fd_ = -1;
        errno = saved;
        throw_errno("bind " + host_port);
    }
    if (::listen(fd_, 64) != 0) throw_errno("listen");
    sockaddr_in bound{};
    socklen_t len = sizeof bound;
    if (::getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len) != 0)
        throw_errno("getsockname");
    char buf[INET_ADDRSTRLEN];
    ::inet_ntop(AF_INET, &bound.sin_addr, buf, sizeof buf);
    address_ = std::string(buf) + ":" + std::to_string(ntohs(bound.sin_port));
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

TcpSocket TcpListener::accept_one() {
    while (true) {
        int fd = ::accept(fd_, nullptr, nullptr);
        if (fd < 0) {
            if (errno == EINTR) continue;
            throw_errno("accept");
        }
        set_nodelay(fd);
        return TcpSocket(fd);
    }
}

void send_message(TcpSocket& sock, const Message& m) {
    auto frame = encode_message(m);
    sock.send_all(frame.data(), frame.size());
}

std::optional<Message> recv_message(TcpSocket& sock) {
    std::uint8_t header[5];
    if (!sock.recv_exact(header, 4)) return std::nullopt;
    if (!sock.recv_exact(header + 4, 1))
        throw TransportError("connection closed mid-message");
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | header[i];
    if (len > (1u << 30)) throw ProtocolError("frame length " + std::to_string(len) + " too large");
    std::vector<std::uint8_t> payload(len);
    if (len > 0 && !sock.recv_exact(payload.data(), len))
        throw TransportError("connection closed mid-message");
    return decode_payload(header[4], payload);
}

// --- TcpComm ---

TcpComm::~TcpComm() {
    for (auto& link : links_) link->sock.shutdown_both();
    for (auto& t : readers_)
        if (t.joinable()) t.join();
}

void TcpComm::add_link(std::uint16_t peer, TcpSocket sock) {
    if (started_) throw ContractError("add_link after start");
    auto link = std::make_unique<Link>();
    link->peer = peer;
    link->sock = std::move(sock);
    links_.push_back(std::move(link));
}

void TcpComm::start() {
    started_ = true;
    for (auto& link : links_) {
        readers_.emplace_back([this, l = link.get()] {
            try {
                while (true) {
                    auto m = recv_message(l->sock);
                    if (!m) break;  // clean EOF
                    inbox_.push({l->peer, std::move(*m)});
                }
            } catch (const std::exception&) {
                // fall through to the closed-link marker
            }
            inbox_.push({l->peer, std::nullopt});
        });
    }
}

void TcpComm::send(std::uint16_t dest, Message m) {
    for (auto& link : links_) {
        if (link->peer == dest) {
            auto frame = encode_message(m);
            std::lock_guard lock(link->write_mu);
            link->sock.send_all(frame.data(), frame.size());
            return;
        }
    }
    throw TransportError("no link to peer " + std::to_string(dest));
}

Envelope TcpComm::recv(std::chrono::milliseconds timeout) {
    auto e = inbox_.pop(timeout);
    if (!e) throw TransportError("recv timed out");
    if (!e->msg) throw TransportError("peer " + std::to_string(e->from) + " disconnected");
    return std::move(*e);
}

}  // namespace labelprop
