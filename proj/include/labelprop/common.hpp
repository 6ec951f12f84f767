#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace labelprop {

// Error taxonomy. The CLI maps these onto process exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FNV-1a, 64 bit. Fixed here so hash partitions are identical across
// platforms and runs.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t seed = 14695981039346656037ull) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Shortest decimal form that reparses to the same double. Integral values
// print without a fractional part so edge-list files stay tidy.
std::string format_weight(double w);

}  // namespace labelprop
