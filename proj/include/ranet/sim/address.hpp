#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ranet/errors.hpp"

namespace ranet::sim {

using Address = std::uint32_t;

inline std::string format_ipv4(Address a) {
    return std::to_string((a >> 24) & 0xff) + "." + std::to_string((a >> 16) & 0xff) + "." +
           std::to_string((a >> 8) & 0xff) + "." + std::to_string(a & 0xff);
}

inline Address parse_ipv4(const std::string& text) {
    Address out = 0;
    int octets = 0;
    std::size_t start = 0;
    while (octets < 4) {
        const std::size_t dot = text.find('.', start);
        const std::string part =
            dot == std::string::npos ? text.substr(start) : text.substr(start, dot - start);
        if (part.empty() || part.size() > 3) throw ConfigError("bad IPv4 address: " + text);
        int value = 0;
        for (char c : part) {
            if (c < '0' || c > '9') throw ConfigError("bad IPv4 address: " + text);
            value = value * 10 + (c - '0');
        }
        if (value > 255) throw ConfigError("bad IPv4 address: " + text);
        out = (out << 8) | static_cast<Address>(value);
        ++octets;
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    if (octets != 4) throw ConfigError("bad IPv4 address: " + text);
    return out;
}

enum class AddressKind { NodeInterface, EndDevice };

// DHCP-style allocator over one class-B network: 65536 host offsets, of
// which offset 0 is the base station and 0xffff the broadcast address, so
// 65534 are allocatable. A low contiguous range is reserved for robot node
// interfaces; end devices draw from the remainder. First-fit, no release
// (nodes never leave in this model).
class AddressPool {
public:
    static constexpr std::uint32_t kCapacity = 65534;

    explicit AddressPool(Address network_base = parse_ipv4("172.16.0.0"),
                         std::uint32_t reserved_node_count = 512)
        : base_(network_base & 0xffff0000u), reserved_(reserved_node_count) {
        if (reserved_ < 1 || reserved_ >= kCapacity) {
            throw ConfigError("reserved node range must be within the allocatable space");
        }
        next_node_ = 1;
        next_device_ = reserved_ + 1;
    }

    Address base_station_address() const { return base_; }
    Address broadcast_address() const { return base_ | 0xffffu; }
    std::uint32_t capacity() const { return kCapacity; }
    std::uint32_t allocated_count() const { return static_cast<std::uint32_t>(allocations_.size()); }

    Address allocate(const std::string& owner, AddressKind kind) {
        std::uint32_t offset;
        if (kind == AddressKind::NodeInterface) {
            if (next_node_ > reserved_) {
                throw PoolExhaustedError("node interface range exhausted");
            }
            offset = next_node_++;
        } else {
            if (next_device_ > kCapacity) {
                throw PoolExhaustedError("end device range exhausted");
            }
            offset = next_device_++;
        }
        const Address addr = base_ | offset;
        allocations_.emplace(addr, owner);
        return addr;
    }

    bool is_allocated(Address a) const { return allocations_.count(a) != 0; }

    const std::map<Address, std::string>& allocations() const { return allocations_; }

    // Every allocation must be inside (base, broadcast) and owned once.
    bool check_invariants() const {
        for (const auto& [addr, owner] : allocations_) {
            if (addr == base_station_address() || addr == broadcast_address()) return false;
            if ((addr & 0xffff0000u) != base_) return false;
            (void)owner;
        }
        return true;
    }

private:
    Address base_;
    std::uint32_t reserved_;
    std::uint32_t next_node_ = 1;
    std::uint32_t next_device_ = 1;
    std::map<Address, std::string> allocations_;
};

} // namespace ranet::sim
