#pragma once

#include <array>
#include <string>

#include <openssl/evp.h>

#include "ranet/bytes.hpp"
#include "ranet/errors.hpp"

namespace ranet::bilinear {

using Digest = std::array<std::uint8_t, 32>;

inline Digest sha256(const Bytes& data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size()) {
        throw Error("sha256 digest failed");
    }
    return out;
}

// Interpret the 256-bit digest as a big-endian integer mod m.
inline std::uint64_t digest_mod(const Digest& d, std::uint64_t m) {
    unsigned __int128 acc = 0;
    for (std::uint8_t byte : d) {
        acc = ((acc << 8) | byte) % m;
    }
    return static_cast<std::uint64_t>(acc);
}

// Domain-separated digest suite behind H1/H2/H3. The three tags are byte
// prefixes and must be pairwise distinct.
struct HashSuite {
    Bytes h1_domain_tag{0x01};
    Bytes h2_domain_tag{0x02};
    Bytes h3_domain_tag{0x03};
    std::string base_hash = "sha256";

    void validate() const {
        if (h1_domain_tag == h2_domain_tag || h1_domain_tag == h3_domain_tag ||
            h2_domain_tag == h3_domain_tag) {
            throw ConfigError("hash domain tags must be pairwise distinct");
        }
        if (base_hash != "sha256") {
            throw ConfigError("unknown base hash '" + base_hash + "' (only sha256 is built in)");
        }
    }

    Digest digest(const Bytes& tagged_input) const { return sha256(tagged_input); }
};

namespace detail {

// digest(tag || payload), re-hashed with a 4-byte counter suffix while the
// reduction mod m hits zero. Used by the hash-to-scalar constructions.
inline std::uint64_t hash_to_nonzero_mod(const HashSuite& suite, const Bytes& tag,
                                         const Bytes& payload, std::uint64_t m) {
    Bytes input = tag;
    append(input, payload);
    std::uint64_t value = digest_mod(suite.digest(input), m);
    std::uint32_t counter = 0;
    while (value == 0) {
        ++counter;
        Bytes retry = input;
        append_be(retry, counter, 4);
        value = digest_mod(suite.digest(retry), m);
    }
    return value;
}

} // namespace detail

} // namespace ranet::bilinear
