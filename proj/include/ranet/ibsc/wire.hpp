#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ranet/ibsc/signcrypt.hpp"

namespace ranet::ibsc {

// Wire format for a transported signcryptext:
//   id_len (2 bytes BE) || sender id || T || U || c (all remaining bytes),
// with T and U in the group's fixed-width serialization.
struct DecodedSigma {
    Bytes sender_id;
    Signcryptext sigma;
};

inline Bytes encode_sigma(const BilinearGroup& group, const Bytes& sender_id,
                          const Signcryptext& sigma) {
    if (sender_id.size() > 0xffff) {
        throw InvalidIdentityError("sender id longer than 65535 bytes");
    }
    Bytes out;
    append_be(out, sender_id.size(), 2);
    append(out, sender_id);
    append(out, group.serialize(sigma.t));
    append(out, group.serialize(sigma.u));
    append(out, sigma.c);
    return out;
}

// Structural decode; anything undecodable yields nullopt (the caller maps
// that to the MalformedSigma rejection).
inline std::optional<DecodedSigma> decode_sigma(const BilinearGroup& group, const Bytes& wire) {
    const std::size_t gw = group.params().scalar_width();
    if (wire.size() < 2) return std::nullopt;
    const std::size_t id_len = static_cast<std::size_t>(read_be(wire, 0, 2));
    if (wire.size() < 2 + id_len + 2 * gw) return std::nullopt;
    DecodedSigma out;
    out.sender_id.assign(wire.begin() + 2, wire.begin() + 2 + id_len);
    try {
        out.sigma.t = group.parse_g(Bytes(wire.begin() + 2 + id_len, wire.begin() + 2 + id_len + gw));
        out.sigma.u = group.parse_g(Bytes(wire.begin() + 2 + id_len + gw,
                                          wire.begin() + 2 + id_len + 2 * gw));
    } catch (const InvalidArgumentError&) {
        return std::nullopt;
    }
    out.sigma.c.assign(wire.begin() + 2 + id_len + 2 * gw, wire.end());
    return out;
}

// Unsigncrypt straight off the wire bytes.
inline UnsigncryptOutcome unsigncrypt_wire(const BilinearGroup& group,
                                           const IdentityKeyPair& receiver, const Bytes& wire,
                                           GElement master_public) {
    const auto decoded = decode_sigma(group, wire);
    if (!decoded) {
        return UnsigncryptOutcome::reject(RejectReason::MalformedSigma);
    }
    return unsigncrypt(group, receiver, decoded->sender_id, decoded->sigma, master_public);
}

// --- golden vector files ----------------------------------------------------
// One vector per line, seven hex fields separated by single spaces:
//   seed  id_a  id_b  m  c  T  U
// seed is an 8-byte big-endian value; the rest are raw byte strings.

struct GoldenVector {
    std::uint64_t seed = 0;
    Bytes id_a;
    Bytes id_b;
    Bytes m;
    Bytes c;
    Bytes t;
    Bytes u;
};

inline std::string format_golden_vector(const GoldenVector& v) {
    Bytes seed_bytes;
    append_be(seed_bytes, v.seed, 8);
    return hex_encode(seed_bytes) + " " + hex_encode(v.id_a) + " " + hex_encode(v.id_b) + " " +
           hex_encode(v.m) + " " + hex_encode(v.c) + " " + hex_encode(v.t) + " " + hex_encode(v.u);
}

inline std::vector<GoldenVector> read_golden_vectors(std::istream& in) {
    std::vector<GoldenVector> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (start <= line.size()) {
            const std::size_t sp = line.find(' ', start);
            if (sp == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, sp - start));
            start = sp + 1;
        }
        if (fields.size() != 7) {
            throw ConfigError("golden vector line must have 7 fields");
        }
        GoldenVector v;
        v.seed = read_be(hex_decode(fields[0]), 0, 8);
        v.id_a = hex_decode(fields[1]);
        v.id_b = hex_decode(fields[2]);
        v.m = hex_decode(fields[3]);
        v.c = hex_decode(fields[4]);
        v.t = hex_decode(fields[5]);
        v.u = hex_decode(fields[6]);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace ranet::ibsc
