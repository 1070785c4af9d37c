#pragma once

#include <cstdint>
#include <optional>

#include "ranet/bilinear/hash.hpp"
#include "ranet/bilinear/params.hpp"
#include "ranet/bilinear/rng.hpp"
#include "ranet/bytes.hpp"
#include "ranet/errors.hpp"

namespace ranet::bilinear {

// Elements are immutable values tagged with their group's fingerprint.
// Construct them through a BilinearGroup; the tag is how mixed-parameter
// operations get caught.

// Element of (G, +). The exponent backend stores a*P as the exponent a,
// reduced mod q: identity is 0, the generator P is 1.
struct GElement {
    std::uint64_t value = 0;
    std::uint64_t group = 0;

    friend bool operator==(const GElement&, const GElement&) = default;
};

// Element of (V, *): a member of the order-q subgroup of Z_p^*.
struct VElement {
    std::uint64_t value = 1;
    std::uint64_t group = 0;

    friend bool operator==(const VElement&, const VElement&) = default;
};

// Element of Z_q. Contexts that demand Z_q^* reject zero explicitly.
struct Scalar {
    std::uint64_t value = 0;
    std::uint64_t group = 0;

    friend bool operator==(const Scalar&, const Scalar&) = default;
};

class BilinearGroup {
public:
    explicit BilinearGroup(GroupParams params = default_params(), HashSuite hashes = HashSuite{})
        : params_(params), hashes_(std::move(hashes)), tag_(params.tag()) {
        params_.validate();
        hashes_.validate();
    }

    const GroupParams& params() const { return params_; }
    const HashSuite& hashes() const { return hashes_; }
    std::uint64_t tag() const { return tag_; }

    // --- element construction ---

    Scalar scalar_from(std::uint64_t v) const { return Scalar{v % params_.q, tag_}; }
    GElement g_from(std::uint64_t v) const { return GElement{v % params_.q, tag_}; }

    GElement g_identity() const { return GElement{0, tag_}; }
    GElement generator() const { return GElement{1, tag_}; } // P

    VElement v_identity() const { return VElement{1, tag_}; }
    VElement v_generator() const { return VElement{params_.g, tag_}; } // e(P, P)

    // --- group law in (G, +) ---

    GElement g_add(GElement a, GElement b) const {
        check(a);
        check(b);
        std::uint64_t sum = a.value + b.value;
        if (sum >= params_.q) sum -= params_.q;
        return GElement{sum, tag_};
    }

    GElement g_neg(GElement a) const {
        check(a);
        return GElement{a.value == 0 ? 0 : params_.q - a.value, tag_};
    }

    GElement g_scalar_mul(Scalar k, GElement a) const {
        check(k);
        check(a);
        return GElement{mul_mod(k.value, a.value, params_.q), tag_};
    }

    // --- the pairing e : G x G -> V ---

    VElement pairing(GElement a, GElement b) const {
        check(a);
        check(b);
        const std::uint64_t exponent = mul_mod(a.value, b.value, params_.q);
        return VElement{pow_mod(params_.g, exponent, params_.p), tag_};
    }

    // --- group law in (V, *) ---

    VElement v_mul(VElement x, VElement y) const {
        check(x);
        check(y);
        return VElement{mul_mod(x.value, y.value, params_.p), tag_};
    }

    VElement v_exp(VElement x, Scalar k) const {
        check(x);
        check(k);
        return VElement{pow_mod(x.value, k.value, params_.p), tag_};
    }

    // --- hash functions ---

    // H1 : {0,1}* -> G*  (hash to scalar, zero rejected, then times P)
    GElement h1(const Bytes& id) const {
        const std::uint64_t d =
            detail::hash_to_nonzero_mod(hashes_, hashes_.h1_domain_tag, id, params_.q);
        return GElement{d, tag_};
    }

    // H2 : {0,1}* -> Z_q^*  over T || m with T fixed-width serialized
    Scalar h2(GElement t, const Bytes& m) const {
        check(t);
        Bytes payload = serialize(t);
        append(payload, m);
        const std::uint64_t d =
            detail::hash_to_nonzero_mod(hashes_, hashes_.h2_domain_tag, payload, params_.q);
        return Scalar{d, tag_};
    }

    // H3 keystream: counter-mode expansion of the serialized V element.
    Bytes h3_expand(VElement y, std::size_t len) const {
        check(y);
        if (len < 1) throw InvalidArgumentError("h3_expand: len must be >= 1");
        Bytes base = hashes_.h3_domain_tag;
        append(base, serialize(y));
        Bytes out;
        out.reserve(len + 32);
        std::uint32_t counter = 0;
        while (out.size() < len) {
            Bytes block_input = base;
            append_be(block_input, counter, 4);
            const Digest block = hashes_.digest(block_input);
            out.insert(out.end(), block.begin(), block.end());
            ++counter;
        }
        out.resize(len);
        return out;
    }

    // Uniform scalar in [1, q).
    Scalar random_scalar(Rng& rng) const {
        return Scalar{1 + rng.uniform_below(params_.q - 1), tag_};
    }

    // --- canonical serialization: fixed-width big-endian ---

    Bytes serialize(Scalar s) const {
        check(s);
        Bytes out;
        append_be(out, s.value, params_.scalar_width());
        return out;
    }

    Bytes serialize(GElement a) const {
        check(a);
        Bytes out;
        append_be(out, a.value, params_.scalar_width());
        return out;
    }

    Bytes serialize(VElement x) const {
        check(x);
        Bytes out;
        append_be(out, x.value, params_.v_width());
        return out;
    }

    Scalar parse_scalar(const Bytes& in) const {
        const std::uint64_t v = parse_fixed(in, params_.scalar_width());
        if (v >= params_.q) throw InvalidArgumentError("scalar out of range");
        return Scalar{v, tag_};
    }

    GElement parse_g(const Bytes& in) const {
        const std::uint64_t v = parse_fixed(in, params_.scalar_width());
        if (v >= params_.q) throw InvalidArgumentError("group element out of range");
        return GElement{v, tag_};
    }

    VElement parse_v(const Bytes& in) const {
        const std::uint64_t v = parse_fixed(in, params_.v_width());
        if (v == 0 || v >= params_.p || pow_mod(v, params_.q, params_.p) != 1) {
            throw InvalidArgumentError("V element not in the order-q subgroup");
        }
        return VElement{v, tag_};
    }

private:
    std::uint64_t parse_fixed(const Bytes& in, std::size_t width) const {
        if (in.size() != width) {
            throw InvalidArgumentError("serialized element has wrong width");
        }
        return read_be(in, 0, width);
    }

    template <typename E>
    void check(const E& e) const {
        if (e.group != tag_) {
            throw ParamMismatchError("element does not belong to this group");
        }
    }

    GroupParams params_;
    HashSuite hashes_;
    std::uint64_t tag_;
};

} // namespace ranet::bilinear
