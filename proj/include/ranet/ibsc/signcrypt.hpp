#pragma once

#include <optional>
#include <utility>

#include "ranet/ibsc/keys.hpp"

namespace ranet::ibsc {

using bilinear::VElement;

// sigma = (c, T, U): ciphertext, ephemeral point x*P, signature r*S_id + W.
struct Signcryptext {
    Bytes c;
    GElement t;
    GElement u;

    friend bool operator==(const Signcryptext&, const Signcryptext&) = default;
};

enum class RejectReason { VerifyFailed, MalformedSigma };

// Either the recovered plaintext or the rejection symbol with a reason.
class UnsigncryptOutcome {
public:
    static UnsigncryptOutcome accept(Bytes plaintext) {
        UnsigncryptOutcome o;
        o.plaintext_ = std::move(plaintext);
        return o;
    }

    static UnsigncryptOutcome reject(RejectReason reason) {
        UnsigncryptOutcome o;
        o.reason_ = reason;
        return o;
    }

    bool ok() const { return plaintext_.has_value(); }
    const Bytes& plaintext() const {
        if (!plaintext_) throw Error("unsigncrypt outcome is a rejection");
        return *plaintext_;
    }
    RejectReason reason() const {
        if (plaintext_) throw Error("unsigncrypt outcome is an acceptance");
        return reason_;
    }

private:
    UnsigncryptOutcome() = default;
    std::optional<Bytes> plaintext_;
    RejectReason reason_ = RejectReason::VerifyFailed;
};

inline Signcryptext signcrypt(const BilinearGroup& group, const IdentityKeyPair& sender,
                              const Bytes& receiver_id, const Bytes& m,
                              GElement master_public, Rng& rng) {
    if (m.empty()) {
        throw InvalidMessageError("signcrypt: message must be non-empty");
    }
    const GElement q_rb = group.h1(receiver_id);
    const Scalar x = group.random_scalar(rng);
    const GElement t = group.g_scalar_mul(x, group.generator());
    const Scalar r = group.h2(t, m);
    const GElement w = group.g_scalar_mul(x, master_public);
    const GElement u = group.g_add(group.g_scalar_mul(r, sender.s_id), w);
    const VElement y = group.pairing(w, q_rb);
    const Bytes k = group.h3_expand(y, m.size());
    return Signcryptext{xor_bytes(k, m), t, u};
}

inline UnsigncryptOutcome unsigncrypt(const BilinearGroup& group, const IdentityKeyPair& receiver,
                                      const Bytes& sender_id, const Signcryptext& sigma,
                                      GElement master_public) {
    if (sigma.c.empty()) {
        return UnsigncryptOutcome::reject(RejectReason::MalformedSigma);
    }
    const GElement q_ra = group.h1(sender_id);
    const VElement y = group.pairing(receiver.s_id, sigma.t);
    const Bytes k = group.h3_expand(y, sigma.c.size());
    const Bytes m = xor_bytes(k, sigma.c);
    const Scalar r = group.h2(sigma.t, m);

    // e(U, P) == e(Q_ra, P_pub)^r * e(T, P_pub)
    const VElement lhs = group.pairing(sigma.u, group.generator());
    const VElement rhs = group.v_mul(group.v_exp(group.pairing(q_ra, master_public), r),
                                     group.pairing(sigma.t, master_public));
    if (lhs != rhs) {
        return UnsigncryptOutcome::reject(RejectReason::VerifyFailed);
    }
    return UnsigncryptOutcome::accept(m);
}

} // namespace ranet::ibsc
