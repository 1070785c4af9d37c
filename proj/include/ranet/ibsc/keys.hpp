#pragma once

#include "ranet/bilinear/group.hpp"
#include "ranet/bytes.hpp"
#include "ranet/errors.hpp"

namespace ranet::ibsc {

using bilinear::BilinearGroup;
using bilinear::GElement;
using bilinear::Rng;
using bilinear::Scalar;

// Base-station key material. The random scalar is the master secret and
// secret * P is the master public key; every pairing in the scheme takes
// the public element.
struct MasterKeyPair {
    Scalar master_secret;
    GElement master_public;
};

// A robot's identity keys: Q_id = H1(id), S_id = master_secret * Q_id.
struct IdentityKeyPair {
    Bytes id;
    GElement q_id;
    GElement s_id;
};

inline MasterKeyPair setup(const BilinearGroup& group, Rng& rng) {
    const Scalar secret = group.random_scalar(rng);
    return MasterKeyPair{secret, group.g_scalar_mul(secret, group.generator())};
}

inline IdentityKeyPair extract(const BilinearGroup& group, const MasterKeyPair& master,
                               const Bytes& id) {
    if (id.empty()) {
        throw InvalidIdentityError("extract: identity must be non-empty");
    }
    const GElement q_id = group.h1(id);
    return IdentityKeyPair{id, q_id, group.g_scalar_mul(master.master_secret, q_id)};
}

// Test oracle for the identity e(x*P_pub, Q_rb) == e(S_rb, x*P) that makes
// unsigncryption recover the sender's keystream.
inline bool pairing_consistency_check(const BilinearGroup& group, const MasterKeyPair& master,
                                      const IdentityKeyPair& receiver, Scalar x) {
    if (x.value == 0) {
        throw InvalidArgumentError("pairing_consistency_check: x must be in Z_q^*");
    }
    const GElement w = group.g_scalar_mul(x, master.master_public);
    const GElement t = group.g_scalar_mul(x, group.generator());
    return group.pairing(w, receiver.q_id) == group.pairing(receiver.s_id, t);
}

} // namespace ranet::ibsc
