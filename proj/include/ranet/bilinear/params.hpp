#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "ranet/errors.hpp"

namespace ranet::bilinear {

// --- modular arithmetic on 64-bit operands -------------------------------

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline unsigned bit_length(std::uint64_t v) {
    unsigned bits = 0;
    while (v > 0) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

inline std::size_t byte_width(std::uint64_t v) {
    const unsigned bits = bit_length(v);
    return bits == 0 ? 1 : (bits + 7) / 8;
}

// Smallest h >= 2 whose power h^((p-1)/q) generates the order-q subgroup.
inline std::uint64_t find_subgroup_generator(std::uint64_t p, std::uint64_t q) {
    const std::uint64_t cofactor = (p - 1) / q;
    for (std::uint64_t h = 2; h < p; ++h) {
        const std::uint64_t g = pow_mod(h, cofactor, p);
        if (g != 1) return g;
    }
    throw ConfigError("no order-" + std::to_string(q) + " subgroup generator mod " + std::to_string(p));
}

// --- group parameters ------------------------------------------------------

enum class Backend { Exponent, External };

inline std::string backend_name(Backend b) {
    return b == Backend::Exponent ? "exponent" : "external";
}

inline Backend backend_from_name(std::string_view name) {
    if (name == "exponent") return Backend::Exponent;
    if (name == "external") return Backend::External;
    throw ConfigError("unknown backend '" + std::string(name) + "'");
}

// The bilinear setting: two cyclic groups of prime order q with a pairing
// into the order-q subgroup of Z_p^*, plus the nominal message block size n.
// The exponent backend stores G elements as their discrete logs base P, so
// it is cryptographically void but algebraically exact; it exists so every
// identity of the scheme can be brute-force checked at small q.
struct GroupParams {
    std::uint64_t q = 101;
    std::uint64_t p = 607;
    std::uint64_t g = 64;
    unsigned n = 128;
    Backend backend = Backend::Exponent;

    // Fingerprint used to detect elements mixed across group instances.
    std::uint64_t tag() const {
        std::uint64_t h = 1469598103934665603ULL; // FNV-1a
        for (std::uint64_t v : {q, p, g, static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(backend)}) {
            for (int i = 0; i < 8; ++i) {
                h ^= (v >> (8 * i)) & 0xff;
                h *= 1099511628211ULL;
            }
        }
        return h;
    }

    std::size_t scalar_width() const { return byte_width(q - 1); }
    std::size_t v_width() const { return byte_width(p - 1); }

    void validate() const {
        if (backend == Backend::External) {
            throw UnsupportedBackendError("the external pairing backend is a reserved slot; "
                                          "only the exponent backend is built in");
        }
        if (q >= (1ULL << 63) || p >= (1ULL << 63)) {
            throw ConfigError("q and p must fit in 63 bits");
        }
        if (!is_prime(q)) throw ConfigError("q is not prime");
        if (!is_prime(p)) throw ConfigError("p is not prime");
        if ((p - 1) % q != 0) throw ConfigError("q does not divide p-1");
        if (g <= 1 || g >= p) throw ConfigError("g out of range");
        if (pow_mod(g, q, p) != 1) throw ConfigError("g does not have order q mod p");
        if (n < 8) throw ConfigError("n must be at least 8");
    }
};

inline GroupParams default_params() {
    return GroupParams{};
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::uint64_t parse_u64(const std::string& text, const std::string& field) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(text, &pos, 10);
        if (pos != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad value for '" + field + "': " + text);
    }
}

} // namespace detail

// Plain-text key-value config: one `key = value` per line, '#' comments.
// Recognized keys: q, p, g, n, backend, hash. Unset keys keep defaults.
inline GroupParams parse_params_config(std::istream& in) {
    GroupParams params;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        const std::string stripped = detail::trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value', got: " + stripped);
        }
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));
        if (key == "q") {
            params.q = detail::parse_u64(value, key);
        } else if (key == "p") {
            params.p = detail::parse_u64(value, key);
        } else if (key == "g") {
            params.g = detail::parse_u64(value, key);
        } else if (key == "n") {
            params.n = static_cast<unsigned>(detail::parse_u64(value, key));
        } else if (key == "backend") {
            params.backend = backend_from_name(value);
        } else if (key == "hash") {
            if (value != "sha256") {
                throw ConfigError("unknown hash '" + value + "' (only sha256 is built in)");
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    params.validate();
    return params;
}

inline GroupParams load_params_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open params file: " + path);
    return parse_params_config(in);
}

} // namespace ranet::bilinear
