// dtcsim — digital twin channel link-level simulator
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace dtcsim {

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ull;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic random stream. All draws go through explicit, portable
/// transforms (no std::*_distribution) so a given seed yields the same
/// byte-for-byte sequence on every run of the same build.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // modulo bias is irrelevant at the sizes used here (n << 2^64)
        return engine_() % n;
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Domain-separated child stream: one root seed fans out into independent
/// streams keyed by a domain label and up to three integer ids.
inline RandomStream child_stream(std::uint64_t root, std::string_view domain,
                                 std::uint64_t a = 0, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(root ^ fnv1a64(domain));
    s = splitmix64(s ^ (a + 0x9e3779b97f4a7c15ull));
    s = splitmix64(s ^ (b + 0x7f4a7c159e3779b9ull));
    s = splitmix64(s ^ (c + 0x159e3779b97f4a7cull));
    return RandomStream(s);
}

}  // namespace dtcsim
