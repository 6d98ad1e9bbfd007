#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace bp {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_tag(const std::string& tag) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic random stream. Same seed, same draw sequence;
/// split() derives independent child streams for parallel samples.
struct RngState {
    uint64_t seed = 0;
    std::mt19937_64 gen;

    RngState() : RngState(0) {}
    explicit RngState(uint64_t s) : seed(s), gen(splitmix64(s)) {}

    RngState split(uint64_t index) const { return RngState(splitmix64(seed ^ splitmix64(index + 0x51ed2701))); }
    RngState split(const std::string& tag) const { return RngState(splitmix64(seed ^ hash_tag(tag))); }

    /// Uniform in [0,1).
    double uniform() {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

  private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bp
