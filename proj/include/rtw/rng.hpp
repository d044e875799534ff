#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace rtw {

// splitmix64: the single PRNG family used by every seeded routine in this
// library. State advances by the golden-ratio increment; output is the
// finalizer of Steele, Lea and Flood. One seed determines the whole stream.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased draw from {0,...,n-1} by rejection.
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; consumes exactly two draws per call so
    // the stream position stays a pure function of the call count.
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 0x1.0p-100) u1 = 0x1.0p-100;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace rtw
