#ifndef METAMED_RNG_HPP
#define METAMED_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace metamed {

/// Seedable xoshiro256++ stream with counter-based splitting.
///
/// Substreams are derived from (seed, path) with a splitmix64 mix, so a
/// simulation can hand independent streams to workers in any order and still
/// produce bit-identical results for a given master seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) { seed_state(seed); }

    /// Independent stream identified by a path of indices under a master seed,
    /// e.g. substream(seed, {cell_id, rep}).
    static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t h = seed;
        for (std::uint64_t p : path) {
            h = splitmix64(h ^ (p + 0x9e3779b97f4a7c15ULL));
        }
        return Rng(h);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1); safe for inverse-CDF transforms.
    double uniform_open() {
        // (k + 0.5) / 2^53 lies strictly inside (0, 1).
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Integer uniform on {lo, ..., hi} inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        // Multiply-shift bounded draw; bias is < 2^-64, irrelevant here.
        const unsigned __int128 m =
            static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(span);
        return lo + static_cast<std::uint64_t>(m >> 64);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    void seed_state(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : s_) {
            x = splitmix64(x);
            s = x;
        }
        // All-zero state is invalid for xoshiro; splitmix64 cannot emit four
        // zeros in a row, but keep the guard explicit.
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t s_[4];
};

}  // namespace metamed

#endif
