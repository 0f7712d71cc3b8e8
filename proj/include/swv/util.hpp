#pragma once
// Seeded RNG, seed derivation, content hashing and atomic file writes.
// Everything downstream that consumes randomness goes through Rng so results
// do not depend on libstdc++ distribution internals.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace swv {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view bytes);

// Named sub-seed from a master seed; distinct labels give independent streams.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

// mt19937_64 engine (bit-exact per the standard) with hand-rolled draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1) with 53 random bits
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Marsaglia polar method, spare cached
    double normal();

    // unbiased draw from [0, n)
    std::size_t uniform_index(std::size_t n);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::string to_upper(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);

// %.{sig}g formatting, locale-independent
std::string format_double(double v, int significant_digits = 10);

std::uint64_t hash_file(const std::filesystem::path& path);
std::string hash_hex(std::uint64_t h);

// write-temp-then-rename so readers never observe a partial file
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace swv
