#pragma once

#include <cstdint>
#include <random>

namespace reinsim {

// Counter-seeded random stream: each (seed, stream, substream) triple yields an
// independent, reproducible generator, so per-path streams can be created in any
// order without changing results.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0) {
        std::seed_seq seq{seed, stream, substream, std::uint64_t{0x9e3779b97f4a7c15ULL}};
        gen_.seed(seq);
    }

    double normal() { return normal_(gen_); }

    // Uniform on [0, 1).
    double uniform() { return uniform_(gen_); }

    unsigned poisson(double mean) {
        std::poisson_distribution<unsigned> d(mean);
        return d(gen_);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace reinsim
