#pragma once

#include <cstdint>
#include <string>

namespace bipcausal::fixture {

/// Deterministic normal/uniform sampler (Box-Muller over mt19937_64),
/// identical across platforms so the bundled dataset and every seeded
/// simulation reproduce bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    double uniform();  // (0, 1)
    double gaussian(); // standard normal

private:
    std::uint64_t next_word();
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
    // splitmix-initialized mt19937_64 state
    std::uint64_t mt_[312];
    int mti_ = 313; // forces initialization on first draw
};

struct FixtureResult {
    std::string config_path;
    std::string data_dir;
};

/// Writes the bundled synthetic dataset (seeded random-walk, AR and causal
/// generators): 12 feature CSVs at mixed frequencies, 10 bucket CSVs on the
/// canonical bucket names, a copy of the proposal registry, and a ready
/// config.json. Two buckets carry real feature effects (one rate-driven,
/// one money-supply-driven) and two carry lagged event-signal effects, so
/// the cleaning and causality stages have structure to find.
FixtureResult generate(const std::string& dir, const std::string& registry_path,
                       std::uint64_t seed = 20110101);

} // namespace bipcausal::fixture
