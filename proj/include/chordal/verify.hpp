#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordal/generate.hpp"

namespace chordal {

struct VerifyOptions {
    int max_n = 6;           // exhaustive tier: all connected chordal graphs on <= max_n vertices
    int random_count = 0;    // random tier size
    std::uint64_t seed = 0;
};

struct CheckStat {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> notes;
};

struct VerifyResult {
    long long graphs = 0;
    std::vector<CheckStat> checks;

    bool pass() const;
    const CheckStat* find(const std::string& name) const;
    std::string to_text() const;
};

// Runs every structural-theorem check over the exhaustive corpus and the
// seeded random tier.
VerifyResult run_verification(const VerifyOptions& options);

}  // namespace chordal
