#pragma once

#include "qdiamond/congruence.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qdiamond {

struct ScanOptions {
    std::vector<std::uint64_t> ks;
    std::uint64_t A_max = 1;
    std::vector<std::uint64_t> moduli;
    std::size_t bound = 0;
    /// A progression is only reported when at least this many of its terms
    /// fall below the bound.
    std::size_t min_survivors = 10;
    unsigned threads = 0;
};

/// `stronger` implies `weaker` syntactically: same k, A' | A, B = B' (mod A')
/// and M | M'. A claim implies itself.
bool implies(const Congruence& stronger, const Congruence& weaker);

/// Whether `claim` is in `found` or implied by an entry of it.
bool covered(const Congruence& claim, std::span<const Congruence> found);

/// Every (k, A, B, M) from the option ranges that holds up to the bound,
/// minus those implied by another reported entry. Canonical order.
/// Requires bound >= 10 * A_max.
std::vector<Congruence> scan(const ScanOptions& options);

} // namespace qdiamond
