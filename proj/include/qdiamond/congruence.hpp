#pragma once

#include "qdiamond/series.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace qdiamond {

enum class ClaimSource { Paper, Generated, Scanned };

/// Claim: d_k(A n + B) = 0 (mod M) for every n >= 0.
struct Congruence {
    std::uint64_t k = 1;
    std::uint64_t A = 1;
    std::uint64_t B = 0;
    std::uint64_t M = 2;
    std::string family;
    ClaimSource source = ClaimSource::Paper;

    /// Throws std::invalid_argument unless k >= 1, A >= 1, B < A and M >= 2.
    void validate() const;

    auto key() const { return std::tuple(k, A, B, M); }

    /// "d_7(8n+4) == 0 (mod 8)"
    std::string to_string() const;
};

/// Sorts by (k, A, B, M) and drops repeated keys, keeping the first.
void canonicalize(std::vector<Congruence>& claims);

enum class Status { HoldsUpToBound, Fails };

struct Counterexample {
    std::uint64_t n;       ///< position in the progression
    std::uint64_t index;   ///< A n + B
    std::uint64_t residue; ///< d_k(A n + B) mod M, nonzero
};

struct Report {
    Congruence claim;
    std::size_t bound = 0;
    Status status = Status::HoldsUpToBound;
    std::optional<Counterexample> counterexample;
    std::size_t terms_checked = 0;

    bool holds() const { return status == Status::HoldsUpToBound; }
};

/// Checks every index A n + B < bound. Requires bound >= A + B.
Report verify(const Congruence& claim, std::size_t bound);

/// Same check against a precomputed d_k series over Z/L where M divides L and
/// order >= bound.
Report verify_with(const Congruence& claim, const Series& dk_mod, std::size_t bound);

/// Verifies many claims, computing one modular series per k (modulus = lcm of
/// the claims' moduli) in parallel. Reports come back in input order.
std::vector<Report> verify_all(std::span<const Congruence> claims, std::size_t bound,
                               unsigned threads = 0);

/// One-line human rendering of a report.
std::string render(const Report& report);

} // namespace qdiamond
