#pragma once

// Finite residue-class checks behind the elementary proofs: whether a
// quadratic exponent form can land in a progression, and whether the weight
// attached to every such landing vanishes.

#include <cstdint>
#include <string>

namespace qdiamond {

/// f(m) = (a m^2 + b m) / d, integer-valued for every integer m.
struct QuadraticForm {
    std::int64_t a;
    std::int64_t b;
    std::int64_t d = 1;

    /// Throws std::invalid_argument unless d >= 1, a != 0 and d divides
    /// a m^2 + b m for all m (equivalently d | a + b and d | 2a).
    void validate() const;

    /// f(m) mod A in [0, A).
    std::uint64_t residue(std::int64_t m, std::uint64_t A) const;

    /// Scan length 2 |a| d A; f(m) mod A is periodic with a period dividing it.
    std::uint64_t period(std::uint64_t A) const;

    std::string to_string() const;
};

/// w(m) = c m + e.
struct LinearWeight {
    std::int64_t c;
    std::int64_t e;

    std::uint64_t residue(std::int64_t m, std::uint64_t M) const;
};

/// Some integer m has f(m) = B (mod A).
bool form_hits_progression(const QuadraticForm& f, std::uint64_t A, std::uint64_t B);

/// Every m with f(m) = B (mod A) has w(m) = 0 (mod M). Vacuously true when
/// no m reaches the class.
bool weighted_form_divisibility(const QuadraticForm& f, const LinearWeight& w, std::uint64_t A,
                                std::uint64_t B, std::uint64_t M);

/// Every pair (j, k) with f(j) + f(k) = B (mod A) has w(j) w(k) = 0 (mod M).
bool two_form_weighted_divisibility(const QuadraticForm& f, const LinearWeight& w,
                                    std::uint64_t A, std::uint64_t B, std::uint64_t M);

} // namespace qdiamond
