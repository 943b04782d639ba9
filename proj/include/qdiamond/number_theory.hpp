#pragma once

#include <cstdint>
#include <vector>

namespace qdiamond {

bool is_prime(std::uint64_t n);

/// Nonzero squares mod p, ascending. Throws std::invalid_argument unless p is
/// an odd prime.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);

/// Whether a is a nonzero square mod p. Throws std::invalid_argument if p is
/// not an odd prime or a = 0 (mod p).
bool is_qr(std::uint64_t a, std::uint64_t p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Zero when the lcm does not fit in 64 bits.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

} // namespace qdiamond
