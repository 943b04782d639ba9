#pragma once

#include "qdiamond/congruence.hpp"

#include <cstdint>
#include <vector>

namespace qdiamond {

/// d_{p-2}(p n + r) = 0 (mod p) for every r with 24r + 1 a nonresidue mod p,
/// plus the class t with 24t + 1 = 0 (mod p): (p + 1)/2 claims, sorted by r.
/// Requires p >= 5 prime.
std::vector<Congruence> family_p_minus_2(std::uint64_t p);

/// d_{p-1}(p n + r) = 0 (mod p) for every nonresidue r. Requires p >= 5 prime.
std::vector<Congruence> family_p_minus_1(std::uint64_t p);

/// d_l(l n + r) = 0 (mod l) from Ramanujan's p(l n + r) congruences;
/// l must be 5, 7 or 11.
Congruence family_ramanujan(std::uint64_t ell);

/// d_7(2p n + 2r + 1) = 0 (mod 4) for every r in [1, p-1] with 3r + 1 a
/// nonresidue mod p. Requires p >= 5 prime.
std::vector<Congruence> family_d7_prime(std::uint64_t p);

/// d_{pj+k}(p n + r) from d_k(p n + r), both mod p. Requires M = A = p prime.
Congruence lift(const Congruence& claim, std::uint64_t j);

/// Every congruence stated in the source results, with the lifted families
/// expanded for j = 0..j_max. Canonical order, no repeated keys.
std::vector<Congruence> paper_catalog(std::uint64_t j_max);

/// The claim checked for one alpha of the powers-of-3 family for d_2:
/// n = 8^{-1} (mod 3^alpha), modulus 3^{2 floor(alpha/2) + 1}.
Congruence smoot_claim(unsigned alpha);

/// Checks alpha = 1..alpha_max against one d_2 series modulo the largest
/// modulus needed (3^7 for alpha_max <= 6).
std::vector<Report> smoot_check(unsigned alpha_max, std::size_t bound);

/// A single alpha, including the vacuous alpha = 0 (expected to fail).
Report smoot_check_alpha(unsigned alpha, std::size_t bound);

} // namespace qdiamond
