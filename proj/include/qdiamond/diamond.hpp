#pragma once

#include "qdiamond/eta_quotient.hpp"
#include "qdiamond/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qdiamond {

/// d_k(0), d_k(1), ... : coefficients of f_2^k / f_1^{3k+1}.
struct DiamondSeries {
    std::uint64_t k;
    Series values;

    std::size_t order() const { return values.order(); }
};

/// f_2^k / f_1^{3k+1} as an eta quotient.
EtaQuotient diamond_quotient(std::uint64_t k);

/// Throws std::invalid_argument for k = 0.
DiamondSeries dk_series(std::uint64_t k, std::size_t order, const CoeffRing& ring);

/// Independent exact path: literal truncated products of (1 - q^{2i}) and
/// (1 - q^i), then long division, with no use of pow, invert or the pentagonal
/// expansions. Limited to k <= 8 and order <= 512.
Series dk_oracle(std::uint64_t k, std::size_t order);

inline constexpr std::uint64_t oracle_max_k = 8;
inline constexpr std::size_t oracle_max_order = 512;

/// Exact d_k(n).
mpz_class dk_value(std::uint64_t k, std::size_t n);

/// d_k(A n + B) mod M for A n + B < order, computed natively over Z/M.
Series dk_progression(std::uint64_t k, std::size_t A, std::size_t B, std::uint64_t modulus,
                      std::size_t order);

struct DiamondRequest {
    std::uint64_t k;
    CoeffRing ring;
};

/// Evaluates independent requests on a worker pool; result i answers request i.
std::vector<DiamondSeries> dk_batch(std::span<const DiamondRequest> requests, std::size_t order,
                                    unsigned threads = 0);

} // namespace qdiamond
