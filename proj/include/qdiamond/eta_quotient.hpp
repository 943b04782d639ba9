#pragma once

#include "qdiamond/series.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qdiamond {

/// One factor f_r^e of an eta quotient.
struct EtaFactor {
    std::uint64_t r;
    std::int64_t e;

    bool operator==(const EtaFactor&) const = default;
};

/// Finite product of f_r^e with r >= 1, e != 0 and distinct r, kept sorted by r.
class EtaQuotient {
public:
    EtaQuotient() = default;

    /// Throws std::invalid_argument on r = 0, e = 0 or a repeated r.
    explicit EtaQuotient(std::vector<EtaFactor> factors);

    /// Parses whitespace-separated `r^e` tokens, e.g. "2^2 1^-7". Repeated r
    /// is rejected, as are malformed tokens (std::invalid_argument).
    static EtaQuotient parse(std::string_view text);

    const std::vector<EtaFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Canonical `r^e` rendering, sorted by r; empty quotient renders as "".
    std::string to_string() const;

    /// Merges exponents; factors whose exponents cancel are dropped.
    EtaQuotient operator*(const EtaQuotient& other) const;

    /// Replaces every f_r by f_{r/m}; all r must be divisible by m.
    EtaQuotient deflate(std::uint64_t m) const;

    bool operator==(const EtaQuotient&) const = default;

private:
    std::vector<EtaFactor> factors_;
};

/// f_r = prod_{i>=1} (1 - q^{r i}) to order N, from the pentagonal number
/// theorem: (-1)^m at exponents r m(3m-1)/2.
Series pochhammer_series(std::uint64_t r, std::size_t order, const CoeffRing& ring);

/// 1/f_1 by Euler's pentagonal recurrence (no series inversion involved).
Series partition_series(std::size_t order, const CoeffRing& ring);

/// prod f_r^e to order N. Each factor is applied by sparse multiplication or
/// division with f_r and with its cube, which is itself sparse.
Series eta_quotient_series(const EtaQuotient& eq, std::size_t order, const CoeffRing& ring);

/// The same product through pow() and invert(); the reference route.
Series eta_quotient_series_via_pow(const EtaQuotient& eq, std::size_t order, const CoeffRing& ring);

} // namespace qdiamond
