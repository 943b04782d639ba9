#include "qdiamond/diamond.hpp"

#include "parallel.hpp"

namespace qdiamond {

EtaQuotient diamond_quotient(std::uint64_t k)
{
    if (k == 0)
        throw std::invalid_argument("k must be at least 1");
    return EtaQuotient({{1, -static_cast<std::int64_t>(3 * k + 1)}, {2, static_cast<std::int64_t>(k)}});
}

DiamondSeries dk_series(std::uint64_t k, std::size_t order, const CoeffRing& ring)
{
    return DiamondSeries{k, eta_quotient_series(diamond_quotient(k), order, ring)};
}

mpz_class dk_value(std::uint64_t k, std::size_t n)
{
    return dk_series(k, n + 1, CoeffRing::integers()).values.coeff(n);
}

Series dk_progression(std::uint64_t k, std::size_t A, std::size_t B, std::uint64_t modulus,
                      std::size_t order)
{
    if (A == 0 || B >= A)
        throw std::invalid_argument("dk_progression: need A >= 1 and 0 <= B < A");
    return dissect(dk_series(k, order, CoeffRing::modulo(modulus)).values, A, B);
}

std::vector<DiamondSeries> dk_batch(std::span<const DiamondRequest> requests, std::size_t order,
                                    unsigned threads)
{
    return detail::parallel_map(requests.size(), threads, [&](std::size_t i) {
        return dk_series(requests[i].k, order, requests[i].ring);
    });
}

} // namespace qdiamond
