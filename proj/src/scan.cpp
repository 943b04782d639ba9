#include "qdiamond/scan.hpp"

#include "qdiamond/diamond.hpp"
#include "qdiamond/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdiamond {

bool implies(const Congruence& stronger, const Congruence& weaker)
{
    return stronger.k == weaker.k && weaker.A % stronger.A == 0
           && weaker.B % stronger.A == stronger.B && stronger.M % weaker.M == 0;
}

bool covered(const Congruence& claim, std::span<const Congruence> found)
{
    return std::any_of(found.begin(), found.end(),
                       [&](const Congruence& f) { return implies(f, claim); });
}

std::vector<Congruence> scan(const ScanOptions& options)
{
    if (options.A_max == 0)
        throw std::invalid_argument("scan: A_max must be at least 1");
    if (options.bound < 10 * options.A_max)
        throw std::invalid_argument("scan: bound must be at least 10 * A_max");
    std::uint64_t modulus = 1;
    for (std::uint64_t m : options.moduli) {
        if (m < 2)
            throw std::invalid_argument("scan: moduli must be at least 2");
        modulus = lcm(modulus, m);
        if (modulus == 0)
            throw std::invalid_argument("scan: lcm of moduli overflows");
    }
    for (std::uint64_t k : options.ks)
        if (k == 0)
            throw std::invalid_argument("scan: k must be at least 1");
    if (options.moduli.empty() || options.ks.empty())
        return {};

    std::vector<DiamondRequest> requests;
    for (std::uint64_t k : options.ks)
        requests.push_back({k, CoeffRing::modulo(modulus)});
    const auto series = dk_batch(requests, options.bound, options.threads);

    std::vector<Congruence> passing;
    for (const auto& ds : series) {
        const auto values = ds.values.residues();
        for (std::uint64_t A = 1; A <= options.A_max; ++A) {
            for (std::uint64_t B = 0; B < A; ++B) {
                if (B >= options.bound || (options.bound - 1 - B) / A + 1 < options.min_survivors)
                    continue;
                for (std::uint64_t M : options.moduli) {
                    bool holds = true;
                    for (std::uint64_t idx = B; idx < options.bound && holds; idx += A)
                        holds = values[idx] % M == 0;
                    if (holds)
                        passing.push_back({ds.k, A, B, M, "scan", ClaimSource::Scanned});
                }
            }
        }
    }
    canonicalize(passing);

    std::vector<Congruence> minimal;
    for (const auto& c : passing) {
        bool implied = std::any_of(passing.begin(), passing.end(), [&](const Congruence& other) {
            return other.key() != c.key() && implies(other, c);
        });
        if (!implied)
            minimal.push_back(c);
    }
    return minimal;
}

} // namespace qdiamond
