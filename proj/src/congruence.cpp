#include "qdiamond/congruence.hpp"

#include "parallel.hpp"
#include "qdiamond/diamond.hpp"
#include "qdiamond/number_theory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qdiamond {

void Congruence::validate() const
{
    if (k == 0)
        throw std::invalid_argument("congruence: k must be at least 1");
    if (A == 0 || B >= A)
        throw std::invalid_argument("congruence: need A >= 1 and 0 <= B < A");
    if (M < 2)
        throw std::invalid_argument("congruence: modulus must be at least 2");
}

std::string Congruence::to_string() const
{
    std::ostringstream os;
    os << "d_" << k << '(';
    if (A == 1)
        os << 'n';
    else
        os << A << 'n';
    if (B != 0)
        os << '+' << B;
    os << ") == 0 (mod " << M << ')';
    return os.str();
}

void canonicalize(std::vector<Congruence>& claims)
{
    std::stable_sort(claims.begin(), claims.end(),
                     [](const Congruence& x, const Congruence& y) { return x.key() < y.key(); });
    claims.erase(std::unique(claims.begin(), claims.end(),
                             [](const Congruence& x, const Congruence& y) { return x.key() == y.key(); }),
                 claims.end());
}

Report verify_with(const Congruence& claim, const Series& dk_mod, std::size_t bound)
{
    claim.validate();
    if (bound < claim.A + claim.B)
        throw std::invalid_argument("verify: bound " + std::to_string(bound) + " below A + B for "
                                    + claim.to_string());
    if (dk_mod.ring().is_exact() || dk_mod.ring().modulus() % claim.M != 0)
        throw RingMismatch("verify: series over " + dk_mod.ring().to_string()
                           + " cannot decide residues mod " + std::to_string(claim.M));
    if (dk_mod.order() < bound)
        throw std::invalid_argument("verify: series order below bound");

    Report report{claim, bound, Status::HoldsUpToBound, std::nullopt, 0};
    const auto values = dk_mod.residues();
    for (std::uint64_t n = 0, idx = claim.B; idx < bound; ++n, idx += claim.A) {
        ++report.terms_checked;
        const std::uint64_t r = values[idx] % claim.M;
        if (r != 0) {
            report.status = Status::Fails;
            report.counterexample = Counterexample{n, idx, r};
            break;
        }
    }
    return report;
}

Report verify(const Congruence& claim, std::size_t bound)
{
    claim.validate();
    if (bound < claim.A + claim.B)
        throw std::invalid_argument("verify: bound " + std::to_string(bound) + " below A + B for "
                                    + claim.to_string());
    return verify_with(claim, dk_series(claim.k, bound, CoeffRing::modulo(claim.M)).values, bound);
}

std::vector<Report> verify_all(std::span<const Congruence> claims, std::size_t bound,
                               unsigned threads)
{
    // Claims sharing k share one series, modulo the lcm of their moduli while
    // that stays within the 32-bit fast path.
    constexpr std::uint64_t lcm_cap = std::uint64_t{1} << 32;
    std::vector<DiamondRequest> requests;
    std::vector<std::size_t> group_of(claims.size());
    std::map<std::uint64_t, std::vector<std::size_t>> groups_by_k;
    std::vector<std::uint64_t> group_modulus;

    for (std::size_t i = 0; i < claims.size(); ++i) {
        claims[i].validate();
        auto& groups = groups_by_k[claims[i].k];
        bool placed = false;
        for (std::size_t g : groups) {
            const std::uint64_t l = lcm(group_modulus[g], claims[i].M);
            if (l != 0 && l <= std::max(lcm_cap, group_modulus[g])) {
                group_modulus[g] = l;
                group_of[i] = g;
                placed = true;
                break;
            }
        }
        if (!placed) {
            group_of[i] = group_modulus.size();
            groups.push_back(group_modulus.size());
            group_modulus.push_back(claims[i].M);
            requests.push_back({claims[i].k, CoeffRing::integers()});
        }
    }
    for (std::size_t g = 0; g < requests.size(); ++g)
        requests[g].ring = CoeffRing::modulo(group_modulus[g]);

    const auto series = dk_batch(requests, bound, threads);
    std::vector<Report> reports;
    reports.reserve(claims.size());
    for (std::size_t i = 0; i < claims.size(); ++i)
        reports.push_back(verify_with(claims[i], series[group_of[i]].values, bound));
    return reports;
}

std::string render(const Report& report)
{
    std::ostringstream os;
    os << report.claim.to_string();
    if (report.holds()) {
        os << ": holds up to bound " << report.bound << " (" << report.terms_checked
           << " terms checked)";
    } else {
        const auto& c = *report.counterexample;
        os << ": FAILS at n=" << c.n << " (index " << c.index << ", d_" << report.claim.k << '('
           << c.index << ") mod " << report.claim.M << " = " << c.residue << ')';
    }
    return os.str();
}

} // namespace qdiamond
