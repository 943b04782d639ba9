#include "qdiamond/theta_identities.hpp"

#include <functional>

namespace qdiamond {

namespace {

struct LemmaInfo {
    LemmaId id;
    std::string_view name;
};

constexpr LemmaInfo lemma_table[] = {
    {LemmaId::Triangular, "triangular"}, {LemmaId::Cube, "cube"},
    {LemmaId::Pentagonal, "pentagonal"}, {LemmaId::Sextic, "sextic"},
    {LemmaId::PhiSquare, "phi-square"},  {LemmaId::Phi2Diss, "phi-2diss"},
    {LemmaId::Phi3Diss, "phi-3diss"},    {LemmaId::F1F2_3Diss, "f1f2-3diss"},
    {LemmaId::Inv4_2Diss, "inv4-2diss"}, {LemmaId::Mod11A, "mod11-a"},
    {LemmaId::Mod11B, "mod11-b"},
};

EtaQuotient eta(std::initializer_list<EtaFactor> factors) { return EtaQuotient(factors); }

using Exponent = std::function<std::int64_t(std::int64_t)>;
using Weight = std::function<std::int64_t(std::int64_t)>;

// sum_{m>=0} w(m) q^{e(m)}; e is increasing on m >= 0.
Series unilateral_sum(std::size_t order, const CoeffRing& ring, const Exponent& e, const Weight& w)
{
    Series::Integers c(order);
    for (std::int64_t m = 0;; ++m) {
        const std::int64_t x = e(m);
        if (x >= static_cast<std::int64_t>(order))
            break;
        c[static_cast<std::size_t>(x)] += w(m);
    }
    return Series::from_integers(ring, c);
}

// sum over all integers m, visiting m = 0, 1, -1, 2, -2, ... and testing each
// exponent; stops once both signs have left the window.
Series bilateral_sum(std::size_t order, const CoeffRing& ring, const Exponent& e, const Weight& w)
{
    Series::Integers c(order);
    const auto n = static_cast<std::int64_t>(order);
    for (std::int64_t k = 0;; ++k) {
        bool inside = false;
        for (std::int64_t sign : {1, -1}) {
            if (k == 0 && sign < 0)
                continue;
            const std::int64_t m = sign * k;
            const std::int64_t x = e(m);
            if (x >= 0 && x < n) {
                c[static_cast<std::size_t>(x)] += w(m);
                inside = true;
            }
        }
        if (!inside && k > 0)
            break;
    }
    return Series::from_integers(ring, c);
}

std::int64_t sign(std::int64_t m) { return (m % 2 == 0) ? 1 : -1; }

} // namespace

std::string_view lemma_name(LemmaId id)
{
    for (const auto& info : lemma_table)
        if (info.id == id)
            return info.name;
    return "unknown";
}

std::optional<LemmaId> parse_lemma(std::string_view name)
{
    for (const auto& info : lemma_table)
        if (info.name == name)
            return info.id;
    return std::nullopt;
}

EtaQuotient lemma_quotient(LemmaId id)
{
    switch (id) {
    case LemmaId::Triangular:
        return eta({{1, -1}, {2, 2}});
    case LemmaId::Cube:
        return eta({{1, 3}});
    case LemmaId::Pentagonal:
        return eta({{1, 1}});
    case LemmaId::Sextic:
        return eta({{1, 5}, {2, -2}});
    case LemmaId::PhiSquare:
    case LemmaId::Phi2Diss:
    case LemmaId::Phi3Diss:
        return eta({{1, 2}, {2, -1}});
    case LemmaId::F1F2_3Diss:
        return eta({{1, 1}, {2, 1}});
    case LemmaId::Inv4_2Diss:
        return eta({{1, -4}});
    case LemmaId::Mod11A:
        return eta({{1, 2}, {2, -1}, {4, 2}});
    case LemmaId::Mod11B:
        return eta({{1, -2}, {2, 5}});
    }
    throw std::invalid_argument("unknown lemma id");
}

std::vector<ThetaTerm> dissection_terms(LemmaId id)
{
    switch (id) {
    case LemmaId::Phi2Diss:
        return {{1, 0, eta({{4, -2}, {8, 5}, {16, -2}})}, {-2, 1, eta({{8, -1}, {16, 2}})}};
    case LemmaId::Phi3Diss:
        return {{1, 0, eta({{9, 2}, {18, -1}})},
                {-2, 1, eta({{3, 1}, {6, -1}, {9, -1}, {18, 2}})}};
    case LemmaId::F1F2_3Diss:
        return {{1, 0, eta({{3, -1}, {6, 1}, {9, 4}, {18, -2}})},
                {-1, 1, eta({{9, 1}, {18, 1}})},
                {-2, 2, eta({{3, 1}, {6, -1}, {9, -2}, {18, 4}})}};
    case LemmaId::Inv4_2Diss:
        return {{1, 0, eta({{2, -14}, {4, 14}, {8, -4}})}, {4, 1, eta({{2, -10}, {4, 2}, {8, 4}})}};
    default:
        return {};
    }
}

std::optional<std::size_t> dissection_modulus(LemmaId id)
{
    switch (id) {
    case LemmaId::Phi2Diss:
    case LemmaId::Inv4_2Diss:
        return 2;
    case LemmaId::Phi3Diss:
    case LemmaId::F1F2_3Diss:
        return 3;
    default:
        return std::nullopt;
    }
}

Series lemma_lhs(LemmaId id, std::size_t order, const CoeffRing& ring)
{
    return eta_quotient_series(lemma_quotient(id), order, ring);
}

Series theta_rhs(LemmaId id, std::size_t order, const CoeffRing& ring)
{
    auto triangular = [](std::int64_t m) { return m * (m + 1) / 2; };
    auto mod11_exponent = [](std::int64_t m) { return 3 * m * m + 2 * m; };

    switch (id) {
    case LemmaId::Triangular:
        return unilateral_sum(order, ring, triangular, [](std::int64_t) { return 1; });
    case LemmaId::Cube:
        return unilateral_sum(order, ring, triangular,
                              [](std::int64_t m) { return sign(m) * (2 * m + 1); });
    case LemmaId::Pentagonal:
        return bilateral_sum(
            order, ring, [](std::int64_t m) { return m * (3 * m - 1) / 2; }, sign);
    case LemmaId::Sextic:
        return bilateral_sum(
            order, ring, [](std::int64_t m) { return m * (3 * m + 1) / 2; },
            [](std::int64_t m) { return 6 * m + 1; });
    case LemmaId::PhiSquare:
        return bilateral_sum(
            order, ring, [](std::int64_t j) { return j * j; }, sign);
    case LemmaId::Mod11A:
        return bilateral_sum(order, ring, mod11_exponent, [](std::int64_t m) { return 3 * m + 1; });
    case LemmaId::Mod11B:
        return bilateral_sum(order, ring, mod11_exponent,
                             [](std::int64_t m) { return sign(m) * (3 * m + 1); });
    default:
        break;
    }

    Series sum = Series::zero(ring, order);
    for (const auto& term : dissection_terms(id)) {
        Series piece = shift(eta_quotient_series(term.quotient, order, ring), term.shift);
        sum = add(sum, scalar_mul(piece, mpz_class(term.coefficient)));
    }
    return sum;
}

LemmaReport compare_identity(std::string name, const Series& lhs, const Series& rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    LemmaReport report{std::move(name), n, std::nullopt};
    if (auto at = first_difference(lhs, rhs, n))
        report.mismatch = Mismatch{*at, lhs.coeff(*at), rhs.coeff(*at)};
    return report;
}

LemmaReport verify_lemma(LemmaId id, std::size_t order)
{
    const auto ring = CoeffRing::integers();
    return compare_identity(std::string(lemma_name(id)), lemma_lhs(id, order, ring),
                            theta_rhs(id, order, ring));
}

} // namespace qdiamond
