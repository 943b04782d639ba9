#include "qdiamond/catalog.hpp"

#include "qdiamond/diamond.hpp"
#include "qdiamond/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qdiamond {

namespace {

void require_prime_at_least_5(std::uint64_t p)
{
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("family requires a prime p >= 5, got " + std::to_string(p));
}

Congruence claim(std::uint64_t k, std::uint64_t A, std::uint64_t B, std::uint64_t M,
                 std::string family, ClaimSource source = ClaimSource::Paper)
{
    Congruence c{k, A, B, M, std::move(family), source};
    c.validate();
    return c;
}

std::uint64_t ipow(std::uint64_t base, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= base;
    return r;
}

// A lifted family d_{pj+k}(p n + B_i) = 0 (mod p) as listed in the source.
struct LiftedFamily {
    std::uint64_t p;
    std::uint64_t k;
    std::vector<std::uint64_t> residues;
};

std::string family_label(std::uint64_t p, std::uint64_t k,
                         const std::vector<std::uint64_t>& residues)
{
    std::string s = "d_{" + std::to_string(p) + "j+" + std::to_string(k) + "}(" + std::to_string(p)
                    + "n+";
    bool first = true;
    for (auto r : residues) {
        if (!first)
            s += ',';
        s += std::to_string(r);
        first = false;
    }
    return s + ") mod " + std::to_string(p);
}

} // namespace

std::vector<Congruence> family_p_minus_2(std::uint64_t p)
{
    require_prime_at_least_5(p);
    std::vector<Congruence> out;
    for (std::uint64_t r = 1; r < p; ++r) {
        const std::uint64_t v = (24 * r + 1) % p;
        if (v == 0)
            out.push_back(claim(p - 2, p, r, p, "d_{p-2} special class 24t+1=0", ClaimSource::Generated));
        else if (!is_qr(v, p))
            out.push_back(claim(p - 2, p, r, p, "d_{p-2} 24r+1 nonresidue", ClaimSource::Generated));
    }
    return out;
}

std::vector<Congruence> family_p_minus_1(std::uint64_t p)
{
    require_prime_at_least_5(p);
    std::vector<Congruence> out;
    for (std::uint64_t r = 1; r < p; ++r)
        if (!is_qr(r, p))
            out.push_back(claim(p - 1, p, r, p, "d_{p-1} r nonresidue", ClaimSource::Generated));
    return out;
}

Congruence family_ramanujan(std::uint64_t ell)
{
    switch (ell) {
    case 5:
        return claim(5, 5, 4, 5, "d_l from p(5n+4)", ClaimSource::Generated);
    case 7:
        return claim(7, 7, 5, 7, "d_l from p(7n+5)", ClaimSource::Generated);
    case 11:
        return claim(11, 11, 6, 11, "d_l from p(11n+6)", ClaimSource::Generated);
    default:
        throw std::invalid_argument("no Ramanujan congruence for l = " + std::to_string(ell)
                                    + " (supported: 5, 7, 11)");
    }
}

std::vector<Congruence> family_d7_prime(std::uint64_t p)
{
    require_prime_at_least_5(p);
    std::vector<Congruence> out;
    for (std::uint64_t r = 1; r < p; ++r) {
        const std::uint64_t v = (3 * r + 1) % p;
        if (v != 0 && !is_qr(v, p))
            out.push_back(claim(7, 2 * p, 2 * r + 1, 4, "d_7(2pn+2r+1) mod 4, 3r+1 nonresidue",
                                ClaimSource::Generated));
    }
    return out;
}

Congruence lift(const Congruence& c, std::uint64_t j)
{
    c.validate();
    if (c.A != c.M || !is_prime(c.M))
        throw std::invalid_argument("lift requires A = M = p prime, got " + c.to_string());
    Congruence out = c;
    out.k = c.M * j + c.k;
    return out;
}

std::vector<Congruence> paper_catalog(std::uint64_t j_max)
{
    std::vector<Congruence> out;
    auto add = [&](std::uint64_t k, std::uint64_t A, std::uint64_t B, std::uint64_t M,
                   const std::string& label) { out.push_back(claim(k, A, B, M, label)); };

    // Elementary reproofs of earlier results for d_2 and d_3.
    add(2, 3, 2, 3, "d_2(3n+2) mod 3");
    add(3, 2, 1, 2, "d_3(2n+1) mod 2");
    add(3, 4, 2, 2, "d_3(4n+2) mod 2");
    add(3, 4, 3, 4, "d_3(4n+3) mod 4");
    add(3, 5, 1, 5, "d_3(5n+1) mod 5");
    add(3, 5, 3, 5, "d_3(5n+3) mod 5");
    add(3, 5, 4, 5, "d_3(5n+4) mod 5");

    // Individual congruences.
    add(2, 11, 7, 11, "d_2(11n+7) mod 11");
    add(5, 5, 4, 5, "d_l(ln+r) from p(ln+r)");
    add(7, 7, 5, 7, "d_l(ln+r) from p(ln+r)");
    add(11, 11, 6, 11, "d_l(ln+r) from p(ln+r)");
    add(7, 4, 2, 4, "d_7 mod 4");
    add(7, 8, 5, 4, "d_7 mod 4");
    add(7, 16, 9, 4, "d_7 mod 4");
    add(7, 4, 3, 8, "d_7 mod 8");
    add(7, 8, 4, 8, "d_7 mod 8");
    for (std::uint64_t p : {5, 7, 11, 13})
        for (auto c : family_d7_prime(p)) {
            c.family = "d_7(2pn+2r+1) mod 4, p=" + std::to_string(p);
            c.source = ClaimSource::Paper;
            out.push_back(c);
        }
    add(8, 3, 2, 9, "d_8 mod 9");
    add(8, 9, 3, 9, "d_8 mod 9");

    // Lifted families, listed with their j = 0 residues.
    static const LiftedFamily families[] = {
        {2, 1, {1}},
        {3, 2, {2}},
        {5, 3, {1, 3, 4}},
        {5, 4, {2, 3}},
        {5, 5, {4}},
        {7, 5, {2, 3, 4, 6}},
        {7, 6, {3, 5, 6}},
        {7, 7, {5}},
        {11, 2, {7}},
        {11, 9, {3, 5, 6, 8, 9, 10}},
        {11, 10, {2, 6, 7, 8, 10}},
        {11, 11, {6}},
        {13, 11, {3, 4, 6, 7, 8, 10, 11}},
        {13, 12, {2, 5, 6, 7, 8, 11}},
    };
    for (const auto& fam : families) {
        const std::string label = family_label(fam.p, fam.k, fam.residues);
        for (std::uint64_t r : fam.residues) {
            const Congruence base = claim(fam.k, fam.p, r, fam.p, label);
            for (std::uint64_t j = 0; j <= j_max; ++j)
                out.push_back(lift(base, j));
        }
    }

    // Mod 9 family for d_{9j+2}; 9 is not prime, so these are not lifts.
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        add(9 * j + 2, 9, 5, 9, "d_{9j+2}(9n+5,8) mod 9");
        add(9 * j + 2, 9, 8, 9, "d_{9j+2}(9n+5,8) mod 9");
    }

    canonicalize(out);
    return out;
}

Congruence smoot_claim(unsigned alpha)
{
    const std::uint64_t A = ipow(3, alpha);
    const std::uint64_t M = ipow(3, 2 * (alpha / 2) + 1);
    // 8n = 1 (mod 3^alpha)
    std::uint64_t B = 0;
    while ((8 * B) % A != 1 % A)
        ++B;
    return claim(2, A, B, M, "d_2 mod powers of 3, alpha=" + std::to_string(alpha));
}

Report smoot_check_alpha(unsigned alpha, std::size_t bound)
{
    return verify(smoot_claim(alpha), bound);
}

std::vector<Report> smoot_check(unsigned alpha_max, std::size_t bound)
{
    if (alpha_max == 0)
        throw std::invalid_argument("smoot_check: alpha_max must be at least 1");
    if (alpha_max > 20)
        throw std::invalid_argument("smoot_check: alpha_max above 20 is not supported");
    std::uint64_t modulus = 1;
    for (unsigned a = 1; a <= alpha_max; ++a)
        modulus = std::max(modulus, smoot_claim(a).M);
    const Series d2 = dk_series(2, bound, CoeffRing::modulo(modulus)).values;
    std::vector<Report> out;
    for (unsigned a = 1; a <= alpha_max; ++a)
        out.push_back(verify_with(smoot_claim(a), d2, bound));
    return out;
}

} // namespace qdiamond
