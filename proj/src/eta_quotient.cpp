#include "qdiamond/eta_quotient.hpp"

#include "series_kernels.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace qdiamond {

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors))
{
    std::sort(factors_.begin(), factors_.end(),
              [](const EtaFactor& x, const EtaFactor& y) { return x.r < y.r; });
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].r == 0)
            throw std::invalid_argument("eta factor index r must be at least 1");
        if (factors_[i].e == 0)
            throw std::invalid_argument("eta factor f_" + std::to_string(factors_[i].r)
                                        + " has zero exponent");
        if (i > 0 && factors_[i].r == factors_[i - 1].r)
            throw std::invalid_argument("eta factor f_" + std::to_string(factors_[i].r)
                                        + " appears twice");
    }
}

namespace {

template <class Int>
Int parse_int(std::string_view s, std::string_view token)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed eta token '" + std::string(token) + "'");
    return v;
}

} // namespace

EtaQuotient EtaQuotient::parse(std::string_view text)
{
    std::vector<EtaFactor> factors;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        auto caret = token.find('^');
        if (caret == std::string::npos)
            throw std::invalid_argument("malformed eta token '" + token + "' (expected r^e)");
        std::string_view tv(token);
        auto r = parse_int<std::uint64_t>(tv.substr(0, caret), tv);
        auto e = parse_int<std::int64_t>(tv.substr(caret + 1), tv);
        factors.push_back({r, e});
    }
    return EtaQuotient(std::move(factors));
}

std::string EtaQuotient::to_string() const
{
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(f.r) + '^' + std::to_string(f.e);
    }
    return out;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const
{
    std::map<std::uint64_t, std::int64_t> merged;
    for (const auto& f : factors_)
        merged[f.r] += f.e;
    for (const auto& f : other.factors_)
        merged[f.r] += f.e;
    std::vector<EtaFactor> out;
    for (auto [r, e] : merged)
        if (e != 0)
            out.push_back({r, e});
    return EtaQuotient(std::move(out));
}

EtaQuotient EtaQuotient::deflate(std::uint64_t m) const
{
    if (m == 0)
        throw std::invalid_argument("deflate by zero");
    std::vector<EtaFactor> out;
    for (const auto& f : factors_) {
        if (f.r % m != 0)
            throw std::invalid_argument("f_" + std::to_string(f.r) + " is not a series in q^"
                                        + std::to_string(m));
        out.push_back({f.r / m, f.e});
    }
    return EtaQuotient(std::move(out));
}

Series pochhammer_series(std::uint64_t r, std::size_t order, const CoeffRing& ring)
{
    if (r == 0)
        throw std::invalid_argument("pochhammer_series: r must be at least 1");
    Series::Integers c(order);
    if (order == 0)
        throw std::invalid_argument("series order must be at least 1");
    // m = 0, 1, -1, 2, -2, ...; exponents r m(3m-1)/2 grow with |m| on both sides.
    for (std::int64_t k = 0;; ++k) {
        bool placed = false;
        for (std::int64_t sign : {1, -1}) {
            if (k == 0 && sign < 0)
                continue;
            const std::int64_t m = sign * k;
            const auto pent = static_cast<unsigned __int128>(m * (3 * m - 1) / 2);
            const auto exponent = pent * r;
            if (exponent < order) {
                c[static_cast<std::size_t>(exponent)] += (m % 2 == 0) ? 1 : -1;
                placed = true;
            }
        }
        if (!placed && k > 0)
            break;
    }
    return Series::from_integers(ring, c);
}

Series partition_series(std::size_t order, const CoeffRing& ring)
{
    if (order == 0)
        throw std::invalid_argument("series order must be at least 1");
    // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    if (ring.is_exact()) {
        Series::Integers p(order);
        p[0] = 1;
        for (std::size_t n = 1; n < order; ++n) {
            mpz_class acc = 0;
            for (std::size_t k = 1;; ++k) {
                const std::size_t g1 = k * (3 * k - 1) / 2;
                if (g1 > n)
                    break;
                const std::size_t g2 = k * (3 * k + 1) / 2;
                mpz_class term = p[n - g1];
                if (g2 <= n)
                    term += p[n - g2];
                if (k % 2 == 1)
                    acc += term;
                else
                    acc -= term;
            }
            p[n] = acc;
        }
        return Series::from_exact(std::move(p));
    }
    const detail::ModArith ar{ring.modulus()};
    Series::Residues p(order, 0);
    p[0] = 1 % ar.m;
    for (std::size_t n = 1; n < order; ++n) {
        std::uint64_t acc = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const std::size_t g2 = k * (3 * k + 1) / 2;
            std::uint64_t term = p[n - g1];
            if (g2 <= n)
                term = ar.add(term, p[n - g2]);
            acc = (k % 2 == 1) ? ar.add(acc, term) : ar.sub(acc, term);
        }
        p[n] = acc;
    }
    return Series::from_residues(ar.m, std::move(p));
}

Series eta_quotient_series(const EtaQuotient& eq, std::size_t order, const CoeffRing& ring)
{
    Series result = Series::one(ring, order);
    for (const auto& f : eq.factors()) {
        if (f.r >= order)
            continue; // f_r = 1 + O(q^r)
        const Series base = pochhammer_series(f.r, order, ring);
        const Series cube = mul(mul(base, base), base);
        const auto count = static_cast<std::uint64_t>(f.e < 0 ? -f.e : f.e);
        for (std::uint64_t i = 0; i < count / 3; ++i)
            result = f.e > 0 ? mul(result, cube) : divide(result, cube);
        for (std::uint64_t i = 0; i < count % 3; ++i)
            result = f.e > 0 ? mul(result, base) : divide(result, base);
    }
    return result;
}

Series eta_quotient_series_via_pow(const EtaQuotient& eq, std::size_t order, const CoeffRing& ring)
{
    Series result = Series::one(ring, order);
    for (const auto& f : eq.factors())
        result = mul(result, pow(pochhammer_series(f.r, order, ring), f.e));
    return result;
}

} // namespace qdiamond
