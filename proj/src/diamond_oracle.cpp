// Reference path for d_k(n). Kept free of every fast kernel in the library:
// only literal products and long division on plain coefficient vectors.

#include "qdiamond/diamond.hpp"

#include <string>

namespace qdiamond {

namespace {

using Poly = std::vector<mpz_class>;

Poly convolve(const Poly& a, const Poly& b, std::size_t n)
{
    Poly out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// prod_{i>=1} (1 - q^{step i}) truncated to n terms, one binomial factor at a
// time: multiplying by (1 - q^s) subtracts the series shifted by s.
Poly literal_product(std::size_t step, std::size_t n)
{
    Poly p(n);
    p[0] = 1;
    for (std::size_t s = step; s < n; s += step)
        for (std::size_t i = n; i-- > s;)
            p[i] -= p[i - s];
    return p;
}

// num / den with den[0] = 1.
Poly long_divide(const Poly& num, const Poly& den, std::size_t n)
{
    Poly q(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class r = num[i];
        for (std::size_t j = 1; j <= i; ++j)
            r -= den[j] * q[i - j];
        q[i] = r;
    }
    return q;
}

} // namespace

Series dk_oracle(std::uint64_t k, std::size_t order)
{
    if (k == 0 || k > oracle_max_k || order == 0 || order > oracle_max_order)
        throw std::invalid_argument("dk_oracle: requires 1 <= k <= " + std::to_string(oracle_max_k)
                                    + " and 1 <= order <= " + std::to_string(oracle_max_order));
    const Poly f1 = literal_product(1, order);
    const Poly f2 = literal_product(2, order);

    Poly num(order);
    num[0] = 1;
    for (std::uint64_t i = 0; i < k; ++i)
        num = convolve(num, f2, order);

    Poly den(order);
    den[0] = 1;
    for (std::uint64_t i = 0; i < 3 * k + 1; ++i)
        den = convolve(den, f1, order);

    return Series::from_exact(long_divide(num, den, order));
}

} // namespace qdiamond
