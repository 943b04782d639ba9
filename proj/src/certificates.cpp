#include "qdiamond/certificates.hpp"

#include "qdiamond/number_theory.hpp"

#include <stdexcept>
#include <vector>

namespace qdiamond {

namespace {

using i128 = __int128;

std::uint64_t floor_mod(i128 v, std::uint64_t m)
{
    i128 r = v % static_cast<i128>(m);
    if (r < 0)
        r += m;
    return static_cast<std::uint64_t>(r);
}

void require_modulus(std::uint64_t A, std::uint64_t B, std::uint64_t M)
{
    if (A == 0 || B >= A)
        throw std::invalid_argument("certificate: need A >= 1 and 0 <= B < A");
    if (M < 2)
        throw std::invalid_argument("certificate: weight modulus must be at least 2");
}

std::uint64_t weighted_period(const QuadraticForm& f, std::uint64_t A, std::uint64_t M)
{
    const std::uint64_t p = lcm(f.period(A), M);
    if (p == 0)
        throw std::overflow_error("certificate: scan period overflows");
    return p;
}

} // namespace

void QuadraticForm::validate() const
{
    if (d < 1)
        throw std::invalid_argument("quadratic form: denominator must be positive");
    if (a == 0)
        throw std::invalid_argument("quadratic form: leading coefficient must be nonzero");
    // a m^2 + b m = 2a C(m,2) + (a + b) C(m,1)
    if ((a + b) % d != 0 || (2 * a) % d != 0)
        throw std::invalid_argument("quadratic form " + to_string() + " is not integer-valued");
}

std::uint64_t QuadraticForm::residue(std::int64_t m, std::uint64_t A) const
{
    const i128 num = static_cast<i128>(a) * m * m + static_cast<i128>(b) * m;
    return floor_mod(num / d, A);
}

std::uint64_t QuadraticForm::period(std::uint64_t A) const
{
    const auto abs_a = static_cast<std::uint64_t>(a < 0 ? -a : a);
    return 2 * abs_a * static_cast<std::uint64_t>(d) * A;
}

std::string QuadraticForm::to_string() const
{
    std::string s = "(" + std::to_string(a) + "m^2 " + (b < 0 ? "- " : "+ ")
                    + std::to_string(b < 0 ? -b : b) + "m)";
    if (d != 1)
        s += "/" + std::to_string(d);
    return s;
}

std::uint64_t LinearWeight::residue(std::int64_t m, std::uint64_t M) const
{
    return floor_mod(static_cast<i128>(c) * m + e, M);
}

bool form_hits_progression(const QuadraticForm& f, std::uint64_t A, std::uint64_t B)
{
    f.validate();
    require_modulus(A, B, 2);
    const std::uint64_t period = f.period(A);
    for (std::uint64_t m = 0; m < period; ++m)
        if (f.residue(static_cast<std::int64_t>(m), A) == B)
            return true;
    return false;
}

bool weighted_form_divisibility(const QuadraticForm& f, const LinearWeight& w, std::uint64_t A,
                                std::uint64_t B, std::uint64_t M)
{
    f.validate();
    require_modulus(A, B, M);
    const std::uint64_t period = weighted_period(f, A, M);
    for (std::uint64_t m = 0; m < period; ++m) {
        const auto mi = static_cast<std::int64_t>(m);
        if (f.residue(mi, A) == B && w.residue(mi, M) != 0)
            return false;
    }
    return true;
}

bool two_form_weighted_divisibility(const QuadraticForm& f, const LinearWeight& w,
                                    std::uint64_t A, std::uint64_t B, std::uint64_t M)
{
    f.validate();
    require_modulus(A, B, M);
    const std::uint64_t period = weighted_period(f, A, M);
    std::vector<std::uint64_t> fr(period), wr(period);
    for (std::uint64_t m = 0; m < period; ++m) {
        fr[m] = f.residue(static_cast<std::int64_t>(m), A);
        wr[m] = w.residue(static_cast<std::int64_t>(m), M);
    }
    for (std::uint64_t j = 0; j < period; ++j)
        for (std::uint64_t k = 0; k < period; ++k)
            if ((fr[j] + fr[k]) % A == B
                && static_cast<unsigned __int128>(wr[j]) * wr[k] % M != 0)
                return false;
    return true;
}

} // namespace qdiamond
