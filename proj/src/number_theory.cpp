#include "qdiamond/number_theory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qdiamond {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

void require_odd_prime(std::uint64_t p)
{
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

} // namespace

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p)
{
    require_odd_prime(p);
    std::vector<bool> hit(p, false);
    for (std::uint64_t x = 1; x < p; ++x)
        hit[static_cast<std::size_t>((static_cast<unsigned __int128>(x) * x) % p)] = true;
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 1; r < p; ++r)
        if (hit[r])
            out.push_back(r);
    return out;
}

bool is_qr(std::uint64_t a, std::uint64_t p)
{
    require_odd_prime(p);
    if (a % p == 0)
        throw std::invalid_argument("is_qr: residue is zero mod " + std::to_string(p));
    // Euler's criterion
    unsigned __int128 result = 1, base = a % p;
    for (std::uint64_t e = (p - 1) / 2; e != 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return result == 1;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    const std::uint64_t g = std::gcd(a, b);
    const unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
    if (l > UINT64_MAX)
        return 0;
    return static_cast<std::uint64_t>(l);
}

} // namespace qdiamond
