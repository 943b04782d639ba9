#pragma once

// Coefficient-level kernels shared by series.cpp and eta_quotient.cpp.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qdiamond::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct ModArith {
    u64 m;

    u64 add(u64 a, u64 b) const
    {
        u64 s = a + b;
        if (s < a || s >= m)
            s -= m;
        return s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (m - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : m - a; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % m); }

    u64 reduce(const mpz_class& v) const;
    u64 reduce(long v) const;

    /// Inverse of a when gcd(a, m) = 1.
    std::optional<u64> inverse(u64 a) const;

    /// Products of two residues fit in 64 bits.
    bool small() const { return m <= (u64{1} << 32); }
};

template <class T>
struct SparseTerm {
    std::size_t index;
    T value;
};

std::vector<SparseTerm<u64>> sparse_terms(std::span<const u64> dense);
std::vector<SparseTerm<mpz_class>> sparse_terms(std::span<const mpz_class> dense);

// out[n] = sum over terms with index <= n of value * dense[n - index].
// `out` must not alias `dense`.
void sparse_convolve(std::span<const SparseTerm<u64>> terms, std::span<const u64> dense,
                     std::span<u64> out, const ModArith& ar);
void sparse_convolve(std::span<const SparseTerm<mpz_class>> terms,
                     std::span<const mpz_class> dense, std::span<mpz_class> out);

// values <- values / divisor, where divisor is given by its nonzero terms and
// its constant term has inverse `inv_c0`. Terms with index 0 are skipped.
void sparse_divide_inplace(std::span<const SparseTerm<u64>> divisor, u64 inv_c0,
                           std::span<u64> values, const ModArith& ar);
// Over Z the constant term must be +1 or -1 (its own inverse).
void sparse_divide_inplace(std::span<const SparseTerm<mpz_class>> divisor, int inv_c0,
                           std::span<mpz_class> values);

// Full product (length a.size() + b.size() - 1) by Karatsuba splitting.
std::vector<u64> karatsuba(std::span<const u64> a, std::span<const u64> b, const ModArith& ar);
std::vector<mpz_class> karatsuba(std::span<const mpz_class> a, std::span<const mpz_class> b);

} // namespace qdiamond::detail
