#include "series_kernels.hpp"

#include <algorithm>

namespace qdiamond::detail {

u64 ModArith::reduce(const mpz_class& v) const
{
    static_assert(sizeof(unsigned long) == sizeof(u64));
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

u64 ModArith::reduce(long v) const
{
    if (v >= 0)
        return static_cast<u64>(v) % m;
    u64 r = (static_cast<u64>(-(v + 1)) + 1) % m;
    return r == 0 ? 0 : m - r;
}

std::optional<u64> ModArith::inverse(u64 a) const
{
    using i128 = __int128;
    i128 old_r = a % m, r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        return std::nullopt;
    i128 inv = old_s % static_cast<i128>(m);
    if (inv < 0)
        inv += m;
    return static_cast<u64>(inv);
}

std::vector<SparseTerm<u64>> sparse_terms(std::span<const u64> dense)
{
    std::vector<SparseTerm<u64>> out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0)
            out.push_back({i, dense[i]});
    return out;
}

std::vector<SparseTerm<mpz_class>> sparse_terms(std::span<const mpz_class> dense)
{
    std::vector<SparseTerm<mpz_class>> out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (sgn(dense[i]) != 0)
            out.push_back({i, dense[i]});
    return out;
}

namespace {

// Sum of t.value * values[n - t.index] over terms with from <= t.index <= n,
// reduced mod m. Terms are sorted by index.
inline u64 modular_dot(std::span<const SparseTerm<u64>> terms, std::size_t from,
                       const u64* values, std::size_t n, const ModArith& ar)
{
    u128 acc = 0;
    if (ar.small()) {
        for (std::size_t t = from; t < terms.size() && terms[t].index <= n; ++t)
            acc += terms[t].value * values[n - terms[t].index];
    } else {
        for (std::size_t t = from; t < terms.size() && terms[t].index <= n; ++t)
            acc += ar.mul(terms[t].value, values[n - terms[t].index]);
    }
    return static_cast<u64>(acc % ar.m);
}

inline void addmul(mpz_class& acc, const mpz_class& c, const mpz_class& v)
{
    if (c == 1)
        acc += v;
    else if (c == -1)
        acc -= v;
    else
        mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
}

} // namespace

void sparse_convolve(std::span<const SparseTerm<u64>> terms, std::span<const u64> dense,
                     std::span<u64> out, const ModArith& ar)
{
    const std::size_t n_out = std::min(out.size(), dense.size());
    for (std::size_t n = 0; n < n_out; ++n)
        out[n] = modular_dot(terms, 0, dense.data(), n, ar);
    for (std::size_t n = n_out; n < out.size(); ++n)
        out[n] = 0;
}

void sparse_convolve(std::span<const SparseTerm<mpz_class>> terms,
                     std::span<const mpz_class> dense, std::span<mpz_class> out)
{
    for (auto& c : out)
        c = 0;
    const std::size_t n_out = std::min(out.size(), dense.size());
    for (const auto& t : terms) {
        if (t.index >= n_out)
            break;
        for (std::size_t j = 0; t.index + j < n_out; ++j)
            if (sgn(dense[j]) != 0)
                addmul(out[t.index + j], t.value, dense[j]);
    }
}

void sparse_divide_inplace(std::span<const SparseTerm<u64>> divisor, u64 inv_c0,
                           std::span<u64> values, const ModArith& ar)
{
    const std::size_t from = (!divisor.empty() && divisor.front().index == 0) ? 1 : 0;
    for (std::size_t n = 0; n < values.size(); ++n) {
        u64 acc = modular_dot(divisor, from, values.data(), n, ar);
        u64 v = ar.sub(values[n], acc);
        values[n] = inv_c0 == 1 ? v : ar.mul(inv_c0, v);
    }
}

void sparse_divide_inplace(std::span<const SparseTerm<mpz_class>> divisor, int inv_c0,
                           std::span<mpz_class> values)
{
    const std::size_t from = (!divisor.empty() && divisor.front().index == 0) ? 1 : 0;
    mpz_class acc;
    for (std::size_t n = 0; n < values.size(); ++n) {
        acc = 0;
        for (std::size_t t = from; t < divisor.size() && divisor[t].index <= n; ++t)
            addmul(acc, divisor[t].value, values[n - divisor[t].index]);
        values[n] -= acc;
        if (inv_c0 == -1)
            values[n] = -values[n];
    }
}

namespace {

struct IntOps {
    mpz_class add(const mpz_class& a, const mpz_class& b) const { return a + b; }
    mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
    mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
};

constexpr std::size_t karatsuba_cutoff = 32;

// out[0 .. 2n-1) = a[0..n) * b[0..n)
template <class T, class Ops>
void karatsuba_rec(const T* a, const T* b, std::size_t n, T* out, const Ops& ops)
{
    if (n <= karatsuba_cutoff) {
        for (std::size_t i = 0; i + 1 < 2 * n; ++i)
            out[i] = T(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i + j] = ops.add(out[i + j], ops.mul(a[i], b[j]));
        return;
    }
    const std::size_t lo = n / 2;
    const std::size_t hi = n - lo;

    std::vector<T> z0(2 * lo - 1), z1(2 * hi - 1), z2(2 * hi - 1);
    karatsuba_rec(a, b, lo, z0.data(), ops);
    karatsuba_rec(a + lo, b + lo, hi, z2.data(), ops);

    std::vector<T> sa(a + lo, a + n), sb(b + lo, b + n);
    for (std::size_t i = 0; i < lo; ++i) {
        sa[i] = ops.add(sa[i], a[i]);
        sb[i] = ops.add(sb[i], b[i]);
    }
    karatsuba_rec(sa.data(), sb.data(), hi, z1.data(), ops);
    for (std::size_t i = 0; i < z2.size(); ++i)
        z1[i] = ops.sub(z1[i], z2[i]);
    for (std::size_t i = 0; i < z0.size(); ++i)
        z1[i] = ops.sub(z1[i], z0[i]);

    for (std::size_t i = 0; i + 1 < 2 * n; ++i)
        out[i] = T(0);
    for (std::size_t i = 0; i < z0.size(); ++i)
        out[i] = ops.add(out[i], z0[i]);
    for (std::size_t i = 0; i < z1.size(); ++i)
        out[lo + i] = ops.add(out[lo + i], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i)
        out[2 * lo + i] = ops.add(out[2 * lo + i], z2[i]);
}

template <class T, class Ops>
std::vector<T> karatsuba_full(std::span<const T> a, std::span<const T> b, const Ops& ops)
{
    if (a.empty() || b.empty())
        return {};
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<T> pa(a.begin(), a.end()), pb(b.begin(), b.end());
    pa.resize(n, T(0));
    pb.resize(n, T(0));
    std::vector<T> out(2 * n - 1);
    karatsuba_rec(pa.data(), pb.data(), n, out.data(), ops);
    out.resize(a.size() + b.size() - 1);
    return out;
}

} // namespace

std::vector<u64> karatsuba(std::span<const u64> a, std::span<const u64> b, const ModArith& ar)
{
    return karatsuba_full(a, b, ar);
}

std::vector<mpz_class> karatsuba(std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    return karatsuba_full(a, b, IntOps{});
}

} // namespace qdiamond::detail
