#include "qdiamond/series.hpp"

#include "series_kernels.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace qdiamond {

using detail::ModArith;
using detail::u64;

namespace {

void require_order(std::size_t order)
{
    if (order == 0)
        throw std::invalid_argument("series order must be at least 1");
}

void require_same_ring(const Series& a, const Series& b, const char* op)
{
    if (a.ring() != b.ring())
        throw RingMismatch(std::string(op) + ": ring mismatch (" + a.ring().to_string() + " vs "
                           + b.ring().to_string() + ")");
}

ModArith arith(const Series& s) { return ModArith{s.ring().modulus()}; }

Series make_like(const CoeffRing& ring, std::size_t order)
{
    return Series::zero(ring, order);
}

// Coefficientwise binary op on the first min(order) entries.
template <class IntFn, class ModFn>
Series zip(const Series& a, const Series& b, const char* name, IntFn int_fn, ModFn mod_fn)
{
    require_same_ring(a, b, name);
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        auto x = a.integers(), y = b.integers();
        Series::Integers out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = int_fn(x[i], y[i]);
        return Series::from_exact(std::move(out));
    }
    const ModArith ar = arith(a);
    auto x = a.residues(), y = b.residues();
    Series::Residues out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = mod_fn(ar, x[i], y[i]);
    return Series::from_residues(ar.m, std::move(out));
}

} // namespace

Series Series::zero(const CoeffRing& ring, std::size_t order)
{
    require_order(order);
    if (ring.is_exact())
        return Series(ring, Integers(order));
    return Series(ring, Residues(order, 0));
}

Series Series::one(const CoeffRing& ring, std::size_t order)
{
    require_order(order);
    if (ring.is_exact()) {
        Integers v(order);
        v[0] = 1;
        return Series(ring, std::move(v));
    }
    Residues v(order, 0);
    v[0] = 1 % ring.modulus();
    return Series(ring, std::move(v));
}

Series Series::from_exact(Integers values)
{
    require_order(values.size());
    return Series(CoeffRing::integers(), std::move(values));
}

Series Series::from_residues(std::uint64_t modulus, Residues values)
{
    require_order(values.size());
    auto ring = CoeffRing::modulo(modulus);
    for (u64 v : values)
        if (v >= modulus)
            throw std::invalid_argument("residue out of range for modulus " + std::to_string(modulus));
    return Series(ring, std::move(values));
}

Series Series::from_integers(const CoeffRing& ring, std::span<const mpz_class> values)
{
    require_order(values.size());
    if (ring.is_exact())
        return Series(ring, Integers(values.begin(), values.end()));
    const ModArith ar{ring.modulus()};
    Residues out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = ar.reduce(values[i]);
    return Series(ring, std::move(out));
}

Series Series::from_integers(const CoeffRing& ring, std::initializer_list<long> values)
{
    Integers tmp;
    tmp.reserve(values.size());
    for (long v : values)
        tmp.emplace_back(v);
    return from_integers(ring, tmp);
}

std::size_t Series::order() const
{
    return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

mpz_class Series::coeff(std::size_t n) const
{
    if (n >= order())
        throw std::out_of_range("coefficient index " + std::to_string(n) + " >= order "
                                + std::to_string(order()));
    if (ring_.is_exact())
        return std::get<Integers>(coeffs_)[n];
    mpz_class out;
    mpz_set_ui(out.get_mpz_t(), std::get<Residues>(coeffs_)[n]);
    return out;
}

std::span<const mpz_class> Series::integers() const
{
    if (!ring_.is_exact())
        throw std::logic_error("integers() called on a series over " + ring_.to_string());
    return std::get<Integers>(coeffs_);
}

std::span<const std::uint64_t> Series::residues() const
{
    if (ring_.is_exact())
        throw std::logic_error("residues() called on a series over Z");
    return std::get<Residues>(coeffs_);
}

bool Series::is_zero() const { return nonzero_count() == 0; }

std::size_t Series::nonzero_count() const
{
    if (ring_.is_exact()) {
        const auto& v = std::get<Integers>(coeffs_);
        return std::count_if(v.begin(), v.end(), [](const mpz_class& c) { return sgn(c) != 0; });
    }
    const auto& v = std::get<Residues>(coeffs_);
    return std::count_if(v.begin(), v.end(), [](u64 c) { return c != 0; });
}

bool Series::operator==(const Series& other) const
{
    return ring_ == other.ring_ && coeffs_ == other.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Series& s)
{
    os << '[';
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i)
            os << ", ";
        os << s.coeff(i);
    }
    return os << "] over " << s.ring().to_string();
}

Series add(const Series& a, const Series& b)
{
    return zip(
        a, b, "add", [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x + y; },
        [](const ModArith& ar, u64 x, u64 y) { return ar.add(x, y); });
}

Series sub(const Series& a, const Series& b)
{
    return zip(
        a, b, "sub", [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x - y; },
        [](const ModArith& ar, u64 x, u64 y) { return ar.sub(x, y); });
}

Series negate(const Series& a) { return sub(make_like(a.ring(), a.order()), a); }

Series scalar_mul(const Series& a, const mpz_class& c)
{
    if (a.ring().is_exact()) {
        Series::Integers out(a.integers().begin(), a.integers().end());
        for (auto& v : out)
            v *= c;
        return Series::from_exact(std::move(out));
    }
    const ModArith ar = arith(a);
    const u64 cm = ar.reduce(c);
    Series::Residues out(a.residues().begin(), a.residues().end());
    for (auto& v : out)
        v = ar.mul(v, cm);
    return Series::from_residues(ar.m, std::move(out));
}

Series mul(const Series& a, const Series& b, MulAlgorithm algo)
{
    require_same_ring(a, b, "mul");
    const std::size_t n = std::min(a.order(), b.order());

    if (algo == MulAlgorithm::Karatsuba) {
        if (a.ring().is_exact()) {
            auto full = detail::karatsuba(a.integers().first(n), b.integers().first(n));
            full.resize(n);
            return Series::from_exact(std::move(full));
        }
        const ModArith ar = arith(a);
        auto full = detail::karatsuba(a.residues().first(n), b.residues().first(n), ar);
        full.resize(n);
        return Series::from_residues(ar.m, std::move(full));
    }

    // The sparser operand supplies the term list.
    const bool swap = b.nonzero_count() < a.nonzero_count();
    const Series& sparse = swap ? b : a;
    const Series& dense = swap ? a : b;
    if (a.ring().is_exact()) {
        auto terms = detail::sparse_terms(sparse.integers().first(n));
        Series::Integers out(n);
        detail::sparse_convolve(terms, dense.integers().first(n), out);
        return Series::from_exact(std::move(out));
    }
    const ModArith ar = arith(a);
    auto terms = detail::sparse_terms(sparse.residues().first(n));
    Series::Residues out(n);
    detail::sparse_convolve(terms, dense.residues().first(n), out, ar);
    return Series::from_residues(ar.m, std::move(out));
}

Series divide(const Series& a, const Series& b)
{
    require_same_ring(a, b, "divide");
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        const mpz_class& c0 = b.integers()[0];
        if (c0 != 1 && c0 != -1)
            throw NotInvertible("constant term " + c0.get_str() + " is not a unit in Z");
        auto terms = detail::sparse_terms(b.integers().first(n));
        Series::Integers out(a.integers().begin(), a.integers().begin() + n);
        detail::sparse_divide_inplace(terms, c0 == 1 ? 1 : -1, out);
        return Series::from_exact(std::move(out));
    }
    const ModArith ar = arith(a);
    const u64 c0 = b.residues()[0];
    auto inv = ar.inverse(c0);
    if (!inv)
        throw NotInvertible("constant term " + std::to_string(c0) + " is not a unit in "
                            + a.ring().to_string());
    auto terms = detail::sparse_terms(b.residues().first(n));
    Series::Residues out(a.residues().begin(), a.residues().begin() + n);
    detail::sparse_divide_inplace(terms, *inv, out, ar);
    return Series::from_residues(ar.m, std::move(out));
}

Series invert(const Series& a) { return divide(Series::one(a.ring(), a.order()), a); }

Series pow(const Series& a, std::int64_t e)
{
    Series result = Series::one(a.ring(), a.order());
    if (e == 0)
        return result;
    Series base = e < 0 ? invert(a) : a;
    // Avoid negating INT64_MIN.
    auto remaining = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    bool first = true;
    while (remaining != 0) {
        if (remaining & 1) {
            result = first ? base : mul(result, base);
            first = false;
        }
        remaining >>= 1;
        if (remaining != 0)
            base = mul(base, base);
    }
    return result;
}

Series shift(const Series& a, std::size_t s)
{
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        Series::Integers out(n);
        for (std::size_t i = s; i < n; ++i)
            out[i] = a.integers()[i - s];
        return Series::from_exact(std::move(out));
    }
    Series::Residues out(n, 0);
    for (std::size_t i = s; i < n; ++i)
        out[i] = a.residues()[i - s];
    return Series::from_residues(a.ring().modulus(), std::move(out));
}

Series truncate(const Series& a, std::size_t n)
{
    if (n > a.order())
        throw std::out_of_range("cannot truncate order " + std::to_string(a.order()) + " series to "
                                + std::to_string(n));
    if (a.ring().is_exact())
        return Series::from_exact(Series::Integers(a.integers().begin(), a.integers().begin() + n));
    return Series::from_residues(a.ring().modulus(),
                                 Series::Residues(a.residues().begin(), a.residues().begin() + n));
}

Series inflate(const Series& a, std::size_t m, std::size_t order)
{
    if (m == 0)
        throw std::invalid_argument("inflate: factor must be at least 1");
    require_order(order);
    if (a.order() < (order + m - 1) / m)
        throw std::invalid_argument("inflate: input order " + std::to_string(a.order())
                                    + " too small for target order " + std::to_string(order));
    if (a.ring().is_exact()) {
        Series::Integers out(order);
        for (std::size_t i = 0; i * m < order; ++i)
            out[i * m] = a.integers()[i];
        return Series::from_exact(std::move(out));
    }
    Series::Residues out(order, 0);
    for (std::size_t i = 0; i * m < order; ++i)
        out[i * m] = a.residues()[i];
    return Series::from_residues(a.ring().modulus(), std::move(out));
}

Series inflate(const Series& a, std::size_t m)
{
    if (m == 0)
        throw std::invalid_argument("inflate: factor must be at least 1");
    return inflate(a, m, m * a.order());
}

Series dissect(const Series& a, std::size_t A, std::size_t B)
{
    if (A == 0 || B >= A)
        throw std::invalid_argument("dissect: need A >= 1 and 0 <= B < A");
    if (B >= a.order())
        throw std::invalid_argument("dissect: residue " + std::to_string(B) + " beyond order "
                                    + std::to_string(a.order()));
    const std::size_t n = (a.order() - B - 1) / A + 1;
    if (a.ring().is_exact()) {
        Series::Integers out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = a.integers()[A * i + B];
        return Series::from_exact(std::move(out));
    }
    Series::Residues out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a.residues()[A * i + B];
    return Series::from_residues(a.ring().modulus(), std::move(out));
}

Series reduce_mod(const Series& a, std::uint64_t modulus)
{
    const auto ring = CoeffRing::modulo(modulus);
    if (a.ring().is_exact())
        return Series::from_integers(ring, a.integers());
    if (a.ring().modulus() % modulus != 0)
        throw RingMismatch("cannot reduce " + a.ring().to_string() + " into " + ring.to_string());
    Series::Residues out(a.residues().begin(), a.residues().end());
    for (auto& v : out)
        v %= modulus;
    return Series::from_residues(modulus, std::move(out));
}

std::optional<std::size_t> first_difference(const Series& a, const Series& b, std::size_t n)
{
    require_same_ring(a, b, "compare");
    if (n > a.order() || n > b.order())
        throw std::out_of_range("compare: " + std::to_string(n) + " exceeds series order");
    for (std::size_t i = 0; i < n; ++i) {
        bool same = a.ring().is_exact() ? a.integers()[i] == b.integers()[i]
                                        : a.residues()[i] == b.residues()[i];
        if (!same)
            return i;
    }
    return std::nullopt;
}

bool equal_up_to(const Series& a, const Series& b, std::size_t n)
{
    return !first_difference(a, b, n).has_value();
}

} // namespace qdiamond
