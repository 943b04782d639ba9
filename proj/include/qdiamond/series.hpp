#pragma once

#include "qdiamond/coeff_ring.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace qdiamond {

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class MulAlgorithm {
    Schoolbook, ///< truncated Cauchy convolution, skipping zero terms of the sparser operand
    Karatsuba,  ///< subquadratic splitting; bit-identical to Schoolbook
};

/// Truncated power series c[0] + c[1] q + ... + c[N-1] q^{N-1} over a CoeffRing.
///
/// The order N is the number of retained coefficients. Exact coefficients are
/// held as GMP integers, modular ones as residues in [0, M). Values are
/// immutable once built; every operation returns a new series.
class Series {
public:
    using Integers = std::vector<mpz_class>;
    using Residues = std::vector<std::uint64_t>;

    static Series zero(const CoeffRing& ring, std::size_t order);
    static Series one(const CoeffRing& ring, std::size_t order);

    /// Exact series taking ownership of the coefficient vector (order = size).
    static Series from_exact(Integers values);
    /// Modular series; every value must already lie in [0, modulus).
    static Series from_residues(std::uint64_t modulus, Residues values);
    /// Builds a series in `ring`, reducing each integer into it.
    static Series from_integers(const CoeffRing& ring, std::span<const mpz_class> values);
    static Series from_integers(const CoeffRing& ring, std::initializer_list<long> values);

    const CoeffRing& ring() const { return ring_; }
    std::size_t order() const;

    /// Coefficient of q^n as an integer (residues are reported in [0, M)).
    /// Throws std::out_of_range when n >= order().
    mpz_class coeff(std::size_t n) const;

    /// Throw std::logic_error when called on the other kind of ring.
    std::span<const mpz_class> integers() const;
    std::span<const std::uint64_t> residues() const;

    bool is_zero() const;
    std::size_t nonzero_count() const;

    bool operator==(const Series& other) const;

private:
    Series(CoeffRing ring, std::variant<Integers, Residues> coeffs)
        : ring_(ring), coeffs_(std::move(coeffs)) {}

    CoeffRing ring_;
    std::variant<Integers, Residues> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Series& s);

// All binary operations require identical rings (RingMismatch otherwise) and
// return a series of order min(order(a), order(b)).
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scalar_mul(const Series& a, const mpz_class& c);
Series mul(const Series& a, const Series& b, MulAlgorithm algo = MulAlgorithm::Schoolbook);

/// Multiplicative inverse to the same order. The constant term must be a unit
/// (+-1 over Z, coprime to M over Z/M); NotInvertible otherwise.
Series invert(const Series& a);

/// a / b by the same recurrence as invert, without forming 1/b.
Series divide(const Series& a, const Series& b);

/// Repeated squaring; negative exponents go through invert.
Series pow(const Series& a, std::int64_t e);

/// q^s * a, keeping the order of a.
Series shift(const Series& a, std::size_t s);

/// First n coefficients; n must not exceed order(a).
Series truncate(const Series& a, std::size_t n);

/// b[m*i] = a[i], zero elsewhere, with result order `order`.
/// Requires m >= 1 and order(a) >= ceil(order / m).
Series inflate(const Series& a, std::size_t m, std::size_t order);
/// Result order m * order(a).
Series inflate(const Series& a, std::size_t m);

/// b[n] = a[A n + B], order floor((order(a) - B - 1) / A) + 1.
/// Requires A >= 1, B < A and B < order(a).
Series dissect(const Series& a, std::size_t A, std::size_t B);

/// Coefficientwise reduction into Z/M. The input is either exact or modulo a
/// multiple of M.
Series reduce_mod(const Series& a, std::uint64_t modulus);

/// Compares the first n coefficients. Throws std::out_of_range when n exceeds
/// either order and RingMismatch on different rings.
bool equal_up_to(const Series& a, const Series& b, std::size_t n);
std::optional<std::size_t> first_difference(const Series& a, const Series& b, std::size_t n);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

} // namespace qdiamond
