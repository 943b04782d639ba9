#include "qdiamond/eta_quotient.hpp"
#include "qdiamond/series.hpp"

#include <doctest.h>

#include <random>

using namespace qdiamond;

namespace {

const CoeffRing Z = CoeffRing::integers();

std::vector<long> values(const Series& s)
{
    std::vector<long> out;
    for (std::size_t i = 0; i < s.order(); ++i)
        out.push_back(s.coeff(i).get_si());
    return out;
}

Series random_series(std::mt19937_64& rng, const CoeffRing& ring, std::size_t order,
                     bool unit_constant)
{
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::bernoulli_distribution sparse(0.3);
    Series::Integers c(order);
    for (auto& x : c)
        x = sparse(rng) ? 0 : coeff(rng);
    if (unit_constant)
        c[0] = (rng() & 1) ? 1 : -1;
    return Series::from_integers(ring, c);
}

// Plain O(N^2) Cauchy product over Z, used as the reference for mul.
Series naive_mul(const Series& a, const Series& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    Series::Integers c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    return Series::from_integers(a.ring(), c);
}

} // namespace

TEST_CASE("constructors")
{
    CHECK(values(Series::one(Z, 3)) == std::vector<long>{1, 0, 0});
    CHECK(values(Series::zero(CoeffRing::modulo(5), 2)) == std::vector<long>{0, 0});
    CHECK(values(Series::one(CoeffRing::modulo(3), 1)) == std::vector<long>{1});
    CHECK(Series::one(Z, 1).coeff(0) == 1);
    CHECK_THROWS_AS(Series::one(Z, 3).coeff(3), std::out_of_range);
    CHECK_THROWS_AS(CoeffRing::modulo(1), std::invalid_argument);
    CHECK_THROWS_AS(Series::from_residues(5, {1, 5}), std::invalid_argument);
}

TEST_CASE("add and sub")
{
    auto a = Series::from_integers(Z, {1, 2});
    auto b = Series::from_integers(Z, {3, 4});
    CHECK(values(a + b) == std::vector<long>{4, 6});
    const auto z3 = CoeffRing::modulo(3);
    CHECK(values(Series::from_integers(z3, {1, 2}) + Series::from_integers(z3, {2, 1}))
          == std::vector<long>{0, 0});
    CHECK((a - a).is_zero());
    CHECK(values(scalar_mul(a, -3)) == std::vector<long>{-3, -6});
    CHECK_THROWS_AS(a + Series::from_integers(z3, {1, 2}), RingMismatch);
    CHECK_THROWS_AS(Series::from_integers(CoeffRing::modulo(4), {1})
                        + Series::from_integers(z3, {1}),
                    RingMismatch);
}

TEST_CASE("mul examples")
{
    auto geometric = Series::from_integers(Z, {1, 1, 1, 1});
    CHECK(values(Series::from_integers(Z, {1, -1, 0, 0}) * geometric)
          == std::vector<long>{1, 0, 0, 0});
    auto f1 = pochhammer_series(1, 6, Z);
    CHECK(values(f1 * f1) == std::vector<long>{1, -2, -1, 2, 1, 2});
    CHECK(Series::one(Z, 6) * f1 == f1);
    // Order is the smaller of the two.
    CHECK((Series::one(Z, 4) * f1).order() == 4);
}

TEST_CASE("invert and divide")
{
    CHECK(values(invert(Series::from_integers(Z, {1, -1, 0, 0, 0}))) == std::vector<long>{1, 1, 1, 1, 1});
    CHECK(values(invert(pochhammer_series(1, 6, Z))) == std::vector<long>{1, 1, 2, 3, 5, 7});
    CHECK(invert(Series::one(Z, 5)) == Series::one(Z, 5));
    CHECK(values(invert(Series::from_integers(Z, {-1, 1, 0}))) == std::vector<long>{-1, -1, -1});
    CHECK_THROWS_AS(invert(Series::from_integers(Z, {2, 1})), NotInvertible);
    CHECK_THROWS_AS(invert(Series::from_integers(CoeffRing::modulo(6), {3, 1})), NotInvertible);
    // 2 is a unit mod 5: 1/(2 + q) = 3 - 4q ... = 3 + q + 2q^2 mod 5.
    CHECK(values(invert(Series::from_integers(CoeffRing::modulo(5), {2, 1, 0})))
          == std::vector<long>{3, 1, 2});
    auto f1 = pochhammer_series(1, 40, Z);
    auto f2 = pochhammer_series(2, 40, Z);
    CHECK(divide(f2, f1) == f2 * invert(f1));
}

TEST_CASE("pow")
{
    auto f1 = pochhammer_series(1, 7, Z);
    CHECK(pow(f1, 0) == Series::one(Z, 7));
    CHECK(values(pow(f1, 3)) == std::vector<long>{1, -3, 0, 5, 0, 0, -7});
    CHECK(pow(f1, -1) == partition_series(7, Z));
    CHECK(pow(f1, -5) == pow(invert(f1), 5));
    CHECK_THROWS_AS(pow(Series::from_integers(Z, {2, 1}), -1), NotInvertible);
}

TEST_CASE("inflate, dissect and shift")
{
    CHECK(values(inflate(Series::from_integers(Z, {1, -1, -1}), 2, 6))
          == std::vector<long>{1, 0, -1, 0, -1, 0});
    auto s = Series::from_integers(Z, {3, 1, 4, 1, 5, 9, 2, 6});
    CHECK(inflate(s, 1) == s);
    CHECK(inflate(s, 3).order() == 24);
    CHECK(inflate(pochhammer_series(1, 20, Z), 3, 60) == pochhammer_series(3, 60, Z));
    CHECK_THROWS_AS(inflate(s, 2, 17), std::invalid_argument);
    CHECK_THROWS_AS(inflate(s, 0, 4), std::invalid_argument);

    // Triangular numbers never sit at 2 mod 3.
    Series::Integers tri(12);
    for (long m = 0; m * (m + 1) / 2 < 12; ++m)
        tri[static_cast<std::size_t>(m * (m + 1) / 2)] = 1;
    CHECK(dissect(Series::from_exact(tri), 3, 2).is_zero());
    CHECK(dissect(s, 1, 0) == s);
    CHECK(values(dissect(s, 3, 1)) == std::vector<long>{1, 5, 6});
    CHECK(dissect(s, 3, 2).order() == 2);
    CHECK_THROWS_AS(dissect(s, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(dissect(s, 0, 0), std::invalid_argument);

    CHECK(values(shift(Series::from_integers(Z, {1, 2, 3}), 1)) == std::vector<long>{0, 1, 2});
    CHECK(shift(s, 8).is_zero());
    CHECK(values(truncate(s, 3)) == std::vector<long>{3, 1, 4});
}

TEST_CASE("reduce_mod and comparison")
{
    CHECK(values(reduce_mod(Series::from_integers(Z, {7, -1}), 3)) == std::vector<long>{1, 2});
    CHECK(reduce_mod(Series::zero(Z, 4), 7).is_zero());
    CHECK(values(reduce_mod(pow(pochhammer_series(1, 7, Z), 3), 3))
          == std::vector<long>{1, 0, 0, 2, 0, 0, 2});
    auto s9 = Series::from_integers(CoeffRing::modulo(9), {8, 4, 5});
    CHECK(values(reduce_mod(s9, 3)) == std::vector<long>{2, 1, 2});
    CHECK_THROWS_AS(reduce_mod(s9, 2), RingMismatch);

    CHECK(Series::one(Z, 1).coeff(0) == 1);
    auto p = partition_series(30, Z);
    CHECK(p.coeff(4) == 5);
    CHECK(equal_up_to(p, p, 30));
    CHECK_THROWS_AS(equal_up_to(p, p, 31), std::out_of_range);
    auto q = p + shift(Series::one(Z, 30), 9);
    CHECK(equal_up_to(p, q, 9));
    CHECK_FALSE(equal_up_to(p, q, 10));
    CHECK(first_difference(p, q, 30) == std::optional<std::size_t>(9));
}

TEST_CASE("large moduli")
{
    const std::uint64_t m = (std::uint64_t{1} << 61) - 1;
    const auto ring = CoeffRing::modulo(m);
    auto f1 = pochhammer_series(1, 300, ring);
    auto exact = pochhammer_series(1, 300, Z);
    auto big = pow(invert(exact), 40);
    CHECK(pow(invert(f1), 40) == reduce_mod(big, m));
    const auto top = CoeffRing::modulo(~std::uint64_t{0});
    CHECK(pow(invert(pochhammer_series(1, 300, top)), 40) == reduce_mod(big, ~std::uint64_t{0}));
}

TEST_CASE("dissection reassembly and adjunction")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ring = trial % 2 ? Z : CoeffRing::modulo(1000);
        const std::size_t n = 1 + rng() % 64;
        auto s = random_series(rng, ring, n, false);
        for (std::size_t A = 1; A <= 12; ++A) {
            CAPTURE(trial);
            CAPTURE(A);
            Series::Integers sum(n);
            for (std::size_t B = 0; B < std::min(A, n); ++B) {
                auto back = inflate(dissect(s, A, B), A);
                for (std::size_t i = 0; B + i < n; ++i)
                    sum[B + i] += back.coeff(i);
            }
            CHECK(Series::from_integers(ring, sum) == s);

            auto up = inflate(s, A);
            CHECK(dissect(up, A, 0) == s);
            for (std::size_t B = 1; B < A; ++B)
                CHECK(dissect(up, A, B).is_zero());
        }
    }
}

TEST_CASE("randomized ring laws")
{
    std::mt19937_64 rng(20240611);
    const std::vector<CoeffRing> rings = {Z, CoeffRing::modulo(2), CoeffRing::modulo(9),
                                          CoeffRing::modulo(2187),
                                          CoeffRing::modulo((std::uint64_t{1} << 61) - 1)};
    for (int trial = 0; trial < 100; ++trial) {
        const auto& ring = rings[static_cast<std::size_t>(trial) % rings.size()];
        const std::size_t n = 1 + rng() % 64;
        auto a = random_series(rng, ring, n, false);
        auto b = random_series(rng, ring, n, false);
        auto c = random_series(rng, ring, n, false);
        auto u = random_series(rng, ring, n, true);
        CAPTURE(trial);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Series::zero(ring, n));
        CHECK(mul(a, b, MulAlgorithm::Karatsuba) == a * b);
        CHECK(u * invert(u) == Series::one(ring, n));
        CHECK(divide(a, u) * u == a);
        if (ring.is_exact()) {
            CHECK(a * b == naive_mul(a, b));
            CHECK(reduce_mod(a * b, 7) == reduce_mod(a, 7) * reduce_mod(b, 7));
            CHECK(reduce_mod(invert(u), 9) == invert(reduce_mod(u, 9)));
        }
    }
}
