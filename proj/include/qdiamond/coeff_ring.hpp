#pragma once

#include <cstdint>
#include <string>

namespace qdiamond {

/// Coefficient ring of a truncated series: the integers, or Z/MZ with M >= 2.
class CoeffRing {
public:
    enum class Kind { ExactInteger, ModM };

    static CoeffRing integers() { return CoeffRing(Kind::ExactInteger, 0); }

    /// Throws std::invalid_argument when modulus < 2.
    static CoeffRing modulo(std::uint64_t modulus);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::ExactInteger; }

    /// Zero for the exact ring.
    std::uint64_t modulus() const { return modulus_; }

    /// "Z" or "Z/M".
    std::string to_string() const;

    bool operator==(const CoeffRing&) const = default;

private:
    CoeffRing(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

} // namespace qdiamond
