#include "qdiamond/coeff_ring.hpp"

#include <stdexcept>

namespace qdiamond {

CoeffRing CoeffRing::modulo(std::uint64_t modulus)
{
    if (modulus < 2)
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
    return CoeffRing(Kind::ModM, modulus);
}

std::string CoeffRing::to_string() const
{
    return is_exact() ? std::string("Z") : "Z/" + std::to_string(modulus_);
}

} // namespace qdiamond
