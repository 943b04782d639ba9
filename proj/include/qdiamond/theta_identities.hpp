#pragma once

#include "qdiamond/eta_quotient.hpp"
#include "qdiamond/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdiamond {

/// The classical q-series identities used by the congruence proofs.
enum class LemmaId {
    Triangular, ///< f_2^2/f_1 = sum_{m>=0} q^{m(m+1)/2}
    Cube,       ///< f_1^3 = sum_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}
    Pentagonal, ///< f_1 = sum_m (-1)^m q^{m(3m-1)/2}
    Sextic,     ///< f_1^5/f_2^2 = sum_m (6m+1) q^{m(3m+1)/2}
    PhiSquare,  ///< f_1^2/f_2 = sum_j (-1)^j q^{j^2}
    Phi2Diss,   ///< f_1^2/f_2 = f_8^5/(f_4^2 f_16^2) - 2q f_16^2/f_8
    Phi3Diss,   ///< f_1^2/f_2 = f_9^2/f_18 - 2q f_3 f_18^2/(f_6 f_9)
    F1F2_3Diss, ///< f_1 f_2 = f_6 f_9^4/(f_3 f_18^2) - q f_9 f_18 - 2q^2 f_3 f_18^4/(f_6 f_9^2)
    Inv4_2Diss, ///< 1/f_1^4 = f_4^14/(f_2^14 f_8^4) + 4q f_4^2 f_8^4/f_2^10
    Mod11A,     ///< f_1^2 f_4^2/f_2 = sum_m (3m+1) q^{3m^2+2m}
    Mod11B,     ///< f_2^5/f_1^2 = sum_m (-1)^m (3m+1) q^{3m^2+2m}
};

inline constexpr std::array<LemmaId, 11> all_lemmas = {
    LemmaId::Triangular, LemmaId::Cube,       LemmaId::Pentagonal, LemmaId::Sextic,
    LemmaId::PhiSquare,  LemmaId::Phi2Diss,   LemmaId::Phi3Diss,   LemmaId::F1F2_3Diss,
    LemmaId::Inv4_2Diss, LemmaId::Mod11A,     LemmaId::Mod11B,
};

/// CLI-stable name, e.g. "phi-2diss".
std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma(std::string_view name);

/// c * q^shift * (eta quotient): one summand of a dissection right-hand side.
struct ThetaTerm {
    long coefficient;
    std::size_t shift;
    EtaQuotient quotient;
};

/// Summands of the right-hand side for the dissection lemmas; empty for the
/// closed-form theta sums.
std::vector<ThetaTerm> dissection_terms(LemmaId id);

/// 2 or 3 for the dissection lemmas: every term's quotient is a series in
/// q^A and its shift is below A.
std::optional<std::size_t> dissection_modulus(LemmaId id);

/// Left-hand side, always an eta quotient.
EtaQuotient lemma_quotient(LemmaId id);

Series lemma_lhs(LemmaId id, std::size_t order, const CoeffRing& ring);
Series theta_rhs(LemmaId id, std::size_t order, const CoeffRing& ring);

struct Mismatch {
    std::size_t index;
    mpz_class lhs;
    mpz_class rhs;
};

struct LemmaReport {
    std::string name;
    std::size_t order;
    std::optional<Mismatch> mismatch;

    bool passed() const { return !mismatch.has_value(); }
};

/// Compares two expansions coefficient by coefficient up to min order.
LemmaReport compare_identity(std::string name, const Series& lhs, const Series& rhs);

/// Checks lemma_lhs == theta_rhs over the exact integers.
LemmaReport verify_lemma(LemmaId id, std::size_t order);

} // namespace qdiamond
