#pragma once

#include <cstdint>
#include <vector>

#include "qsfmf/combinatorics.hpp"
#include "qsfmf/composition_tableaux.hpp"
#include "qsfmf/expansion.hpp"
#include "qsfmf/young_tableaux.hpp"

namespace qsfmf {

/// Quasisymmetric Schur function: coefficient of F_beta counts SCT of shape alpha
/// whose descent composition is beta.
FExpansion qs_f(const Composition& alpha, std::uint64_t budget = kDefaultBudget);

/// Skew Schur function: coefficient of F_beta counts SYT of shape d with descent
/// composition beta.
FExpansion skew_schur_f(const SkewShape& d, std::uint64_t budget = kDefaultBudget);
FExpansion schur_f(const Partition& lambda, std::uint64_t budget = kDefaultBudget);

/// Sum of qs_f over all rearrangements of lambda.
FExpansion schur_via_qs(const Partition& lambda, std::uint64_t budget = kDefaultBudget);

/// F_alpha = sum of M_beta over refinements beta of alpha.
MExpansion f_to_m(const FExpansion& e);

/// F_alpha -> F_{complement(reverse(alpha))}.
FExpansion omega_f(const FExpansion& e);

/// Every stored coefficient equals 1.
bool is_fmf(const FExpansion& e);
std::size_t f_component_count(const FExpansion& e);

/// Product formula for compositions with every part in {1, 2}; the factor for each
/// maximal run 2^e is taken from qs_f((2^e)). Throws std::invalid_argument on a part >= 3.
FExpansion qs_f_fast_12(const Composition& alpha);

template <class Tableau>
struct CollisionWitness {
  DescentSet descents;
  Tableau first;
  Tableau second;
};

/// One pair of tableaux per descent set attained at least twice, ordered by descent
/// composition. Empty iff the expansion is F-multiplicity-free.
std::vector<CollisionWitness<StandardCompositionTableau>> multiplicity_witnesses(
    const Composition& alpha, std::uint64_t budget = kDefaultBudget);
std::vector<CollisionWitness<StandardYoungTableau>> multiplicity_witnesses(const SkewShape& d,
                                                                           std::uint64_t budget = kDefaultBudget);

}  // namespace qsfmf
