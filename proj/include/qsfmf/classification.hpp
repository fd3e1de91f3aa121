#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsfmf/combinatorics.hpp"
#include "qsfmf/qsym.hpp"

namespace qsfmf {

/// (1^e1, 2, 1^e2, ..., 2, 1^ek) with e1..e(k-1) >= 1 and ek >= 0; contains the empty
/// composition. Equivalently: parts in {1, 2}, no leading 2, no two adjacent 2s.
bool in_c2(const Composition& alpha);
/// The members of C2 that end in 2 (so begin with a nonempty run of 1s).
bool in_c2_prime(const Composition& alpha);

/// lambda or its conjugate is (3,3), (4,4), (n-2,2) with n >= 4, or a hook.
bool predict_schur(const Partition& lambda);

/// Up to transpose, d or its 180 degree rotation is one of the straight shapes accepted
/// by predict_schur, or the disconnected (n-k) (+) (1^k) with 0 < k < n.
bool predict_skew(const SkewShape& d);

enum class ComponentClass { One, Two, More };
std::string_view to_string(ComponentClass c);

ComponentClass predict_qs_components(const Composition& alpha);
/// Classifies an expansion of qs_alpha by its number of F-components.
ComponentClass classify_components(const FExpansion& e);

/// Requires alpha to have exactly two parts; throws std::invalid_argument otherwise.
bool predict_two_part(const Composition& alpha);

/// Every rearrangement of lambda indexes an F-multiplicity-free qs function, as predicted
/// by the closed-form family list.
bool predict_family(const Partition& lambda);
bool brute_family_fmf(const Partition& lambda, std::uint64_t budget = kDefaultBudget);

enum class TheoremId { Schur, Skew, QsComponents, TwoPart, Families };
std::string_view to_string(TheoremId id);
/// Parses "schur", "skew", "qs-components", "two-part" or "families".
std::optional<TheoremId> parse_theorem(std::string_view name);

/// A pair of tableaux, usually with equal descent sets, rows padded with nullopt for cells of a
/// skew shape's inner partition.
struct WitnessRecord {
  using Rows = std::vector<std::vector<std::optional<int>>>;
  DescentSet descents;  // of `second`, and of `first` too unless first_descents is set
  Rows first;
  Rows second;
  std::optional<DescentSet> first_descents;  // set when the pair is not a collision
};

struct Disagreement {
  std::string instance;
  std::string predicted;
  std::string actual;
  FExpansion expansion;  // brute-force evidence (the qs_f or skew_schur_f of the instance)
  std::vector<WitnessRecord> witnesses;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::Schur;
  int min_n = 1;
  int max_n = 0;
  std::uint64_t checked = 0;
  std::vector<Disagreement> disagreements;

  bool verified() const { return disagreements.empty(); }
};

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
};

/// Checks the theorem's predicate against brute force on every indexing object of
/// degree 1..max_n. Results are assembled in canonical instance order regardless of
/// the thread count. Throws BudgetExceeded if any instance exceeds the tableau budget.
VerificationReport verify(TheoremId theorem, int max_n, const VerifyOptions& options = {});

WitnessRecord::Rows witness_rows(const StandardYoungTableau& t);
WitnessRecord::Rows witness_rows(const StandardCompositionTableau& t);

}  // namespace qsfmf
