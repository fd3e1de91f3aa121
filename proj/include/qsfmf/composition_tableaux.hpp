#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qsfmf/combinatorics.hpp"
#include "qsfmf/young_tableaux.hpp"

namespace qsfmf {

/// One cover relation beta < gamma of the composition poset: either a new part of
/// size 1 is prepended, or 1 is added to the first (topmost) part of its size.
struct CoverMove {
  enum class Kind { PrependRow, IncrementPart };
  Kind kind = Kind::PrependRow;
  int row = 0;  // only meaningful for IncrementPart
  friend bool operator==(const CoverMove&, const CoverMove&) = default;
};

/// Throws std::invalid_argument if the move is not a cover relation out of beta.
Composition apply(const Composition& beta, CoverMove move);
std::vector<CoverMove> cover_moves(const Composition& beta);

/// All gamma covering beta: the prepend first, then increments by ascending row.
std::vector<Composition> covers_up(const Composition& beta);
/// All beta covered by alpha: deletion of a leading 1 first, then decrements by
/// ascending row. Requires alpha nonempty.
std::vector<Composition> covers_down(const Composition& alpha);

/// Left-justified rows of integers on a composition diagram, with no validity rules.
struct CompositionFilling {
  Composition shape;
  RowEntries rows;
  friend bool operator==(const CompositionFilling&, const CompositionFilling&) = default;
};

/// True iff the entries are 1..n and deleting the cells holding 1, 2, ..., n in turn
/// walks a saturated chain of inverse covers from the shape down to the empty composition.
bool is_valid_sct(const CompositionFilling& filling);

class StandardCompositionTableau {
 public:
  /// Throws std::invalid_argument unless is_valid_sct(filling).
  explicit StandardCompositionTableau(CompositionFilling filling);

  const Composition& shape() const { return filling_.shape; }
  const RowEntries& rows() const { return filling_.rows; }
  const CompositionFilling& filling() const { return filling_; }
  int size() const { return filling_.shape.size(); }
  int entry(Cell c) const;
  Cell cell_of(int entry) const;

  friend bool operator==(const StandardCompositionTableau& a, const StandardCompositionTableau& b) {
    return a.filling_ == b.filling_;
  }

 private:
  CompositionFilling filling_;
  std::vector<Cell> cell_of_;
};

/// i is a descent iff i+1 sits weakly to the right of i (any row).
DescentSet des_c(const StandardCompositionTableau& t);
Composition com_c(const StandardCompositionTableau& t);

/// Row i holds its consecutive block of entries, largest leftmost.
StandardCompositionTableau canonical_filling(const Composition& alpha);

/// Adds m to every entry.
CompositionFilling shift(const StandardCompositionTableau& t, int m);

/// Enumerates by descending saturated chains alpha > ... > empty, entry i going to
/// the cell removed at step i. Throws BudgetExceeded after `budget` tableaux.
void for_each_sct(const Composition& alpha, const std::function<void(const StandardCompositionTableau&)>& visit,
                  std::uint64_t budget = kDefaultBudget);
std::vector<StandardCompositionTableau> enumerate_sct(const Composition& alpha,
                                                      std::uint64_t budget = kDefaultBudget);

/// Tableau count and descent-set multiset for one shape.
struct SctSummary {
  std::uint64_t count = 0;
  std::map<std::uint64_t, std::uint64_t> descent_histogram;  // descent mask -> #SCT
};

/// Memoized per shape; safe to call concurrently.
SctSummary sct_summary(const Composition& alpha, std::uint64_t budget = kDefaultBudget);

}  // namespace qsfmf
