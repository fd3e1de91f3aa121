#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qsfmf/combinatorics.hpp"
#include "qsfmf/expansion.hpp"

namespace qsfmf {

/// Entries of a filling, one vector per row of the shape, left to right over the
/// row's occupied cells.
using RowEntries = std::vector<std::vector<int>>;

/// A bijective filling of a skew shape with 1..n, increasing along rows and down columns.
class StandardYoungTableau {
 public:
  /// Throws std::invalid_argument if `rows` is not a standard filling of `shape`.
  StandardYoungTableau(SkewShape shape, RowEntries rows);

  const SkewShape& shape() const { return shape_; }
  const RowEntries& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int entry(Cell c) const;
  Cell cell_of(int entry) const;

  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;

 private:
  SkewShape shape_;
  RowEntries rows_;
  std::vector<Cell> cell_of_;  // index entry-1
};

/// A filling with rows weakly increasing and columns strictly increasing.
class SemistandardFilling {
 public:
  /// Throws std::invalid_argument if `rows` is not semistandard on `shape`.
  SemistandardFilling(SkewShape shape, RowEntries rows);

  const SkewShape& shape() const { return shape_; }
  const RowEntries& rows() const { return rows_; }
  /// Multiplicities of 1, 2, ... up to the largest entry.
  std::vector<int> content() const;

 private:
  SkewShape shape_;
  RowEntries rows_;
};

DescentSet des_p(const StandardYoungTableau& t);
Composition com_p(const StandardYoungTableau& t);

/// Enumerates by placing 1..n in turn into the minimal unfilled cells, rows tried top to
/// bottom. Throws BudgetExceeded after `budget` tableaux.
void for_each_syt(const SkewShape& d, const std::function<void(const StandardYoungTableau&)>& visit,
                  std::uint64_t budget = kDefaultBudget);
std::vector<StandardYoungTableau> enumerate_syt(const SkewShape& d, std::uint64_t budget = kDefaultBudget);
std::uint64_t count_syt(const SkewShape& d, std::uint64_t budget = kDefaultBudget);

/// Number of SYT of shape d per descent-set mask.
std::map<std::uint64_t, std::uint64_t> syt_descent_histogram(const SkewShape& d,
                                                             std::uint64_t budget = kDefaultBudget);

/// Reading right to left along rows, top to bottom, every prefix has at least as many
/// i as i+1.
bool is_lattice(const SemistandardFilling& t);

/// All semistandard lattice fillings of d (any content).
std::vector<SemistandardFilling> enumerate_lr_tableaux(const SkewShape& d);

/// Schur expansion of s_D: the coefficient of s_lambda counts LR tableaux of content lambda.
SchurExpansion lr_expansion(const SkewShape& d);

}  // namespace qsfmf
