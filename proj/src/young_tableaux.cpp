#include "qsfmf/young_tableaux.hpp"

#include <algorithm>
#include <string>

namespace qsfmf {

namespace {

void check_layout(const SkewShape& shape, const RowEntries& rows) {
  if (static_cast<int>(rows.size()) != shape.row_count()) {
    throw std::invalid_argument("filling has the wrong number of rows");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape.rows()[r].length()) {
      throw std::invalid_argument("filling row " + std::to_string(r) + " has the wrong length");
    }
  }
}

int at(const SkewShape& shape, const RowEntries& rows, int r, int c) {
  return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape.rows()[static_cast<std::size_t>(r)].begin)];
}

// Columns must strictly increase between vertically adjacent cells of the shape.
void check_columns(const SkewShape& shape, const RowEntries& rows) {
  for (int r = 1; r < shape.row_count(); ++r) {
    const RowSpan& span = shape.rows()[static_cast<std::size_t>(r)];
    for (int c = span.begin; c < span.end; ++c) {
      if (shape.contains({r - 1, c}) && at(shape, rows, r - 1, c) >= at(shape, rows, r, c)) {
        throw std::invalid_argument("columns must strictly increase");
      }
    }
  }
}

// Calls leaf(row_of_entry, descent_mask) once per SYT; row_of_entry[m] is the row of m+1.
template <class Leaf>
void walk_syt(const SkewShape& d, std::uint64_t budget, Leaf&& leaf) {
  const auto& spans = d.rows();
  const int n = d.size();
  const int row_count = d.row_count();
  std::vector<int> fill(static_cast<std::size_t>(row_count), 0);
  std::vector<int> row_of(static_cast<std::size_t>(n), 0);
  std::uint64_t produced = 0;

  auto rec = [&](auto& self, int placed, int prev_row, std::uint64_t mask) -> void {
    if (placed == n) {
      if (++produced > budget) {
        throw BudgetExceeded("tableau budget of " + std::to_string(budget) + " exceeded for " + to_string(d));
      }
      leaf(static_cast<const std::vector<int>&>(row_of), mask);
      return;
    }
    for (int r = 0; r < row_count; ++r) {
      const RowSpan& span = spans[static_cast<std::size_t>(r)];
      const int filled = fill[static_cast<std::size_t>(r)];
      if (filled == span.length()) continue;
      const int c = span.begin + filled;
      if (r > 0) {
        const RowSpan& up = spans[static_cast<std::size_t>(r - 1)];
        if (c >= up.begin && c < up.end && c >= up.begin + fill[static_cast<std::size_t>(r - 1)]) continue;
      }
      ++fill[static_cast<std::size_t>(r)];
      row_of[static_cast<std::size_t>(placed)] = r;
      std::uint64_t next = mask;
      if (placed > 0 && r > prev_row) next |= std::uint64_t{1} << (placed - 1);
      self(self, placed + 1, r, next);
      --fill[static_cast<std::size_t>(r)];
    }
  };
  rec(rec, 0, -1, 0);
}

}  // namespace

StandardYoungTableau::StandardYoungTableau(SkewShape shape, RowEntries rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_layout(shape_, rows_);
  const int n = shape_.size();
  cell_of_.assign(static_cast<std::size_t>(n), Cell{-1, -1});
  for (int r = 0; r < shape_.row_count(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 0; k < row.size(); ++k) {
      const int v = row[k];
      if (v < 1 || v > n || cell_of_[static_cast<std::size_t>(v - 1)].row != -1) {
        throw std::invalid_argument("entries must be 1..n, each used once");
      }
      if (k > 0 && row[k - 1] >= v) throw std::invalid_argument("rows must strictly increase");
      cell_of_[static_cast<std::size_t>(v - 1)] = {r, shape_.rows()[static_cast<std::size_t>(r)].begin + static_cast<int>(k)};
    }
  }
  check_columns(shape_, rows_);
}

int StandardYoungTableau::entry(Cell c) const {
  if (!shape_.contains(c)) throw std::out_of_range("cell not in shape");
  return at(shape_, rows_, c.row, c.col);
}

Cell StandardYoungTableau::cell_of(int entry) const {
  if (entry < 1 || entry > size()) throw std::out_of_range("entry out of range");
  return cell_of_[static_cast<std::size_t>(entry - 1)];
}

SemistandardFilling::SemistandardFilling(SkewShape shape, RowEntries rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_layout(shape_, rows_);
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 1) throw std::invalid_argument("entries must be positive");
      if (k > 0 && row[k - 1] > row[k]) throw std::invalid_argument("rows must weakly increase");
    }
  }
  check_columns(shape_, rows_);
}

std::vector<int> SemistandardFilling::content() const {
  std::vector<int> counts;
  for (const auto& row : rows_) {
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  return counts;
}

DescentSet des_p(const StandardYoungTableau& t) {
  std::uint64_t mask = 0;
  for (int i = 1; i < t.size(); ++i) {
    if (t.cell_of(i + 1).row > t.cell_of(i).row) mask |= std::uint64_t{1} << (i - 1);
  }
  return DescentSet(t.size(), mask);
}

Composition com_p(const StandardYoungTableau& t) { return composition_of(des_p(t)); }

void for_each_syt(const SkewShape& d, const std::function<void(const StandardYoungTableau&)>& visit,
                  std::uint64_t budget) {
  walk_syt(d, budget, [&](const std::vector<int>& row_of, std::uint64_t) {
    RowEntries rows(static_cast<std::size_t>(d.row_count()));
    for (std::size_t m = 0; m < row_of.size(); ++m) {
      rows[static_cast<std::size_t>(row_of[m])].push_back(static_cast<int>(m) + 1);
    }
    visit(StandardYoungTableau(d, std::move(rows)));
  });
}

std::vector<StandardYoungTableau> enumerate_syt(const SkewShape& d, std::uint64_t budget) {
  std::vector<StandardYoungTableau> out;
  for_each_syt(d, [&](const StandardYoungTableau& t) { out.push_back(t); }, budget);
  return out;
}

std::uint64_t count_syt(const SkewShape& d, std::uint64_t budget) {
  std::uint64_t count = 0;
  walk_syt(d, budget, [&](const std::vector<int>&, std::uint64_t) { ++count; });
  return count;
}

std::map<std::uint64_t, std::uint64_t> syt_descent_histogram(const SkewShape& d, std::uint64_t budget) {
  // Dense counting over the 2^(n-1) masks, compacted at the end.
  const int n = d.size();
  if (n > 30) throw std::invalid_argument("shape too large for descent histogram");
  std::vector<std::uint64_t> dense(n <= 1 ? 1 : (std::size_t{1} << (n - 1)), 0);
  walk_syt(d, budget, [&](const std::vector<int>&, std::uint64_t mask) { ++dense[mask]; });
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::size_t mask = 0; mask < dense.size(); ++mask) {
    if (dense[mask] != 0) out.emplace(mask, dense[mask]);
  }
  return out;
}

bool is_lattice(const SemistandardFilling& t) {
  std::vector<int> counts;
  for (const auto& row : t.rows()) {
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const int v = *it;
      if (static_cast<int>(counts.size()) < v) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
      if (v > 1 && counts[static_cast<std::size_t>(v - 1)] > counts[static_cast<std::size_t>(v - 2)]) return false;
    }
  }
  return true;
}

namespace {

// Fills cells in reading order (rows top to bottom, each right to left) keeping the
// filling semistandard and the reading word a lattice word; leaf(grid, counts).
template <class Leaf>
void walk_lr(const SkewShape& d, Leaf&& leaf) {
  std::vector<Cell> order;
  for (int r = 0; r < d.row_count(); ++r) {
    const RowSpan& span = d.rows()[static_cast<std::size_t>(r)];
    for (int c = span.end - 1; c >= span.begin; --c) order.push_back({r, c});
  }
  RowEntries grid(static_cast<std::size_t>(d.row_count()));
  for (int r = 0; r < d.row_count(); ++r) {
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(d.rows()[static_cast<std::size_t>(r)].length()), 0);
  }
  std::vector<int> counts(static_cast<std::size_t>(d.size()) + 1, 0);
  int used = 0;  // largest value placed so far

  auto rec = [&](auto& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      leaf(static_cast<const RowEntries&>(grid), std::vector<int>(counts.begin(), counts.begin() + used));
      return;
    }
    const Cell cell = order[pos];
    const RowSpan& span = d.rows()[static_cast<std::size_t>(cell.row)];
    int lo = 1;
    int hi = used + 1;
    if (cell.col + 1 < span.end) hi = std::min(hi, at(d, grid, cell.row, cell.col + 1));
    if (d.contains({cell.row - 1, cell.col})) lo = at(d, grid, cell.row - 1, cell.col) + 1;
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && counts[static_cast<std::size_t>(v - 1)] + 1 > counts[static_cast<std::size_t>(v - 2)]) continue;
      ++counts[static_cast<std::size_t>(v - 1)];
      const int saved_used = used;
      used = std::max(used, v);
      grid[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col - span.begin)] = v;
      self(self, pos + 1);
      used = saved_used;
      --counts[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<SemistandardFilling> enumerate_lr_tableaux(const SkewShape& d) {
  std::vector<SemistandardFilling> out;
  walk_lr(d, [&](const RowEntries& grid, const std::vector<int>&) { out.emplace_back(d, grid); });
  return out;
}

SchurExpansion lr_expansion(const SkewShape& d) {
  SchurExpansion out(d.size());
  walk_lr(d, [&](const RowEntries&, std::vector<int> content) { out.add(Partition(std::move(content)), 1); });
  return out;
}

}  // namespace qsfmf
