#include "qsfmf/composition_tableaux.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

namespace qsfmf {

namespace {

bool first_of_its_size(std::span<const int> parts, std::size_t begin, std::size_t i) {
  for (std::size_t j = begin; j < i; ++j) {
    if (parts[j] == parts[i]) return false;
  }
  return true;
}

// A part at row i may shrink by one only if no earlier row has the resulting size.
bool may_decrement(std::span<const int> parts, std::size_t begin, std::size_t i) {
  if (parts[i] < 2) return false;
  for (std::size_t j = begin; j < i; ++j) {
    if (parts[j] == parts[i] - 1) return false;
  }
  return true;
}

// Calls leaf(cells, descent_mask) per SCT, where cells[e-1] is the cell holding e in
// final-shape coordinates. Removed leading rows are tracked by `top`, so the current
// composition is always parts[top..].
template <class Leaf>
void walk_sct(const Composition& alpha, std::uint64_t budget, Leaf&& leaf) {
  const int n = alpha.size();
  const std::size_t row_count = alpha.length();
  std::vector<int> len(alpha.begin(), alpha.end());
  std::vector<Cell> cells(static_cast<std::size_t>(n));
  std::uint64_t produced = 0;

  auto rec = [&](auto& self, int entry, std::size_t top, std::uint64_t mask) -> void {
    if (entry > n) {
      if (++produced > budget) {
        throw BudgetExceeded("tableau budget of " + std::to_string(budget) + " exceeded for composition " +
                             to_string(alpha));
      }
      leaf(static_cast<const std::vector<Cell>&>(cells), mask);
      return;
    }
    auto place = [&](Cell cell) {
      cells[static_cast<std::size_t>(entry - 1)] = cell;
      std::uint64_t next = mask;
      if (entry > 1 && cell.col >= cells[static_cast<std::size_t>(entry - 2)].col) {
        next |= std::uint64_t{1} << (entry - 2);
      }
      return next;
    };
    if (len[top] == 1) {
      const std::uint64_t next = place({static_cast<int>(top), 0});
      len[top] = 0;
      self(self, entry + 1, top + 1, next);
      len[top] = 1;
    }
    for (std::size_t i = top; i < row_count; ++i) {
      if (!may_decrement(len, top, i)) continue;
      const std::uint64_t next = place({static_cast<int>(i), len[i] - 1});
      --len[i];
      self(self, entry + 1, top, next);
      ++len[i];
    }
  };
  rec(rec, 1, 0, 0);
}

StandardCompositionTableau from_cells(const Composition& alpha, const std::vector<Cell>& cells) {
  RowEntries rows;
  for (int part : alpha) rows.emplace_back(static_cast<std::size_t>(part), 0);
  for (std::size_t e = 0; e < cells.size(); ++e) {
    rows[static_cast<std::size_t>(cells[e].row)][static_cast<std::size_t>(cells[e].col)] = static_cast<int>(e) + 1;
  }
  return StandardCompositionTableau(CompositionFilling{alpha, std::move(rows)});
}

// Locates each entry; empty result if the filling is not a bijection onto 1..n.
std::vector<Cell> locate(const CompositionFilling& f) {
  const int n = f.shape.size();
  if (f.rows.size() != f.shape.length()) return {};
  std::vector<Cell> cells(static_cast<std::size_t>(n), Cell{-1, -1});
  for (std::size_t r = 0; r < f.rows.size(); ++r) {
    if (static_cast<int>(f.rows[r].size()) != f.shape[r]) return {};
    for (std::size_t c = 0; c < f.rows[r].size(); ++c) {
      const int v = f.rows[r][c];
      if (v < 1 || v > n || cells[static_cast<std::size_t>(v - 1)].row != -1) return {};
      cells[static_cast<std::size_t>(v - 1)] = {static_cast<int>(r), static_cast<int>(c)};
    }
  }
  return cells;
}

}  // namespace

Composition apply(const Composition& beta, CoverMove move) {
  std::vector<int> parts(beta.begin(), beta.end());
  if (move.kind == CoverMove::Kind::PrependRow) {
    parts.insert(parts.begin(), 1);
    return Composition(std::move(parts));
  }
  if (move.row < 0 || static_cast<std::size_t>(move.row) >= parts.size() ||
      !first_of_its_size(parts, 0, static_cast<std::size_t>(move.row))) {
    throw std::invalid_argument("increment must target the first part of its size");
  }
  ++parts[static_cast<std::size_t>(move.row)];
  return Composition(std::move(parts));
}

std::vector<CoverMove> cover_moves(const Composition& beta) {
  std::vector<CoverMove> moves{{CoverMove::Kind::PrependRow, 0}};
  for (std::size_t i = 0; i < beta.length(); ++i) {
    if (first_of_its_size(beta.parts(), 0, i)) moves.push_back({CoverMove::Kind::IncrementPart, static_cast<int>(i)});
  }
  return moves;
}

std::vector<Composition> covers_up(const Composition& beta) {
  std::vector<Composition> out;
  for (const CoverMove& m : cover_moves(beta)) out.push_back(apply(beta, m));
  return out;
}

std::vector<Composition> covers_down(const Composition& alpha) {
  if (alpha.empty()) throw std::invalid_argument("the empty composition covers nothing");
  std::vector<Composition> out;
  if (alpha[0] == 1) out.emplace_back(std::vector<int>(alpha.begin() + 1, alpha.end()));
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (!may_decrement(alpha.parts(), 0, i)) continue;
    std::vector<int> parts(alpha.begin(), alpha.end());
    --parts[i];
    out.emplace_back(std::move(parts));
  }
  return out;
}

bool is_valid_sct(const CompositionFilling& filling) {
  const std::vector<Cell> cells = locate(filling);
  if (static_cast<int>(cells.size()) != filling.shape.size()) return false;
  std::vector<int> len(filling.shape.begin(), filling.shape.end());
  std::size_t top = 0;
  for (const Cell& cell : cells) {
    const auto r = static_cast<std::size_t>(cell.row);
    if (r < top || cell.col != len[r] - 1) return false;
    if (len[r] == 1) {
      if (r != top) return false;
      len[r] = 0;
      ++top;
    } else if (may_decrement(len, top, r)) {
      --len[r];
    } else {
      return false;
    }
  }
  return true;
}

StandardCompositionTableau::StandardCompositionTableau(CompositionFilling filling) : filling_(std::move(filling)) {
  if (!is_valid_sct(filling_)) throw std::invalid_argument("not a standard composition tableau");
  cell_of_ = locate(filling_);
}

int StandardCompositionTableau::entry(Cell c) const {
  if (c.row < 0 || static_cast<std::size_t>(c.row) >= rows().size() || c.col < 0 ||
      static_cast<std::size_t>(c.col) >= rows()[static_cast<std::size_t>(c.row)].size()) {
    throw std::out_of_range("cell not in shape");
  }
  return rows()[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
}

Cell StandardCompositionTableau::cell_of(int entry) const {
  if (entry < 1 || entry > size()) throw std::out_of_range("entry out of range");
  return cell_of_[static_cast<std::size_t>(entry - 1)];
}

DescentSet des_c(const StandardCompositionTableau& t) {
  std::uint64_t mask = 0;
  for (int i = 1; i < t.size(); ++i) {
    if (t.cell_of(i + 1).col >= t.cell_of(i).col) mask |= std::uint64_t{1} << (i - 1);
  }
  return DescentSet(t.size(), mask);
}

Composition com_c(const StandardCompositionTableau& t) { return composition_of(des_c(t)); }

StandardCompositionTableau canonical_filling(const Composition& alpha) {
  RowEntries rows;
  int partial = 0;
  for (int part : alpha) {
    partial += part;
    std::vector<int> row;
    for (int k = 0; k < part; ++k) row.push_back(partial - k);
    rows.push_back(std::move(row));
  }
  return StandardCompositionTableau(CompositionFilling{alpha, std::move(rows)});
}

CompositionFilling shift(const StandardCompositionTableau& t, int m) {
  CompositionFilling out = t.filling();
  for (auto& row : out.rows) {
    for (int& v : row) v += m;
  }
  return out;
}

void for_each_sct(const Composition& alpha, const std::function<void(const StandardCompositionTableau&)>& visit,
                  std::uint64_t budget) {
  walk_sct(alpha, budget, [&](const std::vector<Cell>& cells, std::uint64_t) { visit(from_cells(alpha, cells)); });
}

std::vector<StandardCompositionTableau> enumerate_sct(const Composition& alpha, std::uint64_t budget) {
  std::vector<StandardCompositionTableau> out;
  for_each_sct(alpha, [&](const StandardCompositionTableau& t) { out.push_back(t); }, budget);
  return out;
}

SctSummary sct_summary(const Composition& alpha, std::uint64_t budget) {
  static std::shared_mutex mutex;
  static std::map<Composition, SctSummary> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(alpha); it != cache.end()) {
      if (it->second.count > budget) {
        throw BudgetExceeded("tableau budget of " + std::to_string(budget) + " exceeded for composition " +
                             to_string(alpha));
      }
      return it->second;
    }
  }
  SctSummary summary;
  walk_sct(alpha, budget, [&](const std::vector<Cell>&, std::uint64_t mask) {
    ++summary.count;
    ++summary.descent_histogram[mask];
  });
  std::unique_lock lock(mutex);
  cache.emplace(alpha, summary);
  return summary;
}

}  // namespace qsfmf
