#include "qsfmf/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

namespace qsfmf {

namespace {

std::uint64_t full_mask(int degree) {
  return degree <= 1 ? 0 : (std::uint64_t{1} << (degree - 1)) - 1;
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Drops empty rows, deletes empty columns and translates to the origin.
std::vector<RowSpan> canonicalize(std::vector<RowSpan> rows) {
  std::erase_if(rows, [](const RowSpan& r) { return r.length() <= 0; });
  if (rows.empty()) return rows;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].begin < rows[i + 1].begin || rows[i].end < rows[i + 1].end) {
      throw std::invalid_argument("rows do not form a skew diagram");
    }
  }
  int max_end = 0;
  for (const auto& r : rows) max_end = std::max(max_end, r.end);
  int min_begin = rows.back().begin;
  std::vector<int> covered(static_cast<std::size_t>(max_end - min_begin), 0);
  for (const auto& r : rows) {
    for (int c = r.begin; c < r.end; ++c) covered[static_cast<std::size_t>(c - min_begin)] = 1;
  }
  // new_index[c] = number of covered columns strictly left of c
  std::vector<int> new_index(covered.size() + 1, 0);
  for (std::size_t c = 0; c < covered.size(); ++c) new_index[c + 1] = new_index[c] + covered[c];
  for (auto& r : rows) {
    r.begin = new_index[static_cast<std::size_t>(r.begin - min_begin)];
    r.end = new_index[static_cast<std::size_t>(r.end - min_begin)];
  }
  return rows;
}

}  // namespace

// ---- Composition ----

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    size_ += p;
  }
}

int Composition::width() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

// ---- Partition ----

Partition::Partition(std::initializer_list<int> parts) : Partition(Composition(parts)) {}

Partition::Partition(std::vector<int> parts) : Partition(Composition(std::move(parts))) {}

Partition::Partition(Composition parts) : parts_(std::move(parts)) {
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

// ---- DescentSet ----

DescentSet::DescentSet(int degree, std::uint64_t mask) : degree_(degree), mask_(mask) {
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("descent set degree out of range");
  if ((mask & ~full_mask(degree)) != 0) throw std::invalid_argument("descent outside [n-1]");
}

DescentSet::DescentSet(int degree, std::initializer_list<int> members)
    : DescentSet(from_members(degree, std::span<const int>(members.begin(), members.size()))) {}

DescentSet DescentSet::from_members(int degree, std::span<const int> members) {
  std::uint64_t mask = 0;
  for (int i : members) {
    if (i < 1 || i >= degree) throw std::invalid_argument("descent outside [n-1]");
    mask |= std::uint64_t{1} << (i - 1);
  }
  return DescentSet(degree, mask);
}

bool DescentSet::contains(int i) const {
  return i >= 1 && i < degree_ && ((mask_ >> (i - 1)) & 1U) != 0;
}

std::vector<int> DescentSet::members() const {
  std::vector<int> out;
  for (int i = 1; i < degree_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int DescentSet::count() const { return std::popcount(mask_); }

DescentSet DescentSet::complement() const { return DescentSet(degree_, full_mask(degree_) & ~mask_); }

bool DescentSet::is_subset_of(const DescentSet& other) const {
  return degree_ == other.degree_ && (mask_ & ~other.mask_) == 0;
}

// ---- SkewShape ----

SkewShape::SkewShape(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) throw std::invalid_argument("inner partition is not contained in outer");
  std::vector<RowSpan> rows;
  for (std::size_t i = 0; i < outer.length(); ++i) {
    int mu = i < inner.length() ? inner[i] : 0;
    if (mu > outer[i]) throw std::invalid_argument("inner partition is not contained in outer");
    rows.push_back({mu, outer[i]});
  }
  *this = from_rows(std::move(rows));
}

SkewShape SkewShape::from_rows(std::vector<RowSpan> rows) {
  SkewShape d;
  d.rows_ = canonicalize(std::move(rows));
  for (const auto& r : d.rows_) d.size_ += r.length();
  return d;
}

SkewShape SkewShape::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw std::invalid_argument("duplicate cell");
  }
  std::vector<RowSpan> rows;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j + 1 < cells.size() && cells[j + 1].row == cells[i].row) {
      if (cells[j + 1].col != cells[j].col + 1) throw std::invalid_argument("row is not contiguous");
      ++j;
    }
    rows.push_back({cells[i].col, cells[j].col + 1});
    i = j + 1;
  }
  return from_rows(std::move(rows));
}

int SkewShape::column_count() const { return rows_.empty() ? 0 : rows_.front().end; }

bool SkewShape::contains(Cell c) const {
  if (c.row < 0 || c.row >= row_count()) return false;
  const auto& r = rows_[static_cast<std::size_t>(c.row)];
  return c.col >= r.begin && c.col < r.end;
}

Partition SkewShape::outer() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(r.end);
  return Partition(std::move(parts));
}

Partition SkewShape::inner() const {
  std::vector<int> parts;
  for (const auto& r : rows_) {
    if (r.begin > 0) parts.push_back(r.begin);
  }
  return Partition(std::move(parts));
}

bool SkewShape::is_straight() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const RowSpan& r) { return r.begin == 0; });
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 0; i < row_count(); ++i) {
    for (int c = rows_[static_cast<std::size_t>(i)].begin; c < rows_[static_cast<std::size_t>(i)].end; ++c) {
      out.push_back({i, c});
    }
  }
  return out;
}

std::strong_ordering operator<=>(const SkewShape& a, const SkewShape& b) {
  if (auto c = a.outer() <=> b.outer(); c != 0) return c;
  return a.inner() <=> b.inner();
}

// ---- composition operations ----

DescentSet descent_set_of(const Composition& alpha) {
  std::uint64_t mask = 0;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    partial += alpha[i];
    mask |= std::uint64_t{1} << (partial - 1);
  }
  return DescentSet(alpha.size(), mask);
}

Composition composition_of(const DescentSet& s) {
  std::vector<int> parts;
  int previous = 0;
  for (int i = 1; i < s.degree(); ++i) {
    if (s.contains(i)) {
      parts.push_back(i - previous);
      previous = i;
    }
  }
  if (s.degree() > 0) parts.push_back(s.degree() - previous);
  return Composition(std::move(parts));
}

Composition reverse(const Composition& alpha) {
  return Composition(std::vector<int>(alpha.parts().rbegin(), alpha.parts().rend()));
}

Composition complement(const Composition& alpha) {
  return composition_of(descent_set_of(alpha).complement());
}

bool refines(const Composition& alpha, const Composition& beta) {
  if (alpha.size() != beta.size()) return false;
  return descent_set_of(beta).is_subset_of(descent_set_of(alpha));
}

Composition concat(const Composition& alpha, const Composition& beta) {
  std::vector<int> parts(alpha.begin(), alpha.end());
  parts.insert(parts.end(), beta.begin(), beta.end());
  return Composition(std::move(parts));
}

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> parts(alpha.begin(), alpha.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Composition> rearrangements(const Partition& lambda) {
  std::vector<int> parts(lambda.begin(), lambda.end());
  std::sort(parts.begin(), parts.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  int width = lambda.empty() ? 0 : lambda[0];
  for (int c = 1; c <= width; ++c) {
    parts.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [c](int p) { return p >= c; })));
  }
  return Partition(std::move(parts));
}

Composition repeated(int part, int count) {
  return Composition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), part));
}

// ---- shape operations ----

SkewShape transpose_shape(const SkewShape& d) {
  std::vector<Cell> cells;
  for (const Cell& c : d.cells()) cells.push_back({c.col, c.row});
  return SkewShape::from_cells(std::move(cells));
}

SkewShape rotate180(const SkewShape& d) {
  const int rows = d.row_count();
  const int cols = d.column_count();
  std::vector<Cell> cells;
  for (const Cell& c : d.cells()) cells.push_back({rows - 1 - c.row, cols - 1 - c.col});
  return SkewShape::from_cells(std::move(cells));
}

SkewShape disjoint_union(const SkewShape& d1, const SkewShape& d2) {
  const int shift = d1.column_count();
  std::vector<RowSpan> rows;
  for (const auto& r : d2.rows()) rows.push_back({r.begin + shift, r.end + shift});
  for (const auto& r : d1.rows()) rows.push_back(r);
  return SkewShape::from_rows(std::move(rows));
}

bool is_connected(const SkewShape& d) {
  const auto& rows = d.rows();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].begin >= rows[i + 1].end) return false;
  }
  return true;
}

RowColumnPartitions row_column_partitions(const SkewShape& d) {
  std::vector<int> row_lengths;
  for (const auto& r : d.rows()) row_lengths.push_back(r.length());
  std::vector<int> col_lengths(static_cast<std::size_t>(d.column_count()), 0);
  for (const auto& r : d.rows()) {
    for (int c = r.begin; c < r.end; ++c) ++col_lengths[static_cast<std::size_t>(c)];
  }
  std::sort(row_lengths.begin(), row_lengths.end(), std::greater<>());
  std::sort(col_lengths.begin(), col_lengths.end(), std::greater<>());
  return {Partition(std::move(row_lengths)), Partition(std::move(col_lengths))};
}

// ---- enumeration ----

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n == 0) return {Composition{}};
  if (n > DescentSet::kMaxDegree) throw std::invalid_argument("degree too large to enumerate");
  std::vector<Composition> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(composition_of(DescentSet(n, mask)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SkewShape> enumerate_skew_shapes(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<SkewShape> out;
  // Rows are built bottom-up; each new row sits above the previous one with a weakly
  // larger begin and end, and begin <= end of the row below so no column is empty.
  std::vector<RowSpan> bottom_up;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(SkewShape::from_rows(std::vector<RowSpan>(bottom_up.rbegin(), bottom_up.rend())));
      return;
    }
    const RowSpan below = bottom_up.back();
    for (int begin = below.begin; begin <= below.end; ++begin) {
      for (int end = std::max(below.end, begin + 1); end - begin <= remaining; ++end) {
        bottom_up.push_back({begin, end});
        rec(remaining - (end - begin));
        bottom_up.pop_back();
      }
    }
  };
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int len = 1; len <= n; ++len) {
    bottom_up.push_back({0, len});
    rec(n - len);
    bottom_up.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- text ----

Composition parse_composition(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Composition{};
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
      throw std::invalid_argument("malformed composition: expected comma-separated positive integers");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

Partition parse_partition(std::string_view text) {
  Composition parts = parse_composition(text);
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw std::invalid_argument("malformed partition: parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

SkewShape parse_skew_shape(std::string_view text) {
  Partition outer;
  Partition inner;
  bool have_outer = false;
  text = trim(text);
  while (!text.empty()) {
    const auto space = text.find(' ');
    std::string_view token = text.substr(0, space);
    if (token.starts_with("outer=")) {
      outer = parse_partition(token.substr(6));
      have_outer = true;
    } else if (token.starts_with("inner=")) {
      inner = parse_partition(token.substr(6));
    } else {
      throw std::invalid_argument("malformed skew shape: expected outer=... [inner=...]");
    }
    if (space == std::string_view::npos) break;
    text = trim(text.substr(space + 1));
  }
  if (!have_outer) throw std::invalid_argument("malformed skew shape: missing outer=");
  return SkewShape(outer, inner);
}

std::string to_string(const Composition& alpha) { return join(alpha.parts()); }

std::string to_string(const Partition& lambda) { return join(lambda.parts()); }

std::string to_string(const DescentSet& s) {
  auto members = s.members();
  return "{" + join(members) + "}";
}

std::string to_string(const SkewShape& d) {
  std::string out = "outer=" + to_string(d.outer());
  if (Partition inner = d.inner(); !inner.empty()) out += " inner=" + to_string(inner);
  return out;
}

}  // namespace qsfmf
