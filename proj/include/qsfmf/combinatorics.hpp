#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsfmf {

/// Thrown when an enumeration would visit more tableaux than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kUnlimited = UINT64_MAX;

/// A finite sequence of positive integers. Ordered lexicographically by parts.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// |alpha|, the sum of the parts.
  int size() const { return size_; }
  /// l(alpha), the number of parts.
  std::size_t length() const { return parts_.size(); }
  /// w(alpha), the largest part (0 for the empty composition).
  int width() const;
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A composition with weakly decreasing parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  explicit Partition(Composition parts);

  const Composition& composition() const { return parts_; }
  operator const Composition&() const { return parts_; }  // NOLINT(google-explicit-constructor)

  std::span<const int> parts() const { return parts_.parts(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }
  int size() const { return parts_.size(); }
  std::size_t length() const { return parts_.length(); }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  Composition parts_;
};

/// A subset of [n-1] for a fixed degree n, stored as a bit mask (bit i-1 <=> member i).
class DescentSet {
 public:
  static constexpr int kMaxDegree = 64;

  DescentSet() = default;
  DescentSet(int degree, std::uint64_t mask);
  DescentSet(int degree, std::initializer_list<int> members);
  static DescentSet from_members(int degree, std::span<const int> members);

  int degree() const { return degree_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const;
  std::vector<int> members() const;
  int count() const;
  DescentSet complement() const;
  bool is_subset_of(const DescentSet& other) const;

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

 private:
  int degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Half-open column interval [begin, end) occupied by one row of a skew shape.
struct RowSpan {
  int begin = 0;
  int end = 0;
  int length() const { return end - begin; }
  friend bool operator==(const RowSpan&, const RowSpan&) = default;
  friend auto operator<=>(const RowSpan&, const RowSpan&) = default;
};

/// A skew diagram lambda/mu held in canonical basic form: no empty rows or columns,
/// translated so that the top row is row 0 and the leftmost occupied column is 0.
/// Two shapes compare equal iff their cell sets agree after this normalization.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(const Partition& outer, const Partition& inner);
  explicit SkewShape(const Partition& outer) : SkewShape(outer, Partition{}) {}

  /// Builds a shape from any cell set that is a translated skew diagram, possibly with
  /// empty rows or columns. Throws std::invalid_argument otherwise.
  static SkewShape from_cells(std::vector<Cell> cells);
  /// Rows listed top to bottom; begins and ends must be weakly decreasing downward.
  static SkewShape from_rows(std::vector<RowSpan> rows);

  const std::vector<RowSpan>& rows() const { return rows_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int column_count() const;
  bool contains(Cell c) const;

  /// The (outer, inner) presentation of the canonical form.
  Partition outer() const;
  Partition inner() const;
  bool is_straight() const;
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  /// Orders by (outer, inner).
  friend std::strong_ordering operator<=>(const SkewShape& a, const SkewShape& b);

 private:
  std::vector<RowSpan> rows_;
  int size_ = 0;
};

DescentSet descent_set_of(const Composition& alpha);
Composition composition_of(const DescentSet& s);

Composition reverse(const Composition& alpha);
Composition complement(const Composition& alpha);
/// True iff beta is obtained from alpha by summing runs of consecutive parts.
bool refines(const Composition& alpha, const Composition& beta);
Composition concat(const Composition& alpha, const Composition& beta);
Partition sort_to_partition(const Composition& alpha);
/// All distinct orderings of the parts of lambda, in lexicographic order.
std::vector<Composition> rearrangements(const Partition& lambda);
Partition conjugate(const Partition& lambda);

SkewShape transpose_shape(const SkewShape& d);
SkewShape rotate180(const SkewShape& d);
/// d2 placed strictly north-east of d1 with no shared rows or columns.
SkewShape disjoint_union(const SkewShape& d1, const SkewShape& d2);
bool is_connected(const SkewShape& d);

struct RowColumnPartitions {
  Partition rows;
  Partition columns;
};
RowColumnPartitions row_column_partitions(const SkewShape& d);

/// (k, k, ..., k) with `count` parts.
Composition repeated(int part, int count);

std::vector<Composition> enumerate_compositions(int n);
std::vector<Partition> enumerate_partitions(int n);
std::vector<SkewShape> enumerate_skew_shapes(int n);

Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);
/// Accepts "outer=3,2,2,1 inner=1,1"; the inner part may be omitted.
SkewShape parse_skew_shape(std::string_view text);

std::string to_string(const Composition& alpha);
std::string to_string(const Partition& lambda);
std::string to_string(const DescentSet& s);
std::string to_string(const SkewShape& d);

}  // namespace qsfmf
