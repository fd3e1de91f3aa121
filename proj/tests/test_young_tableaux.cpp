#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qsfmf/young_tableaux.hpp"

using namespace qsfmf;

namespace {

const SkewShape kExampleShape({3, 2, 2, 1}, {1, 1});

}  // namespace

TEST_CASE("standard tableau validation") {
  CHECK_NOTHROW(StandardYoungTableau(SkewShape({2, 2}), {{1, 2}, {3, 4}}));
  CHECK_NOTHROW(StandardYoungTableau(SkewShape({2, 2}), {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(StandardYoungTableau(SkewShape({2, 2}), {{1, 4}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardYoungTableau(SkewShape({2, 2}), {{2, 1}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardYoungTableau(SkewShape({2, 2}), {{1, 2}, {3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardYoungTableau(SkewShape({2, 2}), {{1, 2}, {3}}), std::invalid_argument);

  const StandardYoungTableau t(kExampleShape, {{2, 3}, {4}, {1, 6}, {5}});
  CHECK(t.entry({0, 1}) == 2);
  CHECK(t.entry({2, 0}) == 1);
  CHECK(t.cell_of(6) == Cell{2, 1});
}

TEST_CASE("descent sets of standard tableaux") {
  const StandardYoungTableau t(kExampleShape, {{2, 3}, {4}, {1, 6}, {5}});
  CHECK(des_p(t) == DescentSet(6, {3, 4}));
  CHECK(com_p(t) == Composition{3, 1, 2});
  CHECK(des_p(StandardYoungTableau(SkewShape({4}), {{1, 2, 3, 4}})).count() == 0);
  CHECK(des_p(StandardYoungTableau(SkewShape({1, 1, 1}), {{1}, {2}, {3}})) == DescentSet(3, {1, 2}));
  CHECK(com_p(StandardYoungTableau(SkewShape({2, 2}), {{1, 3}, {2, 4}})) == Composition{1, 2, 1});
  CHECK(com_p(StandardYoungTableau(SkewShape({5}), {{1, 2, 3, 4, 5}})) == Composition{5});
}

TEST_CASE("small tableau counts") {
  CHECK(count_syt(SkewShape({2, 2})) == 2);
  CHECK(count_syt(SkewShape({6})) == 1);
  CHECK(count_syt(SkewShape({3, 2, 1})) == 16);
  const auto two = enumerate_syt(SkewShape({2, 2}));
  REQUIRE(two.size() == 2);
  std::set<RowEntries> fillings{two[0].rows(), two[1].rows()};
  CHECK(fillings == std::set<RowEntries>{{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
}

TEST_CASE("tableau counts of straight shapes match the hook length formula") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      CHECK_MESSAGE(count_syt(SkewShape(lambda)) == oracle::hook_length_count(lambda), to_string(lambda));
    }
  }
}

TEST_CASE("descent histograms match a permutation brute force on every skew shape") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : enumerate_skew_shapes(n)) {
      CHECK_MESSAGE(syt_descent_histogram(d) == oracle::syt_descents_by_permutation(d), to_string(d));
    }
  }
}

TEST_CASE("enumerated tableaux are distinct and valid") {
  for (const auto& d : enumerate_skew_shapes(6)) {
    std::set<RowEntries> seen;
    std::uint64_t k = 0;
    for_each_syt(d, [&](const StandardYoungTableau& t) {
      seen.insert(t.rows());
      CHECK_NOTHROW(StandardYoungTableau(d, t.rows()));
      ++k;
    });
    CHECK(seen.size() == k);
  }
}

TEST_CASE("tableau budget") {
  CHECK_THROWS_AS(count_syt(SkewShape({3, 2, 1}), 10), BudgetExceeded);
  CHECK(count_syt(SkewShape({3, 2, 1}), 16) == 16);
}

TEST_CASE("lattice words") {
  const SemistandardFilling lr(kExampleShape, {{1, 1}, {2}, {1, 3}, {2}});
  CHECK(is_lattice(lr));
  CHECK(lr.content() == std::vector<int>{3, 2, 1});
  CHECK(is_lattice(SemistandardFilling(SkewShape({4}), {{1, 1, 1, 1}})));
  CHECK_FALSE(is_lattice(SemistandardFilling(SkewShape({1}), {{2}})));
  CHECK_FALSE(is_lattice(SemistandardFilling(SkewShape({2}), {{1, 2}})));
  CHECK_THROWS_AS(SemistandardFilling(SkewShape({2, 2}), {{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("Littlewood-Richardson expansions") {
  const SchurExpansion u = lr_expansion(disjoint_union(SkewShape({2}), SkewShape({1})));
  CHECK(u.term_count() == 2);
  CHECK(u.coefficient(Partition{3}) == 1);
  CHECK(u.coefficient(Partition{2, 1}) == 1);

  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const SchurExpansion e = lr_expansion(SkewShape(lambda));
      CHECK(e.term_count() == 1);
      CHECK(e.coefficient(lambda) == 1);
    }
  }

  CHECK(lr_expansion(rotate180(SkewShape({2, 1}))) == lr_expansion(SkewShape({2, 1})));
  // s_{(2,1)/(1)} = s_2 + s_11; s_{(3,2,1)/(2,1)} = s_3 + 2 s_21 + s_111
  const SchurExpansion a = lr_expansion(SkewShape({2, 1}, {1}));
  CHECK(a.coefficient(Partition{2}) == 1);
  CHECK(a.coefficient(Partition{1, 1}) == 1);
  const SchurExpansion b = lr_expansion(SkewShape({3, 2, 1}, {2, 1}));
  CHECK(b.coefficient(Partition{3}) == 1);
  CHECK(b.coefficient(Partition{2, 1}) == 2);
  CHECK(b.coefficient(Partition{1, 1, 1}) == 1);
}

TEST_CASE("Littlewood-Richardson properties over all small skew shapes") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate_skew_shapes(n)) {
      const SchurExpansion e = lr_expansion(d);
      CHECK(e.degree() == n);
      CHECK(lr_expansion(rotate180(d)) == e);

      // transposing the shape conjugates every index
      SchurExpansion conj(n);
      for (const auto& [lambda, c] : e.terms()) conj.add(conjugate(lambda), c);
      CHECK(lr_expansion(transpose_shape(d)) == conj);

      // counting standard tableaux on both sides
      std::uint64_t total = 0;
      for (const auto& [lambda, c] : e.terms()) total += c * oracle::hook_length_count(lambda);
      CHECK(total == count_syt(d));

      // the row and column partitions each appear exactly once
      const auto rc = row_column_partitions(d);
      CHECK(e.coefficient(rc.rows) == 1);
      CHECK(e.coefficient(conjugate(rc.columns)) == 1);
    }
  }
}
