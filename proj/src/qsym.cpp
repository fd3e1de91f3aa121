#include "qsfmf/qsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qsfmf {

namespace {

FExpansion from_histogram(int degree, const std::map<std::uint64_t, std::uint64_t>& histogram) {
  FExpansion out(degree);
  for (const auto& [mask, count] : histogram) out.add(composition_of(DescentSet(degree, mask)), count);
  return out;
}

template <class Tableau, class Describe>
std::vector<CollisionWitness<Tableau>> collisions(const std::vector<Tableau>& tableaux, Describe&& describe) {
  // Keyed by descent composition so the output follows canonical order.
  std::map<Composition, std::vector<std::size_t>> by_descent;
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    auto& slot = by_descent[composition_of(describe(tableaux[i]))];
    if (slot.size() < 2) slot.push_back(i);
  }
  std::vector<CollisionWitness<Tableau>> out;
  for (const auto& [key, indices] : by_descent) {
    if (indices.size() < 2) continue;
    out.push_back({descent_set_of(key), tableaux[indices[0]], tableaux[indices[1]]});
  }
  return out;
}

const FExpansion& two_block_factor(int e) {
  static std::mutex mutex;
  static std::map<int, FExpansion> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(e);
  if (it == cache.end()) it = cache.emplace(e, qs_f(repeated(2, e), kUnlimited)).first;
  return it->second;
}

}  // namespace

FExpansion qs_f(const Composition& alpha, std::uint64_t budget) {
  return from_histogram(alpha.size(), sct_summary(alpha, budget).descent_histogram);
}

FExpansion skew_schur_f(const SkewShape& d, std::uint64_t budget) {
  return from_histogram(d.size(), syt_descent_histogram(d, budget));
}

FExpansion schur_f(const Partition& lambda, std::uint64_t budget) { return skew_schur_f(SkewShape(lambda), budget); }

FExpansion schur_via_qs(const Partition& lambda, std::uint64_t budget) {
  FExpansion out(lambda.size());
  for (const Composition& alpha : rearrangements(lambda)) out += qs_f(alpha, budget);
  return out;
}

MExpansion f_to_m(const FExpansion& e) {
  MExpansion out(e.degree());
  for (const auto& [alpha, c] : e.terms()) {
    const DescentSet s = descent_set_of(alpha);
    const std::uint64_t free = s.complement().mask();
    // every superset of set(alpha) is the descent set of a refinement of alpha
    std::uint64_t sub = free;
    while (true) {
      out.add(composition_of(DescentSet(e.degree(), s.mask() | sub)), c);
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return out;
}

FExpansion omega_f(const FExpansion& e) {
  FExpansion out(e.degree());
  for (const auto& [alpha, c] : e.terms()) out.add(complement(reverse(alpha)), c);
  return out;
}

bool is_fmf(const FExpansion& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& term) { return term.second == 1; });
}

std::size_t f_component_count(const FExpansion& e) { return e.term_count(); }

FExpansion qs_f_fast_12(const Composition& alpha) {
  if (std::any_of(alpha.begin(), alpha.end(), [](int p) { return p > 2; })) {
    throw std::invalid_argument("fast path needs every part in {1, 2}");
  }
  // Partial products: descent-composition prefix -> coefficient.
  std::map<std::vector<int>, std::uint64_t> partial{{{}, 1}};
  const auto parts = alpha.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int run = static_cast<int>(j - i);
    std::map<std::vector<int>, std::uint64_t> next;
    if (parts[i] == 1) {
      for (const auto& [prefix, c] : partial) {
        std::vector<int> key = prefix;
        key.insert(key.end(), static_cast<std::size_t>(run), 1);
        next.emplace(std::move(key), c);
      }
    } else {
      const FExpansion& factor = two_block_factor(run);
      for (const auto& [prefix, c] : partial) {
        for (const auto& [gamma, d] : factor.terms()) {
          std::vector<int> key = prefix;
          key.insert(key.end(), gamma.begin(), gamma.end());
          auto& slot = next[std::move(key)];
          slot = checked_add(slot, checked_mul(c, d));
        }
      }
    }
    partial = std::move(next);
    i = j;
  }
  FExpansion out(alpha.size());
  for (auto& [key, c] : partial) out.add(Composition(key), c);
  return out;
}

std::vector<CollisionWitness<StandardCompositionTableau>> multiplicity_witnesses(const Composition& alpha,
                                                                                 std::uint64_t budget) {
  return collisions(enumerate_sct(alpha, budget), [](const StandardCompositionTableau& t) { return des_c(t); });
}

std::vector<CollisionWitness<StandardYoungTableau>> multiplicity_witnesses(const SkewShape& d,
                                                                           std::uint64_t budget) {
  return collisions(enumerate_syt(d, budget), [](const StandardYoungTableau& t) { return des_p(t); });
}

}  // namespace qsfmf
