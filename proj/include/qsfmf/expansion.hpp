#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "qsfmf/combinatorics.hpp"

namespace qsfmf {

enum class Basis { F, M, Schur };

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

/// A degree-n linear combination with positive integer coefficients over one basis
/// of the quasisymmetric functions. Keys iterate in lexicographic order; zero
/// coefficients are never stored.
template <Basis B>
class Expansion {
 public:
  using Key = std::conditional_t<B == Basis::Schur, Partition, Composition>;
  static constexpr Basis basis = B;

  explicit Expansion(int degree = 0) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  /// The unit F_0 = 1 (or M_0, s_0), the single term on the empty index.
  static Expansion one() {
    Expansion e(0);
    e.add(Key{}, 1);
    return e;
  }

  int degree() const { return degree_; }
  const std::map<Key, std::uint64_t>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  std::uint64_t coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  std::uint64_t coefficient_sum() const {
    std::uint64_t total = 0;
    for (const auto& [key, c] : terms_) total = checked_add(total, c);
    return total;
  }

  void add(const Key& key, std::uint64_t c) {
    if (key.size() != degree_) {
      throw std::invalid_argument("degree mismatch: index " + to_string(key) + " in degree " +
                                  std::to_string(degree_));
    }
    if (c == 0) return;
    auto& slot = terms_[key];
    slot = checked_add(slot, c);
  }

  Expansion& operator+=(const Expansion& other) {
    if (other.degree_ != degree_) throw std::invalid_argument("degree mismatch in expansion sum");
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
  }

  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }

  /// Multiplies every coefficient by k (k = 0 yields the zero expansion).
  Expansion scaled(std::uint64_t k) const {
    Expansion out(degree_);
    for (const auto& [key, c] : terms_) out.add(key, checked_mul(c, k));
    return out;
  }

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  int degree_ = 0;
  std::map<Key, std::uint64_t> terms_;
};

using FExpansion = Expansion<Basis::F>;
using MExpansion = Expansion<Basis::M>;
using SchurExpansion = Expansion<Basis::Schur>;

}  // namespace qsfmf
