#include "qsfmf/classification.hpp"

#include <algorithm>

namespace qsfmf {

namespace {

Composition slice(const Composition& alpha, std::size_t from, std::size_t to) {
  return Composition(std::vector<int>(alpha.begin() + static_cast<std::ptrdiff_t>(from),
                                      alpha.begin() + static_cast<std::ptrdiff_t>(to)));
}

bool is_hook(const Partition& lambda) {
  return lambda.length() <= 1 || lambda[1] <= 1;
}

bool schur_listed(const Partition& lambda) {
  const int n = lambda.size();
  return lambda == Partition{3, 3} || lambda == Partition{4, 4} || (n >= 4 && lambda == Partition{n - 2, 2}) ||
         is_hook(lambda);
}

// (m) . gamma' . (middle) . gamma, gamma' in C2', gamma in C2, m >= 0 (absent when 0).
bool matches_prime_split(const Composition& alpha, int middle) {
  const std::size_t len = alpha.length();
  for (std::size_t lead = 0; lead <= std::min<std::size_t>(1, len); ++lead) {
    for (std::size_t q = lead + 2; q < len; ++q) {
      if (alpha[q] != middle) continue;
      if (in_c2_prime(slice(alpha, lead, q)) && in_c2(slice(alpha, q + 1, len))) return true;
    }
  }
  return false;
}

}  // namespace

bool in_c2(const Composition& alpha) {
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (alpha[i] == 1) continue;
    if (alpha[i] != 2 || i == 0 || alpha[i - 1] != 1) return false;
  }
  return true;
}

bool in_c2_prime(const Composition& alpha) {
  return !alpha.empty() && alpha[alpha.length() - 1] == 2 && in_c2(alpha);
}

bool predict_schur(const Partition& lambda) {
  if (lambda.empty()) return true;
  return schur_listed(lambda) || schur_listed(conjugate(lambda));
}

bool predict_skew(const SkewShape& d) {
  const int n = d.size();
  if (n == 0) return true;
  const SkewShape rotated = rotate180(d);
  const SkewShape variants[] = {d, transpose_shape(d), rotated, transpose_shape(rotated)};
  for (const SkewShape& v : variants) {
    if (v.is_straight() && schur_listed(v.outer())) return true;
    for (int k = 1; k < n; ++k) {
      if (v == disjoint_union(SkewShape(Partition{n - k}), SkewShape(Partition(repeated(1, k))))) return true;
    }
  }
  return false;
}

std::string_view to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::One:
      return "one";
    case ComponentClass::Two:
      return "two";
    case ComponentClass::More:
      return "more";
  }
  return "more";
}

ComponentClass predict_qs_components(const Composition& alpha) {
  const std::size_t len = alpha.length();
  if (in_c2(alpha) || (len >= 1 && in_c2(slice(alpha, 1, len)))) return ComponentClass::One;
  if (matches_prime_split(alpha, 2) || matches_prime_split(alpha, 3)) return ComponentClass::Two;
  if (len >= 2 && alpha[0] == 1 && alpha[1] == 3 && in_c2(slice(alpha, 2, len))) return ComponentClass::Two;
  return ComponentClass::More;
}

ComponentClass classify_components(const FExpansion& e) {
  switch (f_component_count(e)) {
    case 1:
      return ComponentClass::One;
    case 2:
      return ComponentClass::Two;
    default:
      return ComponentClass::More;
  }
}

bool predict_two_part(const Composition& alpha) {
  if (alpha.length() != 2) throw std::invalid_argument("two-part prediction needs exactly two parts");
  const int n = alpha.size();
  const int a = alpha[0];
  const int b = alpha[1];
  if (a == 1 || b == 1) return true;                // (n-1,1), (1,n-1)
  if (a == 2 || b == 2) return true;                // (n-2,2), (2,n-2); here n >= 4
  if (b == 3 && n >= 6) return true;                // (n-3,3)
  return alpha == Composition{3, 4} || alpha == Composition{4, 4} || alpha == Composition{4, 5};
}

bool predict_family(const Partition& lambda) {
  const int n = lambda.size();
  const auto parts = lambda.parts();
  const auto ones_from = [&](std::size_t i) {
    return std::all_of(parts.begin() + static_cast<std::ptrdiff_t>(std::min(i, parts.size())), parts.end(),
                       [](int p) { return p == 1; });
  };
  if (is_hook(lambda)) return true;
  if (lambda[0] >= 3 && lambda[1] == 2 && ones_from(2)) return true;  // (n-2-k, 2, 1^k)
  const auto twos = static_cast<std::size_t>(std::count(parts.begin(), parts.end(), 2));
  if (lambda[0] == 2 && twos >= 2 && twos <= 4 && ones_from(twos)) return true;  // (2^a, 1^(n-2a))
  if (n >= 7 && lambda.length() >= 3 && lambda[0] == 3 && lambda[1] == 2 && lambda[2] == 2 && ones_from(3)) {
    return true;  // (3, 2, 2, 1^(n-7))
  }
  return lambda == Partition{3, 3} || lambda == Partition{4, 3} || lambda == Partition{4, 4};
}

bool brute_family_fmf(const Partition& lambda, std::uint64_t budget) {
  const auto alphas = rearrangements(lambda);
  return std::all_of(alphas.begin(), alphas.end(), [&](const Composition& a) { return is_fmf(qs_f(a, budget)); });
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Schur:
      return "schur";
    case TheoremId::Skew:
      return "skew";
    case TheoremId::QsComponents:
      return "qs-components";
    case TheoremId::TwoPart:
      return "two-part";
    case TheoremId::Families:
      return "families";
  }
  return "schur";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId id : {TheoremId::Schur, TheoremId::Skew, TheoremId::QsComponents, TheoremId::TwoPart,
                       TheoremId::Families}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

WitnessRecord::Rows witness_rows(const StandardYoungTableau& t) {
  WitnessRecord::Rows rows;
  for (int r = 0; r < t.shape().row_count(); ++r) {
    std::vector<std::optional<int>> row(static_cast<std::size_t>(t.shape().rows()[static_cast<std::size_t>(r)].begin));
    for (int v : t.rows()[static_cast<std::size_t>(r)]) row.emplace_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

WitnessRecord::Rows witness_rows(const StandardCompositionTableau& t) {
  WitnessRecord::Rows rows;
  for (const auto& source : t.rows()) rows.emplace_back(source.begin(), source.end());
  return rows;
}

}  // namespace qsfmf
