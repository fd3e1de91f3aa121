#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include "qsfmf/classification.hpp"

namespace qsfmf {

namespace {

using Outcome = std::optional<Disagreement>;

// Evaluates every instance on a small worker pool; results keep instance order.
std::vector<Outcome> run_parallel(std::size_t count, unsigned threads, const std::function<Outcome(std::size_t)>& evaluate) {
  std::vector<Outcome> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = evaluate(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

std::string fmf_label(bool fmf) { return fmf ? "fmf" : "not fmf"; }

template <class Tableau>
std::vector<WitnessRecord> to_records(const std::vector<CollisionWitness<Tableau>>& collisions) {
  std::vector<WitnessRecord> out;
  for (const auto& w : collisions) out.push_back({w.descents, witness_rows(w.first), witness_rows(w.second), std::nullopt});
  return out;
}

// For fmf compositions with unexpected extra components: the canonical filling paired
// with one tableau for every other descent composition.
std::vector<WitnessRecord> component_records(const Composition& alpha, std::uint64_t budget) {
  std::vector<WitnessRecord> out;
  const auto canonical = witness_rows(canonical_filling(alpha));
  std::map<Composition, bool> seen;
  for_each_sct(
      alpha,
      [&](const StandardCompositionTableau& t) {
        Composition key = com_c(t);
        if (key == alpha || seen.count(key)) return;
        seen[key] = true;
        out.push_back({des_c(t), canonical, witness_rows(t), descent_set_of(alpha)});
      },
      budget);
  return out;
}

std::vector<Outcome> verify_schur(int max_n, const VerifyOptions& opt, std::uint64_t& checked) {
  std::vector<Partition> instances;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& lambda : enumerate_partitions(n)) instances.push_back(std::move(lambda));
  }
  checked = instances.size();
  return run_parallel(instances.size(), opt.threads, [&](std::size_t i) -> Outcome {
    const Partition& lambda = instances[i];
    FExpansion e = schur_f(lambda, opt.budget);
    const bool predicted = predict_schur(lambda);
    const bool actual = is_fmf(e);
    if (predicted == actual) return std::nullopt;
    return Disagreement{to_string(lambda), fmf_label(predicted), fmf_label(actual), std::move(e),
                        to_records(multiplicity_witnesses(SkewShape(lambda), opt.budget))};
  });
}

std::vector<Outcome> verify_skew(int max_n, const VerifyOptions& opt, std::uint64_t& checked) {
  std::vector<SkewShape> instances;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& d : enumerate_skew_shapes(n)) instances.push_back(std::move(d));
  }
  checked = instances.size();
  return run_parallel(instances.size(), opt.threads, [&](std::size_t i) -> Outcome {
    const SkewShape& d = instances[i];
    FExpansion e = skew_schur_f(d, opt.budget);
    const bool predicted = predict_skew(d);
    const bool actual = is_fmf(e);
    if (predicted == actual) return std::nullopt;
    return Disagreement{to_string(d), fmf_label(predicted), fmf_label(actual), std::move(e),
                        to_records(multiplicity_witnesses(d, opt.budget))};
  });
}

std::vector<Outcome> verify_components(int max_n, const VerifyOptions& opt, std::uint64_t& checked) {
  std::vector<Composition> instances;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& alpha : enumerate_compositions(n)) instances.push_back(std::move(alpha));
  }
  checked = instances.size();
  return run_parallel(instances.size(), opt.threads, [&](std::size_t i) -> Outcome {
    const Composition& alpha = instances[i];
    FExpansion e = qs_f(alpha, opt.budget);
    const ComponentClass predicted = predict_qs_components(alpha);
    const ComponentClass actual = classify_components(e);
    // One and two component expansions must contain F_alpha with coefficient 1.
    const bool keyed = actual == ComponentClass::More || e.coefficient(alpha) == 1;
    if (predicted == actual && keyed) return std::nullopt;
    std::string actual_label(to_string(actual));
    if (!keyed) actual_label += " (F_alpha missing)";
    auto witnesses = to_records(multiplicity_witnesses(alpha, opt.budget));
    if (witnesses.empty()) witnesses = component_records(alpha, opt.budget);
    return Disagreement{to_string(alpha), std::string(to_string(predicted)), actual_label, std::move(e),
                        std::move(witnesses)};
  });
}

std::vector<Outcome> verify_two_part(int max_n, const VerifyOptions& opt, std::uint64_t& checked) {
  std::vector<Composition> instances;
  for (int n = 2; n <= max_n; ++n) {
    for (int a = 1; a < n; ++a) instances.push_back(Composition{a, n - a});
  }
  checked = instances.size();
  return run_parallel(instances.size(), opt.threads, [&](std::size_t i) -> Outcome {
    const Composition& alpha = instances[i];
    FExpansion e = qs_f(alpha, opt.budget);
    const bool predicted = predict_two_part(alpha);
    const bool actual = is_fmf(e);
    if (predicted == actual) return std::nullopt;
    return Disagreement{to_string(alpha), fmf_label(predicted), fmf_label(actual), std::move(e),
                        to_records(multiplicity_witnesses(alpha, opt.budget))};
  });
}

std::vector<Outcome> verify_families(int max_n, const VerifyOptions& opt, std::uint64_t& checked) {
  std::vector<Partition> instances;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& lambda : enumerate_partitions(n)) instances.push_back(std::move(lambda));
  }
  checked = instances.size();
  return run_parallel(instances.size(), opt.threads, [&](std::size_t i) -> Outcome {
    const Partition& lambda = instances[i];
    const bool predicted = predict_family(lambda);
    std::optional<Composition> offender;
    for (const Composition& alpha : rearrangements(lambda)) {
      if (!is_fmf(qs_f(alpha, opt.budget))) {
        offender = alpha;
        break;
      }
    }
    const bool actual = !offender.has_value();
    if (predicted == actual) return std::nullopt;
    if (offender) {
      return Disagreement{to_string(lambda), fmf_label(predicted), "not fmf (qs " + to_string(*offender) + ")",
                          qs_f(*offender, opt.budget), to_records(multiplicity_witnesses(*offender, opt.budget))};
    }
    return Disagreement{to_string(lambda), fmf_label(predicted), fmf_label(actual),
                        schur_via_qs(lambda, opt.budget), {}};
  });
}

}  // namespace

VerificationReport verify(TheoremId theorem, int max_n, const VerifyOptions& options) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  VerificationReport report;
  report.theorem = theorem;
  report.max_n = max_n;
  report.min_n = theorem == TheoremId::TwoPart ? 2 : 1;
  std::vector<Outcome> outcomes;
  switch (theorem) {
    case TheoremId::Schur:
      outcomes = verify_schur(max_n, options, report.checked);
      break;
    case TheoremId::Skew:
      outcomes = verify_skew(max_n, options, report.checked);
      break;
    case TheoremId::QsComponents:
      outcomes = verify_components(max_n, options, report.checked);
      break;
    case TheoremId::TwoPart:
      outcomes = verify_two_part(max_n, options, report.checked);
      break;
    case TheoremId::Families:
      outcomes = verify_families(max_n, options, report.checked);
      break;
  }
  for (auto& outcome : outcomes) {
    if (outcome) report.disagreements.push_back(std::move(*outcome));
  }
  return report;
}

}  // namespace qsfmf
