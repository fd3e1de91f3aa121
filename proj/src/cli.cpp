#include "qsfmf/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <thread>
#include <variant>

#include "qsfmf/classification.hpp"
#include "qsfmf/io.hpp"
#include "qsfmf/qsym.hpp"

namespace qsfmf::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexArgs {
  std::string kind;
  std::string composition;
  std::string partition;
  std::string outer;
  std::string inner;
};

using Index = std::variant<Composition, SkewShape>;

void add_index_options(CLI::App& cmd, IndexArgs& args) {
  cmd.add_option("--kind", args.kind, "schur | skew | qs")
      ->required()
      ->check(CLI::IsMember({"schur", "skew", "qs"}));
  cmd.add_option("--composition", args.composition, "composition for --kind qs, e.g. 1,3");
  cmd.add_option("--partition", args.partition, "partition for --kind schur, e.g. 3,2,1");
  cmd.add_option("--outer", args.outer, "outer partition for --kind skew");
  cmd.add_option("--inner", args.inner, "inner partition for --kind skew (default empty)");
}

// A composition for qs, otherwise a shape (straight for schur).
Index resolve(const IndexArgs& args) {
  if (args.kind == "qs") {
    if (args.composition.empty()) throw UsageError("--kind qs needs a nonempty --composition");
    return parse_composition(args.composition);
  }
  if (args.kind == "schur") {
    if (args.partition.empty()) throw UsageError("--kind schur needs a nonempty --partition");
    return SkewShape(parse_partition(args.partition));
  }
  if (args.outer.empty()) throw UsageError("--kind skew needs --outer");
  return SkewShape(parse_partition(args.outer), parse_partition(args.inner));
}

FExpansion f_expansion(const Index& index, std::uint64_t budget) {
  if (const auto* alpha = std::get_if<Composition>(&index)) return qs_f(*alpha, budget);
  return skew_schur_f(std::get<SkewShape>(index), budget);
}

template <class T>
void emit(std::ostream& out, bool json, const T& value) {
  if (json) {
    out << to_json(value).dump(2) << '\n';
  } else {
    out << to_text(value);
  }
}

std::vector<WitnessRecord> witness_records(const Index& index, std::uint64_t budget) {
  std::vector<WitnessRecord> out;
  auto convert = [&](const auto& collisions) {
    for (const auto& w : collisions) out.push_back({w.descents, witness_rows(w.first), witness_rows(w.second), std::nullopt});
  };
  if (const auto* alpha = std::get_if<Composition>(&index)) {
    convert(multiplicity_witnesses(*alpha, budget));
  } else {
    convert(multiplicity_witnesses(std::get<SkewShape>(index), budget));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"F-expansions of Schur, skew Schur and quasisymmetric Schur functions"};
  app.require_subcommand(1);

  IndexArgs index_args;
  std::string basis = "f";
  std::string format = "text";
  std::uint64_t budget = kDefaultBudget;
  std::string theorem;
  int max_n = 0;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", budget, "maximum number of tableaux per instance");
  };

  CLI::App* expand = app.add_subcommand("expand", "print the expansion of a function");
  add_index_options(*expand, index_args);
  expand->add_option("--basis", basis, "f | m | schur")->check(CLI::IsMember({"f", "m", "schur", "F", "M"}));
  add_format(expand);

  CLI::App* tableaux = app.add_subcommand("tableaux", "list the standard tableaux of a shape");
  add_index_options(*tableaux, index_args);
  add_format(tableaux);

  CLI::App* check = app.add_subcommand("check", "report F-multiplicity-freeness and component count");
  add_index_options(*check, index_args);
  add_format(check);

  CLI::App* witnesses = app.add_subcommand("witnesses", "list pairs of tableaux sharing a descent set");
  add_index_options(*witnesses, index_args);
  add_format(witnesses);

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a classification against brute force");
  verify_cmd->add_option("--theorem", theorem, "schur | skew | qs-components | two-part | families")
      ->required()
      ->check(CLI::IsMember({"schur", "skew", "qs-components", "two-part", "families"}));
  verify_cmd->add_option("--max-n", max_n, "largest degree to check")
      ->required()
      ->check(CLI::Range(1, DescentSet::kMaxDegree));
  verify_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 1024U));
  add_format(verify_cmd);

  std::vector<std::string> argv_storage{"qsfmf"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const bool json = format == "json";
  try {
    if (verify_cmd->parsed()) {
      VerificationReport report = verify(*parse_theorem(theorem), max_n, {threads, budget});
      emit(out, json, report);
      return report.verified() ? kSuccess : kNegative;
    }

    const Index index = resolve(index_args);

    if (expand->parsed()) {
      if (basis == "schur") {
        if (std::holds_alternative<Composition>(index)) {
          throw UsageError("--basis schur is only available for --kind schur or skew");
        }
        emit(out, json, lr_expansion(std::get<SkewShape>(index)));
      } else if (basis == "m" || basis == "M") {
        emit(out, json, f_to_m(f_expansion(index, budget)));
      } else {
        emit(out, json, f_expansion(index, budget));
      }
      return kSuccess;
    }

    if (check->parsed()) {
      const FExpansion e = f_expansion(index, budget);
      const bool fmf = is_fmf(e);
      if (json) {
        out << Json{{"fmf", fmf}, {"components", f_component_count(e)}}.dump(2) << '\n';
      } else {
        out << "fmf: " << (fmf ? "true" : "false") << "\ncomponents: " << f_component_count(e) << '\n';
      }
      return fmf ? kSuccess : kNegative;
    }

    if (tableaux->parsed()) {
      std::vector<WitnessRecord::Rows> all;
      if (const auto* alpha = std::get_if<Composition>(&index)) {
        for_each_sct(*alpha, [&](const StandardCompositionTableau& t) { all.push_back(witness_rows(t)); }, budget);
      } else {
        for_each_syt(std::get<SkewShape>(index), [&](const StandardYoungTableau& t) { all.push_back(witness_rows(t)); },
                     budget);
      }
      if (json) {
        Json list = Json::array();
        for (const auto& rows : all) list.push_back(to_json(rows));
        out << list.dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (i > 0) out << '\n';
          out << to_text(all[i]);
        }
      }
      return kSuccess;
    }

    // witnesses
    const auto records = witness_records(index, budget);
    if (json) {
      Json list = Json::array();
      for (const auto& w : records) {
        list.push_back(
            Json{{"descent_set", to_json(w.descents)}, {"first", to_json(w.first)}, {"second", to_json(w.second)}});
      }
      out << list.dump(2) << '\n';
    } else if (records.empty()) {
      out << "no collisions: fmf\n";
    } else {
      for (const auto& w : records) {
        out << "descent set " << to_string(w.descents) << '\n' << to_text(w.first) << "--\n" << to_text(w.second) << '\n';
      }
    }
    return records.empty() ? kSuccess : kNegative;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace qsfmf::cli
