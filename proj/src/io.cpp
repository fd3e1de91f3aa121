#include "qsfmf/io.hpp"

namespace qsfmf {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::F:
      return "F";
    case Basis::M:
      return "M";
    case Basis::Schur:
      return "schur";
  }
  return "F";
}

std::string basis_symbol(Basis b) { return b == Basis::Schur ? "s" : basis_name(b); }

namespace {

std::string indented(const std::string& block) {
  std::string out;
  std::size_t start = 0;
  while (start < block.size()) {
    const std::size_t end = block.find('\n', start);
    out += "    " + block.substr(start, end - start + 1);
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string to_text(const WitnessRecord::Rows& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ' ';
      out += row[k] ? std::to_string(*row[k]) : "·";
    }
    out += '\n';
  }
  return out;
}

Json to_json(const WitnessRecord::Rows& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json cells = Json::array();
    for (const auto& v : row) {
      if (v) {
        cells.push_back(*v);
      } else {
        cells.push_back(nullptr);
      }
    }
    out.push_back(std::move(cells));
  }
  return out;
}

Json to_json(const DescentSet& s) {
  Json out = Json::array();
  for (int i : s.members()) out.push_back(i);
  return out;
}

Json to_json(const VerificationReport& report) {
  Json disagreements = Json::array();
  for (const auto& d : report.disagreements) {
    Json witnesses = Json::array();
    for (const auto& w : d.witnesses) {
      Json record;
      if (w.first_descents) {
        record["descent_sets"] = Json::array({to_json(*w.first_descents), to_json(w.descents)});
      } else {
        record["descent_set"] = to_json(w.descents);
      }
      record["first"] = to_json(w.first);
      record["second"] = to_json(w.second);
      witnesses.push_back(std::move(record));
    }
    disagreements.push_back(Json{{"instance", d.instance},
                                 {"predicted", d.predicted},
                                 {"actual", d.actual},
                                 {"expansion", to_json(d.expansion)},
                                 {"witnesses", std::move(witnesses)}});
  }
  return Json{{"theorem", std::string(to_string(report.theorem))},
              {"max_n", report.max_n},
              {"checked", report.checked},
              {"disagreements", std::move(disagreements)}};
}

std::string to_text(const VerificationReport& report) {
  std::string out;
  out += "theorem: " + std::string(to_string(report.theorem)) + "\n";
  out += "degrees: " + std::to_string(report.min_n) + ".." + std::to_string(report.max_n) + "\n";
  out += "checked: " + std::to_string(report.checked) + "\n";
  out += "disagreements: " + std::to_string(report.disagreements.size()) + "\n";
  for (const auto& d : report.disagreements) {
    out += "- " + d.instance + ": predicted " + d.predicted + ", brute force " + d.actual + "\n";
    for (const auto& w : d.witnesses) {
      if (w.first_descents) {
        out += "  descent sets " + to_string(*w.first_descents) + " and " + to_string(w.descents) + "\n";
      } else {
        out += "  descent set " + to_string(w.descents) + "\n";
      }
      out += indented(to_text(w.first));
      out += "    --\n";
      out += indented(to_text(w.second));
    }
  }
  out += std::string("verdict: ") + (report.verified() ? "verified" : "disagreement found") + "\n";
  return out;
}

}  // namespace qsfmf
