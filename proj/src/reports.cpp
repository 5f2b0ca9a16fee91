#include "patlab/reports.hpp"

#include <iomanip>
#include <sstream>

namespace patlab {

using json = nlohmann::ordered_json;

namespace {

json counts_array(const std::vector<std::uint64_t>& counts) {
  json rows = json::array();
  for (std::size_t n = 0; n < counts.size(); ++n) {
    rows.push_back({{"n", n}, {"count", counts[n]}});
  }
  return rows;
}

json witness_json(const std::optional<Counterexample>& c) {
  json out = json::array();
  if (!c) return out;
  json w = {{"n", c->n}, {"input", c->input.to_string()}};
  w["output"] = c->output ? json(c->output->to_string()) : json(nullptr);
  w["reason"] = c->reason;
  out.push_back(std::move(w));
  return out;
}

json perms_json(const std::vector<Permutation>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json root_json(double value) { return std::stod(format_root(value)); }

std::string ratio_text(const std::optional<Ratio>& r) {
  if (!r) return "undefined";
  return std::to_string(r->num) + "/" + std::to_string(r->den);
}

}  // namespace

json to_json(const CountSequence& seq) {
  return {{"class", seq.basis_label}, {"method", to_string(seq.method)},
          {"counts", counts_array(seq.counts)}};
}

json to_json(const MapResult& result) {
  const Permutation& p = result.input;
  const int n = p.size();
  json roles;
  if (const auto* r = std::get_if<RoleSets>(&result.roles)) {
    auto value_of = [&](int pos) -> json {
      if (pos == kStartAnchor) return "start";
      if (pos == n + 1) return "end";
      return p(pos);
    };
    auto values_of = [&](const std::vector<int>& positions) {
      json out = json::array();
      for (int pos : positions) out.push_back(value_of(pos));
      return out;
    };
    json f = json::object();
    for (const auto& [b, c] : r->f) f[std::to_string(p(b))] = value_of(c);
    json partner = json::object();
    for (const auto& [b, a] : r->partner) partner[std::to_string(p(b))] = value_of(a);
    roles = {{"k", r->k}, {"i", r->i},  {"A", values_of(r->A)}, {"B", values_of(r->B)},
             {"C", values_of(r->C)}, {"f", f}, {"partner", partner}};
  } else {
    roles = json::array();
    for (const auto& w : std::get<std::vector<Window>>(result.roles)) {
      json values = json::array();
      for (int t = w.first; t <= w.last; ++t) values.push_back(p(t));
      roles.push_back({{"first", w.first}, {"last", w.last}, {"anchor", w.anchor},
                       {"values", values}});
    }
  }
  return {{"input", p.to_string()},
          {"output", result.output.to_string()},
          {"windows_or_roles", roles},
          {"map", to_string(result.map)},
          {"class_checks", {{"pre", optional_bool(result.checks.pre)},
                            {"post", optional_bool(result.checks.post)}}}};
}

json to_json(const WilfReport& report) {
  json out;
  out["verdict"] = report.equal() ? "equal" : "diverges";
  out["diverges_at"] = report.diverges_at ? json(*report.diverges_at) : json(nullptr);
  out["max_n"] = report.max_n;
  out["left"] = to_json(report.left_counts);
  out["right"] = to_json(report.right_counts);
  out["counts"] = json::array();
  for (int n = 0; n <= report.max_n; ++n) {
    out["counts"].push_back({{"n", n},
                             {"left", report.left_counts.at(n)},
                             {"right", report.right_counts.at(n)}});
  }
  out["witnesses"] = json::array();
  if (report.diverges_at) {
    const int n = *report.diverges_at;
    out["witnesses"].push_back({{"n", n},
                                {"left", report.left_counts.at(n)},
                                {"right", report.right_counts.at(n)}});
  }
  return out;
}

json to_json(const BijectionReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"source", r.source_size},
                    {"target", r.target_size},
                    {"image", r.image_size},
                    {"image_in_target", r.image_in_target},
                    {"injective", r.injective},
                    {"surjective", r.surjective()},
                    {"roundtrip", optional_bool(r.roundtrip)}});
  }
  return {{"map", report.spec.label()},
          {"source", report.spec.source().label()},
          {"target", report.spec.target().label()},
          {"max_n", report.max_n},
          {"verdict", to_string(report.verdict)},
          {"counts", rows},
          {"witnesses", witness_json(report.counterexample)}};
}

json to_json(const BasisResult& result) {
  json out;
  if (!result.deletion_closed) {
    out["verdict"] = "not_deletion_closed";
  } else if (!result.matches_prediction) {
    out["verdict"] = "discovered";
  } else {
    out["verdict"] = *result.matches_prediction ? "matches_prediction" : "differs_from_prediction";
  }
  out["source"] = result.source_spec.label();
  out["max_len"] = result.max_len;
  out["discovered"] = perms_json(result.discovered.patterns());
  out["predicted"] =
      result.predicted ? perms_json(result.predicted->patterns()) : json(nullptr);
  out["counts"] = counts_array(result.image_sizes);
  out["deletion_closed"] = result.deletion_closed;
  out["witnesses"] = json::array();
  return out;
}

json to_json(const GrowthDiagnostics& d) {
  json ratios = json::array();
  json roots = json::array();
  for (std::size_t n = 1; n < d.roots.size(); ++n) {
    ratios.push_back({{"n", n}, {"ratio", ratio_text(d.ratios[n])}});
    roots.push_back({{"n", n}, {"root", root_json(d.roots[n])}});
  }
  json bounds = nullptr;
  if (d.reference_bounds) bounds = {d.reference_bounds->first, d.reference_bounds->second};
  return {{"verdict", "diagnostic"},
          {"note", "finite-n diagnostics; no limit is claimed"},
          {"class", d.basis_label},
          {"counts", counts_array(d.counts.counts)},
          {"ratios", ratios},
          {"roots", roots},
          {"reference_bounds", bounds}};
}

json to_json(const SandwichReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"increasing", r.increasing},
                    {"distant", r.distant},
                    {"diagonal", r.diagonal},
                    {"ordered", r.ordered()}});
  }
  return {{"verdict", report.holds() ? "holds" : "violated"},
          {"k", report.k},
          {"j", report.j},
          {"max_n", report.max_n},
          {"inclusion_checked_to", report.inclusion_checked_to},
          {"counts", rows},
          {"witnesses", witness_json(report.witness)}};
}

json to_json(const SurveyReport& report) {
  json groups = json::array();
  for (const auto& g : report.groups) {
    json specs = json::array();
    for (const auto& [j, i] : g.specs) {
      specs.push_back(AlmostDistantPattern{report.underlying, j, i}.to_expression());
    }
    groups.push_back({{"specs", specs},
                      {"counts", counts_array(g.counts)},
                      {"matches_diagonal", g.matches_diagonal}});
  }
  return {{"verdict", "experiment"},
          {"underlying", report.underlying.to_string()},
          {"max_n", report.max_n},
          {"diagonal_counts", counts_array(report.diagonal_counts)},
          {"groups", groups}};
}

std::string to_csv(const CountSequence& seq) {
  std::ostringstream os;
  os << "n,count\n";
  for (std::size_t n = 0; n < seq.counts.size(); ++n) os << n << ',' << seq.counts[n] << '\n';
  return os.str();
}

std::string to_csv(const WilfReport& report) {
  std::ostringstream os;
  os << "n,left,right\n";
  for (int n = 0; n <= report.max_n; ++n) {
    os << n << ',' << report.left_counts.at(n) << ',' << report.right_counts.at(n) << '\n';
  }
  return os.str();
}

std::string to_csv(const SandwichReport& report) {
  std::ostringstream os;
  os << "n,increasing,distant,diagonal\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.increasing << ',' << r.distant << ',' << r.diagonal << '\n';
  }
  return os.str();
}

std::string to_csv(const GrowthDiagnostics& d) {
  std::ostringstream os;
  os << "n,count,ratio,root\n";
  for (std::size_t n = 0; n < d.counts.counts.size(); ++n) {
    os << n << ',' << d.counts.counts[n] << ',';
    if (n > 0) os << ratio_text(d.ratios[n]) << ',' << format_root(d.roots[n]);
    else os << ',';
    os << '\n';
  }
  return os.str();
}

std::string to_table(const CountSequence& seq) {
  std::ostringstream os;
  os << seq.basis_label << "  (" << to_string(seq.method) << ")\n";
  for (std::size_t n = 0; n < seq.counts.size(); ++n) {
    os << std::setw(4) << n << "  " << seq.counts[n] << '\n';
  }
  return os.str();
}

std::string to_table(const WilfReport& report) {
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(16) << report.left_basis.label() << std::setw(16)
     << report.right_basis.label() << '\n';
  for (int n = 0; n <= report.max_n; ++n) {
    os << std::setw(4) << n << std::setw(16) << report.left_counts.at(n) << std::setw(16)
       << report.right_counts.at(n) << '\n';
  }
  os << "verdict: "
     << (report.equal() ? std::string("equal")
                        : "diverges at n=" + std::to_string(*report.diverges_at))
     << '\n';
  return os.str();
}

std::string to_table(const BijectionReport& report) {
  std::ostringstream os;
  os << report.spec.label() << ": Av(" << report.spec.source().label() << ") -> Av("
     << report.spec.target().label() << ")\n";
  os << std::setw(4) << "n" << std::setw(10) << "source" << std::setw(10) << "target"
     << std::setw(10) << "image" << "  in-target injective roundtrip\n";
  for (const auto& r : report.rows) {
    os << std::setw(4) << r.n << std::setw(10) << r.source_size << std::setw(10) << r.target_size
       << std::setw(10) << r.image_size << "  " << std::setw(9) << (r.image_in_target ? "yes" : "NO")
       << ' ' << std::setw(9) << (r.injective ? "yes" : "NO") << ' '
       << (r.roundtrip ? (*r.roundtrip ? "yes" : "NO") : "n/a") << '\n';
  }
  os << "verdict: " << to_string(report.verdict) << '\n';
  if (report.counterexample) {
    os << "counterexample (n=" << report.counterexample->n
       << "): " << report.counterexample->input.to_string() << "  " << report.counterexample->reason
       << '\n';
  }
  return os.str();
}

std::string to_table(const BasisResult& result) {
  std::ostringstream os;
  os << "H-image of Av(" << result.source_spec.label() << "), lengths <= " << result.max_len
     << '\n';
  os << "discovered:";
  for (const auto& q : result.discovered.patterns()) os << ' ' << q.to_string();
  os << '\n';
  if (result.predicted) {
    os << "predicted: ";
    for (const auto& q : result.predicted->patterns()) os << ' ' << q.to_string();
    os << "\nmatches prediction: " << (*result.matches_prediction ? "yes" : "NO") << '\n';
  }
  os << "deletion closed: " << (result.deletion_closed ? "yes" : "NO") << '\n';
  return os.str();
}

std::string to_table(const GrowthDiagnostics& d) {
  std::ostringstream os;
  os << d.basis_label << "  (finite-n diagnostics)\n";
  os << std::setw(4) << "n" << std::setw(14) << "count" << std::setw(20) << "ratio" << "  root\n";
  for (std::size_t n = 0; n < d.counts.counts.size(); ++n) {
    os << std::setw(4) << n << std::setw(14) << d.counts.counts[n];
    if (n > 0) os << std::setw(20) << ratio_text(d.ratios[n]) << "  " << format_root(d.roots[n]);
    os << '\n';
  }
  if (d.reference_bounds) {
    os << "reference growth interval: [" << format_root(d.reference_bounds->first) << ", "
       << format_root(d.reference_bounds->second) << "]\n";
  }
  return os.str();
}

std::string to_table(const SandwichReport& report) {
  std::ostringstream os;
  os << "Av(12..." << report.k << ") <= Av(D(" << report.k << ',' << report.j << ")) <= Av(M("
     << report.k << ',' << report.j << ',' << report.j << "))\n";
  for (const auto& r : report.rows) {
    os << std::setw(4) << r.n << std::setw(14) << r.increasing << std::setw(14) << r.distant
       << std::setw(14) << r.diagonal << (r.ordered() ? "" : "  VIOLATED") << '\n';
  }
  os << "set inclusions checked to n=" << report.inclusion_checked_to << '\n';
  os << "verdict: " << (report.holds() ? "holds" : "violated") << '\n';
  if (report.witness) {
    os << "witness (n=" << report.witness->n << "): " << report.witness->input.to_string() << "  "
       << report.witness->reason << '\n';
  }
  return os.str();
}

std::string to_table(const SurveyReport& report) {
  std::ostringstream os;
  os << "EXPERIMENT: almost-distant classes over " << report.underlying.to_string()
     << ", n <= " << report.max_n << '\n';
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    const auto& group = report.groups[g];
    os << "group " << g + 1 << (group.matches_diagonal ? " [= M diagonal]" : "") << ":";
    for (const auto& [j, i] : group.specs) {
      os << ' ' << AlmostDistantPattern{report.underlying, j, i}.to_expression();
    }
    os << "\n  ";
    for (auto c : group.counts) os << c << ' ';
    os << '\n';
  }
  return os.str();
}

}  // namespace patlab
