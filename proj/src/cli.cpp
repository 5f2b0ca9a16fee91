#include "patlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "patlab/class_expression.hpp"
#include "patlab/errors.hpp"
#include "patlab/reports.hpp"
#include "patlab/structure_maps.hpp"
#include "patlab/verification.hpp"

namespace patlab::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::count: return "count";
    case Command::verify_wilf: return "verify-wilf";
    case Command::map: return "map";
    case Command::certify: return "certify";
    case Command::basis: return "basis";
    case Command::sandwich: return "sandwich";
    case Command::growth: return "growth";
    case Command::survey: return "survey";
  }
  return "?";
}

void require_n(const RunConfig& c) {
  if (c.max_n < 0) throw UsageError(std::string(command_name(c.command)) + " needs --n");
  if (c.max_n > kHardMaxN) {
    throw UsageError("--n " + std::to_string(c.max_n) + " exceeds the hard cap of " +
                     std::to_string(kHardMaxN));
  }
}

std::string require(const std::string& value, const char* flag, Command c) {
  if (value.empty()) throw UsageError(std::string(command_name(c)) + " needs " + flag);
  return value;
}

int require(const std::optional<int>& value, const char* flag, Command c) {
  if (!value) throw UsageError(std::string(command_name(c)) + " needs " + flag);
  return *value;
}

OutputFormat format_or(const RunConfig& c, OutputFormat fallback, bool csv_ok) {
  const OutputFormat f = c.format.value_or(fallback);
  if (f == OutputFormat::csv && !csv_ok) {
    throw UsageError(std::string("--format csv is not available for ") + command_name(c.command));
  }
  return f;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

MapSpec map_spec_from(const RunConfig& c) {
  MapSpec spec;
  spec.name = parse_map_name(require(c.map_name, "--map", c.command));
  spec.k = c.k;
  switch (spec.name) {
    case MapName::F:
    case MapName::F_inverse: spec.param = require(c.i, "--i", c.command); break;
    case MapName::H:
    case MapName::G_adjusted: spec.param = require(c.j, "--j", c.command); break;
    default: break;
  }
  if (c.side == "plus") {
    spec.side = HSide::plus;
  } else if (c.side != "minus") {
    throw UsageError("--side must be minus or plus");
  }
  spec.validate();
  return spec;
}

int dispatch(const RunConfig& c, std::ostream& os) {
  EnumerationOptions opts;
  opts.node_budget = c.node_budget;
  opts.parallel = c.parallel;

  switch (c.command) {
    case Command::count: {
      require_n(c);
      const PatternBasis basis = parse_basis(require(c.class_expr, "--class", c.command));
      const auto seq = count_sequence(c.max_n, basis, opts);
      switch (format_or(c, OutputFormat::csv, true)) {
        case OutputFormat::csv: os << to_csv(seq); break;
        case OutputFormat::json: os << dump(to_json(seq)); break;
        case OutputFormat::table: os << to_table(seq); break;
      }
      return kVerified;
    }
    case Command::verify_wilf: {
      require_n(c);
      const auto left = parse_basis(require(c.left_expr, "--left", c.command));
      const auto right = parse_basis(require(c.right_expr, "--right", c.command));
      const auto report = verify_wilf(left, right, c.max_n, opts);
      switch (format_or(c, OutputFormat::table, true)) {
        case OutputFormat::csv: os << to_csv(report); break;
        case OutputFormat::json: os << dump(to_json(report)); break;
        case OutputFormat::table: os << to_table(report); break;
      }
      return report.equal() ? kVerified : kVerificationFailed;
    }
    case Command::map: {
      const MapSpec spec = map_spec_from(c);
      const Permutation p = Permutation::parse(require(c.perm, "--perm", c.command));
      const MapResult result = spec.apply(p, MapOptions{.validate = true});
      if (format_or(c, OutputFormat::table, false) == OutputFormat::json) {
        os << dump(to_json(result));
      } else {
        os << result.output.to_string() << '\n';
      }
      return result.checks.post.value_or(true) ? kVerified : kVerificationFailed;
    }
    case Command::certify: {
      require_n(c);
      const MapSpec spec = map_spec_from(c);
      const auto report = certify_map(spec, c.max_n, opts);
      if (format_or(c, OutputFormat::table, false) == OutputFormat::json) {
        os << dump(to_json(report));
      } else {
        os << to_table(report);
      }
      const MapVerdict wanted =
          spec.inverse() ? MapVerdict::bijection : MapVerdict::injection;
      const bool ok = report.verdict == MapVerdict::bijection || report.verdict == wanted;
      return ok ? kVerified : kVerificationFailed;
    }
    case Command::basis: {
      require_n(c);
      const int j = require(c.j, "--j", c.command);
      DiscoveryOptions discovery;
      discovery.enumeration = opts;
      const auto result = discover_basis(c.k, j, c.max_n, discovery);
      if (format_or(c, OutputFormat::table, false) == OutputFormat::json) {
        os << dump(to_json(result));
      } else {
        os << to_table(result);
      }
      return result.deletion_closed && result.matches_prediction.value_or(true)
                 ? kVerified
                 : kVerificationFailed;
    }
    case Command::sandwich: {
      require_n(c);
      const auto report = sandwich_check(c.k, require(c.j, "--j", c.command), c.max_n, opts);
      switch (format_or(c, OutputFormat::table, true)) {
        case OutputFormat::csv: os << to_csv(report); break;
        case OutputFormat::json: os << dump(to_json(report)); break;
        case OutputFormat::table: os << to_table(report); break;
      }
      return report.holds() ? kVerified : kVerificationFailed;
    }
    case Command::growth: {
      require_n(c);
      const auto expr = parse_class_expression(require(c.class_expr, "--class", c.command));
      const auto d = growth_diagnostics(expr.basis(), c.max_n, reference_growth_bounds(expr), opts);
      switch (format_or(c, OutputFormat::table, true)) {
        case OutputFormat::csv: os << to_csv(d); break;
        case OutputFormat::json: os << dump(to_json(d)); break;
        case OutputFormat::table: os << to_table(d); break;
      }
      return kVerified;
    }
    case Command::survey: {
      require_n(c);
      const Permutation q = Permutation::parse(require(c.perm, "--perm", c.command));
      const auto report = survey_almost_distant(q, c.max_n, opts);
      if (format_or(c, OutputFormat::table, false) == OutputFormat::json) {
        os << dump(to_json(report));
      } else {
        os << to_table(report);
      }
      return kExperiment;
    }
  }
  throw UsageError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = kVerified;
  try {
    code = dispatch(config, buffer);
  } catch (const ParseError& e) {
    err << caret_diagnostic(e.expression(), e.column(), e.what());
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const FindingError& e) {
    err << "FINDING: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (config.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.out_path << '\n';
      return kUsageError;
    }
    file << buffer.str();
  }
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("PATLAB_BUDGET"); env != nullptr && *env != '\0') {
    try {
      config.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: PATLAB_BUDGET must be a positive integer\n";
      return kUsageError;
    }
  }

  CLI::App app{"Exact enumeration and verification for almost-distant monotone patterns",
               "patlab"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::csv}, {"json", OutputFormat::json}, {"table", OutputFormat::table}};
  std::optional<std::uint64_t> budget;
  bool no_parallel = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "csv, json or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", config.out_path, "write the report here instead of stdout");
    sub->add_option("--budget", budget, "generating-tree node budget");
    sub->add_flag("--no-parallel", no_parallel, "sequential traversal");
  };
  auto with_n = [&](CLI::App* sub) { sub->add_option("--n", config.max_n, "largest length"); };

  std::map<CLI::App*, Command> commands;
  auto add = [&](const char* name, Command c, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands[sub] = c;
    common(sub);
    return sub;
  };

  auto* count = add("count", Command::count, "count Av_n(Q) for n = 0..N");
  count->add_option("--class", config.class_expr, "class expression");
  with_n(count);

  auto* wilf = add("verify-wilf", Command::verify_wilf, "compare two count sequences");
  wilf->add_option("--left", config.left_expr, "class expression");
  wilf->add_option("--right", config.right_expr, "class expression");
  with_n(wilf);

  auto map_flags = [&](CLI::App* sub) {
    sub->add_option("--map", config.map_name, "F, Finv, G, Ginv, H or Gadj");
    sub->add_option("--k", config.k, "length of the monotone pattern");
    sub->add_option("--i", config.i, "step index for F");
    sub->add_option("--j", config.j, "box position for H and Gadj");
    sub->add_option("--side", config.side, "H source: minus = M(k,j,j-1), plus = M(k,j,j+1)");
  };
  auto* map = add("map", Command::map, "apply one map to one permutation");
  map_flags(map);
  map->add_option("--perm", config.perm, "input permutation");

  auto* certify = add("certify", Command::certify, "check a map over whole classes");
  map_flags(certify);
  with_n(certify);

  auto* basis = add("basis", Command::basis, "discover the basis of the H-image");
  basis->add_option("--k", config.k, "length of the monotone pattern");
  basis->add_option("--j", config.j, "box position");
  with_n(basis);

  auto* sandwich = add("sandwich", Command::sandwich, "Av(12..k) <= Av(D(k,j)) <= Av(M(k,j,j))");
  sandwich->add_option("--k", config.k, "length of the monotone pattern");
  sandwich->add_option("--j", config.j, "box position");
  with_n(sandwich);

  auto* growth = add("growth", Command::growth, "finite-n growth diagnostics");
  growth->add_option("--class", config.class_expr, "class expression");
  with_n(growth);

  auto* survey = add("survey", Command::survey, "group almost-distant classes by counts");
  survey->add_option("--perm", config.perm, "underlying classical pattern");
  with_n(survey);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsageError;
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  if (budget) config.node_budget = *budget;
  config.parallel = !no_parallel;
  return run(config, out, err);
}

}  // namespace patlab::cli
