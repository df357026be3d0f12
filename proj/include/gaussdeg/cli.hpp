#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gaussdeg/emit.hpp"

namespace gaussdeg {

namespace detail {

inline std::string error_line(const std::string& kind,
                              const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j.dump() + "\n";
}

inline void deliver(const std::string& document, const std::string& out_path,
                    std::ostream& out) {
  if (out_path.empty()) {
    out << document;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ResourceError("cannot open output file " + out_path);
  file << document;
  file.flush();
  if (!file.good()) throw ResourceError("failed writing " + out_path);
}

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

inline void attach_output(CLI::App* sub, OutputOptions& options) {
  sub->add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", options.out_path,
                  "Write the document to this file instead of stdout");
}

inline int finish_scan(const ScanReport& report, const OutputOptions& options,
                       std::ostream& out) {
  std::string document;
  if (options.format == "json") document = emit_report_json(report);
  else if (options.format == "csv") document = emit_report_csv(report);
  else document = emit_report_text(report);
  deliver(document, options.out_path, out);
  return report.verdict == Verdict::Fail ? 2 : 0;
}

}  // namespace detail

// Runs the command line given as plain arguments (no program name).
// Exit status: 0 success (including informational scans), 1 any error,
// 2 a scan that ran to completion and found a claimed invariant violated.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact degrees of Gauss maps on singular theta divisors"};
  app.require_subcommand(1);

  // --- degree ---------------------------------------------------------
  struct {
    int g = 0;
    int t = 0;
    std::string type;
    int d = 0;
    bool extrapolated = false;
    std::string method = "closed";
    detail::OutputOptions output;
  } degree_args;
  CLI::App* degree_cmd =
      app.add_subcommand("degree", "Degree of the Gauss map for one locus");
  degree_cmd->add_option("--g", degree_args.g, "Dimension g")->required();
  degree_cmd->add_option("--t", degree_args.t, "Split index t")->required();
  CLI::Option* type_opt = degree_cmd->add_option(
      "--type", degree_args.type, "Polarization type, e.g. 2 or 2,2");
  CLI::Option* d_opt = degree_cmd->add_option(
      "--d", degree_args.d, "Principal isogeny degree; shorthand for --type d");
  type_opt->excludes(d_opt);
  d_opt->excludes(type_opt);
  degree_cmd->add_flag("--extrapolated", degree_args.extrapolated,
                       "Evaluate the formulas outside the proved types");
  degree_cmd->add_option("--method", degree_args.method,
                         "closed, euler or series")
      ->check(CLI::IsMember({"closed", "euler", "series"}));
  detail::attach_output(degree_cmd, degree_args.output);

  // --- coeff ----------------------------------------------------------
  struct {
    std::string family;
    int d = 0;
    int m = 0;
    int n = 0;
    detail::OutputOptions output;
  } coeff_args;
  CLI::App* coeff_cmd =
      app.add_subcommand("coeff", "Kernel coefficient a, c or A at (m, n)");
  coeff_cmd->add_option("--family", coeff_args.family, "a, c or A")
      ->required()
      ->check(CLI::IsMember({"a", "c", "A"}));
  coeff_cmd->add_option("--d", coeff_args.d, "Kernel parameter d")->required();
  coeff_cmd->add_option("--m", coeff_args.m, "x-exponent")->required();
  coeff_cmd->add_option("--n", coeff_args.n, "y-exponent")->required();
  detail::attach_output(coeff_cmd, coeff_args.output);

  // --- compositions ---------------------------------------------------
  struct {
    bool count = false;
    bool enumerate = false;
    int parts = 0;
    int target = 0;
    bool constrained = false;
    int d = 0;
    detail::OutputOptions output;
  } comp_args;
  CLI::App* comp_cmd = app.add_subcommand(
      "compositions", "Weakly increasing tuples with a fixed last entry");
  CLI::Option* count_flag =
      comp_cmd->add_flag("--count", comp_args.count, "Count only");
  CLI::Option* enum_flag = comp_cmd->add_flag(
      "--enumerate", comp_args.enumerate, "List every tuple");
  count_flag->excludes(enum_flag);
  enum_flag->excludes(count_flag);
  comp_cmd->add_option("--parts", comp_args.parts, "Tuple length")->required();
  comp_cmd->add_option("--target", comp_args.target, "Final entry")
      ->required();
  CLI::Option* constrained_flag = comp_cmd->add_flag(
      "--constrained", comp_args.constrained,
      "Keep tuples whose entry at position parts-d is at least d");
  CLI::Option* comp_d_opt =
      comp_cmd->add_option("--d", comp_args.d, "Constraint threshold d");
  constrained_flag->needs(comp_d_opt);
  comp_d_opt->needs(constrained_flag);
  detail::attach_output(comp_cmd, comp_args.output);

  // --- scan -----------------------------------------------------------
  struct ScanArgs {
    int g_min = 4;
    int g_max = 0;
    unsigned threads = 0;
    bool smooth = false;
    std::vector<int> extrapolated_ds;
    std::string type;
    int d = 0;
    bool extrapolated = false;
    detail::OutputOptions output;
  };
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "Batch checks over ranges of g");
  scan_cmd->require_subcommand(1);

  ScanArgs mono_args, sep_args, col_args, jac_args, div_args;

  CLI::App* mono_cmd = scan_cmd->add_subcommand(
      "monotonicity", "Degrees strictly decrease in t at fixed g");
  mono_cmd->add_option("--g-min", mono_args.g_min, "First genus (default 4)");
  mono_cmd->add_option("--g-max", mono_args.g_max, "Last genus")->required();
  CLI::Option* mono_type = mono_cmd->add_option(
      "--type", mono_args.type, "Restrict to one polarization type");
  CLI::Option* mono_d = mono_cmd->add_option(
      "--d", mono_args.d, "Restrict to the principal type of degree d");
  mono_type->excludes(mono_d);
  mono_d->excludes(mono_type);
  mono_cmd->add_flag("--extrapolated", mono_args.extrapolated,
                     "Allow an unproved --type/--d");
  mono_cmd->add_option("--threads", mono_args.threads, "Worker threads");
  detail::attach_output(mono_cmd, mono_args.output);

  CLI::App* sep_cmd = scan_cmd->add_subcommand(
      "separation", "Distinct loci at one genus have distinct degrees");
  sep_cmd->add_option("--g-min", sep_args.g_min, "First genus (default 4)");
  sep_cmd->add_option("--g-max", sep_args.g_max, "Last genus")->required();
  sep_cmd->add_flag("--include-smooth-branch", sep_args.smooth,
                    "Also scan the smooth-branch rows");
  sep_cmd->add_option("--extrapolated-d", sep_args.extrapolated_ds,
                      "Extra principal degrees to include (repeatable)");
  sep_cmd->add_option("--threads", sep_args.threads, "Worker threads");
  detail::attach_output(sep_cmd, sep_args.output);

  CLI::App* col_cmd = scan_cmd->add_subcommand(
      "collisions", "Equal degrees across different genera");
  col_cmd->add_option("--g-max", col_args.g_max, "Last genus")->required();
  col_cmd->add_flag("--include-smooth-branch", col_args.smooth,
                    "Also scan the smooth-branch rows");
  col_cmd->add_option("--extrapolated-d", col_args.extrapolated_ds,
                      "Extra principal degrees to include (repeatable)");
  col_cmd->add_option("--threads", col_args.threads, "Worker threads");
  detail::attach_output(col_cmd, col_args.output);

  CLI::App* jac_cmd = scan_cmd->add_subcommand(
      "jacobian", "Locus degrees against the Jacobian degree C(2g-2, g-1)");
  jac_cmd->add_option("--g-min", jac_args.g_min, "First genus (default 5)")
      ->default_val(5);
  jac_cmd->add_option("--g-max", jac_args.g_max, "Last genus")->required();
  jac_cmd->add_option("--threads", jac_args.threads, "Worker threads");
  detail::attach_output(jac_cmd, jac_args.output);

  CLI::App* div_cmd = scan_cmd->add_subcommand(
      "divergence", "Printed polynomial forms against authoritative degrees");
  div_cmd->add_option("--g-max", div_args.g_max, "Last genus")->required();
  div_cmd->add_option("--threads", div_args.threads, "Worker threads");
  detail::attach_output(div_cmd, div_args.output);

  // --- table ----------------------------------------------------------
  struct {
    int g_max = 0;
    unsigned threads = 0;
    detail::OutputOptions output;
  } table_args;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "Summary table of every locus up to a genus bound");
  table_cmd->add_option("--g-max", table_args.g_max, "Last genus")->required();
  table_cmd->add_option("--threads", table_args.threads, "Worker threads");
  detail::attach_output(table_cmd, table_args.output);

  // --- parse ----------------------------------------------------------
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("gaussdeg");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      CLI::App* active = &app;
      while (!active->get_subcommands().empty())
        active = active->get_subcommands().front();
      out << active->help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << detail::error_line("UsageError", e.what());
      return 1;
    }

    if (*degree_cmd) {
      PolarizationType delta = !degree_args.type.empty()
                                   ? PolarizationType::parse(degree_args.type)
                                   : (degree_cmd->count("--d") > 0
                                          ? PolarizationType({degree_args.d})
                                          : throw DomainError(
                                                "degree: pass --type or --d"));
      LocusSpec spec(degree_args.g, delta, degree_args.t);
      if (spec.provenance() == Provenance::Extrapolated &&
          !degree_args.extrapolated)
        throw DomainError("degree: type (" + delta.str() +
                          ") is not a proved case; pass --extrapolated to "
                          "evaluate the formulas anyway");
      DegreeMethod method = degree_args.method == "closed"
                                ? DegreeMethod::Closed
                                : (degree_args.method == "euler"
                                       ? DegreeMethod::Euler
                                       : DegreeMethod::Series);
      BigInt value = gauss_degree_locus(spec, method);
      std::string document;
      if (degree_args.output.format == "json") {
        Json j;
        j["g"] = spec.g();
        j["delta"] = spec.delta().str();
        j["t"] = spec.t();
        j["d"] = spec.d();
        j["dim_sing"] = spec.dim_sing();
        j["codim"] = spec.codim();
        j["smooth_branch"] = spec.smooth_branch();
        j["method"] = degree_args.method;
        j["degree"] = to_decimal(value);
        j["provenance"] = provenance_name(spec.provenance());
        document = j.dump(2) + "\n";
      } else if (degree_args.output.format == "csv") {
        document = "g,delta,t,d,method,degree,provenance\n";
        document += detail::csv_row(
            {std::to_string(spec.g()), spec.delta().str(),
             std::to_string(spec.t()), std::to_string(spec.d()),
             degree_args.method, to_decimal(value),
             provenance_name(spec.provenance())});
      } else {
        document = to_decimal(value) + "\n";
      }
      detail::deliver(document, degree_args.output.out_path, out);
      return 0;
    }

    if (*coeff_cmd) {
      KernelKind kind = coeff_args.family == "A"
                            ? KernelKind::A_KERNEL
                            : (coeff_args.family == "c"
                                   ? KernelKind::C_KERNEL
                                   : KernelKind::A_LOWER_KERNEL);
      BigInt value = series_coeff(kind, coeff_args.d, coeff_args.m,
                                  coeff_args.n);
      std::string document;
      if (coeff_args.output.format == "json") {
        Json j;
        j["family"] = coeff_args.family;
        j["d"] = coeff_args.d;
        j["m"] = coeff_args.m;
        j["n"] = coeff_args.n;
        j["value"] = to_decimal(value);
        document = j.dump(2) + "\n";
      } else if (coeff_args.output.format == "csv") {
        document = "family,d,m,n,value\n";
        document += detail::csv_row(
            {coeff_args.family, std::to_string(coeff_args.d),
             std::to_string(coeff_args.m), std::to_string(coeff_args.n),
             to_decimal(value)});
      } else {
        document = to_decimal(value) + "\n";
      }
      detail::deliver(document, coeff_args.output.out_path, out);
      return 0;
    }

    if (*comp_cmd) {
      if (!comp_args.count && !comp_args.enumerate)
        throw DomainError("compositions: pass --count or --enumerate");
      std::optional<int> constraint;
      if (comp_args.constrained) {
        if (comp_args.d < 1)
          throw DomainError("compositions: --d must be at least 1");
        if (comp_args.parts - comp_args.d < 1 ||
            comp_args.target - comp_args.d < 0)
          throw DomainError(
              "compositions: --constrained needs parts >= d+1 and "
              "target >= d");
        constraint = comp_args.d;
      }
      std::string document;
      if (comp_args.count) {
        BigInt count =
            constraint ? count_constrained(comp_args.parts - *constraint - 1,
                                           comp_args.target - *constraint,
                                           *constraint)
                       : count_compositions(comp_args.parts, comp_args.target);
        if (comp_args.output.format == "json") {
          Json j;
          j["parts"] = comp_args.parts;
          j["target"] = comp_args.target;
          j["constrained"] = comp_args.constrained;
          if (constraint) j["d"] = *constraint;
          j["count"] = to_decimal(count);
          document = j.dump(2) + "\n";
        } else if (comp_args.output.format == "csv") {
          document = "parts,target,constrained,d,count\n";
          document += detail::csv_row(
              {std::to_string(comp_args.parts),
               std::to_string(comp_args.target),
               comp_args.constrained ? "true" : "false",
               constraint ? std::to_string(*constraint) : "",
               to_decimal(count)});
        } else {
          document = to_decimal(count) + "\n";
        }
      } else {
        auto tuples =
            enumerate_compositions(comp_args.parts, comp_args.target);
        if (constraint) {
          std::vector<WeakComposition> kept;
          for (auto& tuple : tuples)
            if (tuple.parts[comp_args.parts - *constraint - 1] >= *constraint)
              kept.push_back(std::move(tuple));
          tuples = std::move(kept);
        }
        if (comp_args.output.format == "json") {
          Json j;
          j["parts"] = comp_args.parts;
          j["target"] = comp_args.target;
          j["constrained"] = comp_args.constrained;
          if (constraint) j["d"] = *constraint;
          j["count"] = tuples.size();
          Json list = Json::array();
          for (const auto& tuple : tuples) list.push_back(tuple.parts);
          j["compositions"] = std::move(list);
          document = j.dump(2) + "\n";
        } else {
          if (comp_args.output.format == "csv") document = "composition\n";
          for (const auto& tuple : tuples) {
            std::string line;
            for (std::size_t i = 0; i < tuple.parts.size(); ++i) {
              if (i) line += ',';
              line += std::to_string(tuple.parts[i]);
            }
            if (comp_args.output.format == "csv")
              document += detail::csv_field(line) + "\n";
            else
              document += line + "\n";
          }
        }
      }
      detail::deliver(document, comp_args.output.out_path, out);
      return 0;
    }

    if (*scan_cmd) {
      auto to_options = [](const ScanArgs& a) {
        ScanOptions options;
        options.include_smooth_branch = a.smooth;
        options.extrapolated_ds = a.extrapolated_ds;
        options.allow_extrapolated_type = a.extrapolated;
        options.threads = a.threads;
        return options;
      };
      if (*mono_cmd) {
        ScanOptions options = to_options(mono_args);
        std::optional<PolarizationType> delta;
        if (!mono_args.type.empty())
          delta = PolarizationType::parse(mono_args.type);
        else if (mono_cmd->count("--d") > 0)
          delta = PolarizationType({mono_args.d});
        ScanReport report =
            delta ? scan_monotonicity(*delta, mono_args.g_min,
                                      mono_args.g_max, options)
                  : scan_monotonicity_all(mono_args.g_min, mono_args.g_max,
                                          options);
        return detail::finish_scan(report, mono_args.output, out);
      }
      if (*sep_cmd)
        return detail::finish_scan(
            scan_separation(sep_args.g_min, sep_args.g_max,
                            to_options(sep_args)),
            sep_args.output, out);
      if (*col_cmd)
        return detail::finish_scan(
            scan_collisions(col_args.g_max, to_options(col_args)),
            col_args.output, out);
      if (*jac_cmd)
        return detail::finish_scan(
            scan_jacobian_comparison(jac_args.g_min, jac_args.g_max,
                                     to_options(jac_args)),
            jac_args.output, out);
      if (*div_cmd)
        return detail::finish_scan(
            scan_divergence(div_args.g_max, to_options(div_args)),
            div_args.output, out);
    }

    if (*table_cmd) {
      ScanOptions options;
      options.threads = table_args.threads;
      auto rows = build_table(table_args.g_max, options);
      std::string document;
      if (table_args.output.format == "json")
        document = emit_table_json(rows);
      else if (table_args.output.format == "csv")
        document = emit_table_csv(rows);
      else
        document = emit_table_text(rows);
      detail::deliver(document, table_args.output.out_path, out);
      return 0;
    }

    err << detail::error_line("UsageError", "no subcommand given");
    return 1;
  } catch (const Error& e) {
    err << detail::error_line(e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    err << detail::error_line("InternalError", e.what());
    return 1;
  }
}

}  // namespace gaussdeg
