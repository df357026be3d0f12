#pragma once

#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gaussdeg/scan.hpp"

namespace gaussdeg {

using Json = nlohmann::json;

namespace detail {

inline std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

inline std::string join(const std::vector<std::string>& items,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// scan reports

inline Json record_to_json(const ScanRecord& record) {
  return std::visit(
      [](const auto& r) -> Json {
        using T = std::decay_t<decltype(r)>;
        Json j;
        if constexpr (std::is_same_v<T, MonotonicityRecord>) {
          j["g"] = r.g;
          j["delta"] = r.delta;
          j["t_min"] = r.t_min;
          j["t_max"] = r.t_max;
          j["degrees"] = r.degrees;
          j["strictly_decreasing"] = r.strictly_decreasing;
        } else if constexpr (std::is_same_v<T, SeparationRecord>) {
          j["g"] = r.g;
          j["delta_a"] = r.delta_a;
          j["t_a"] = r.t_a;
          j["delta_b"] = r.delta_b;
          j["t_b"] = r.t_b;
          j["degree"] = r.degree;
        } else if constexpr (std::is_same_v<T, CollisionRecord>) {
          j["g_a"] = r.g_a;
          j["delta_a"] = r.delta_a;
          j["t_a"] = r.t_a;
          j["g_b"] = r.g_b;
          j["delta_b"] = r.delta_b;
          j["t_b"] = r.t_b;
          j["degree"] = r.degree;
        } else if constexpr (std::is_same_v<T, JacobianRecord>) {
          j["g"] = r.g;
          j["jacobian_degree"] = r.jacobian_degree;
          j["min_locus_degree"] = r.min_locus_degree;
          j["min_delta"] = r.min_delta;
          j["min_t"] = r.min_t;
          j["locus_min_exceeds_jacobian"] = r.locus_min_exceeds_jacobian;
          j["jacobian_distinct_from_all"] = r.jacobian_distinct_from_all;
          if (!r.locus_degrees.empty()) j["locus_degrees"] = r.locus_degrees;
        } else if constexpr (std::is_same_v<T, DivergenceRecord>) {
          j["g"] = r.g;
          j["delta"] = r.delta;
          j["t"] = r.t;
          j["printed"] = r.printed;
          j["authoritative"] = r.authoritative;
          j["equal"] = r.equal;
        }
        return j;
      },
      record);
}

inline Json report_to_json(const ScanReport& report) {
  Json j;
  j["scan"] = scan_kind_name(report.kind);
  j["parameters"] = report.parameters;
  j["verdict"] = verdict_name(report.verdict);
  Json records = Json::array();
  for (const auto& record : report.records)
    records.push_back(record_to_json(record));
  j["records"] = std::move(records);
  return j;
}

inline std::string emit_report_json(const ScanReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

inline std::string emit_report_csv(const ScanReport& report) {
  std::string out;
  switch (report.kind) {
    case ScanKind::Monotonicity:
      out = "g,delta,t_min,t_max,strictly_decreasing,degrees\n";
      break;
    case ScanKind::Separation:
      out = "g,delta_a,t_a,delta_b,t_b,degree\n";
      break;
    case ScanKind::Collisions:
      out = "g_a,delta_a,t_a,g_b,delta_b,t_b,degree\n";
      break;
    case ScanKind::JacobianComparison:
      out = "g,jacobian_degree,min_delta,min_t,min_locus_degree,"
            "locus_min_exceeds_jacobian,jacobian_distinct_from_all,"
            "locus_degrees\n";
      break;
    case ScanKind::Divergence:
      out = "g,delta,t,printed,authoritative,equal\n";
      break;
  }
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  for (const auto& record : report.records) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, MonotonicityRecord>) {
            out += detail::csv_row({std::to_string(r.g), r.delta,
                                    std::to_string(r.t_min),
                                    std::to_string(r.t_max),
                                    flag(r.strictly_decreasing),
                                    detail::join(r.degrees, ";")});
          } else if constexpr (std::is_same_v<T, SeparationRecord>) {
            out += detail::csv_row({std::to_string(r.g), r.delta_a,
                                    std::to_string(r.t_a), r.delta_b,
                                    std::to_string(r.t_b), r.degree});
          } else if constexpr (std::is_same_v<T, CollisionRecord>) {
            out += detail::csv_row({std::to_string(r.g_a), r.delta_a,
                                    std::to_string(r.t_a),
                                    std::to_string(r.g_b), r.delta_b,
                                    std::to_string(r.t_b), r.degree});
          } else if constexpr (std::is_same_v<T, JacobianRecord>) {
            out += detail::csv_row(
                {std::to_string(r.g), r.jacobian_degree, r.min_delta,
                 std::to_string(r.min_t), r.min_locus_degree,
                 flag(r.locus_min_exceeds_jacobian),
                 flag(r.jacobian_distinct_from_all),
                 detail::join(r.locus_degrees, ";")});
          } else if constexpr (std::is_same_v<T, DivergenceRecord>) {
            out += detail::csv_row({std::to_string(r.g), r.delta,
                                    std::to_string(r.t), r.printed,
                                    r.authoritative, flag(r.equal)});
          }
        },
        record);
  }
  return out;
}

inline std::string emit_report_text(const ScanReport& report) {
  std::string out = "scan: ";
  out += scan_kind_name(report.kind);
  out += '\n';
  for (const auto& [key, value] : report.parameters)
    out += key + ": " + value + "\n";
  out += "records: " + std::to_string(report.records.size()) + "\n";
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  for (const auto& record : report.records) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, MonotonicityRecord>) {
            out += "  g=" + std::to_string(r.g) + " delta=(" + r.delta +
                   ") t=" + std::to_string(r.t_min) + ".." +
                   std::to_string(r.t_max) +
                   " strictly_decreasing=" + yes(r.strictly_decreasing) +
                   " degrees=" + detail::join(r.degrees, ",") + "\n";
          } else if constexpr (std::is_same_v<T, SeparationRecord>) {
            out += "  g=" + std::to_string(r.g) + " (" + r.delta_a +
                   "),t=" + std::to_string(r.t_a) + " equals (" + r.delta_b +
                   "),t=" + std::to_string(r.t_b) + " degree=" + r.degree +
                   "\n";
          } else if constexpr (std::is_same_v<T, CollisionRecord>) {
            out += "  g=" + std::to_string(r.g_a) + " (" + r.delta_a +
                   "),t=" + std::to_string(r.t_a) +
                   " equals g=" + std::to_string(r.g_b) + " (" + r.delta_b +
                   "),t=" + std::to_string(r.t_b) + " degree=" + r.degree +
                   "\n";
          } else if constexpr (std::is_same_v<T, JacobianRecord>) {
            out += "  g=" + std::to_string(r.g) +
                   " jacobian=" + r.jacobian_degree + " min_locus=(" +
                   r.min_delta + "),t=" + std::to_string(r.min_t) + " -> " +
                   r.min_locus_degree +
                   " exceeds=" + yes(r.locus_min_exceeds_jacobian) +
                   " distinct=" + yes(r.jacobian_distinct_from_all);
            if (!r.locus_degrees.empty())
              out += " degrees=" + detail::join(r.locus_degrees, ",");
            out += "\n";
          } else if constexpr (std::is_same_v<T, DivergenceRecord>) {
            out += "  g=" + std::to_string(r.g) + " delta=(" + r.delta +
                   ") t=" + std::to_string(r.t) + " printed=" + r.printed +
                   " authoritative=" + r.authoritative +
                   " equal=" + yes(r.equal) + "\n";
          }
        },
        record);
  }
  out += "verdict: ";
  out += verdict_name(report.verdict);
  out += '\n';
  return out;
}

// ---------------------------------------------------------------------------
// the summary table

struct TableRow {
  int g = 0;
  std::string delta;
  int t = 0;
  long long d = 0;
  long long dim_sing = 0;
  long long codim = 0;
  BigInt degree;
  std::optional<BigInt> degree_euler;
  std::optional<BigInt> degree_series;
  BigInt jacobian;
  Provenance provenance = Provenance::Proved;
};

// The series column stays cheap: filled only while the kernel truncation
// g - 2d stays below this, left empty beyond it.
constexpr int kTableSeriesLimit = 64;

inline std::vector<TableRow> build_table(int g_max,
                                         const ScanOptions& options = {}) {
  if (g_max < 4)
    throw DomainError("build_table: the first singular locus is at g = 4");
  auto slices = detail::map_over_genus<std::vector<TableRow>>(
      4, g_max, options.threads, [&](int g) {
        std::vector<TableRow> rows;
        const BigInt jacobian = gauss_degree_jacobian(g, false);
        for (const LocusSpec& spec : enumerate_loci(g, options)) {
          TableRow row;
          row.g = g;
          row.delta = spec.delta().str();
          row.t = spec.t();
          row.d = spec.d();
          row.dim_sing = spec.dim_sing();
          row.codim = spec.codim();
          row.degree = gauss_degree_locus(spec, DegreeMethod::Closed);
          row.degree_euler = gauss_degree_locus(spec, DegreeMethod::Euler);
          if (spec.smooth_branch() || g - 2 * spec.d() <= kTableSeriesLimit)
            row.degree_series = gauss_degree_locus(spec, DegreeMethod::Series);
          row.jacobian = jacobian;
          row.provenance = spec.provenance();
          rows.push_back(std::move(row));
        }
        return rows;
      });
  std::vector<TableRow> rows;
  for (auto& slice : slices)
    for (auto& row : slice) rows.push_back(std::move(row));
  return rows;
}

inline Json table_to_json(const std::vector<TableRow>& rows) {
  Json array = Json::array();
  for (const TableRow& row : rows) {
    Json j;
    j["g"] = row.g;
    j["delta"] = row.delta;
    j["t"] = row.t;
    j["d"] = row.d;
    j["dim_sing"] = row.dim_sing;
    j["codim"] = row.codim;
    j["degree"] = to_decimal(row.degree);
    j["degree_euler"] =
        row.degree_euler ? Json(to_decimal(*row.degree_euler)) : Json();
    j["degree_series"] =
        row.degree_series ? Json(to_decimal(*row.degree_series)) : Json();
    j["jacobian"] = to_decimal(row.jacobian);
    j["provenance"] = provenance_name(row.provenance);
    array.push_back(std::move(j));
  }
  Json j;
  j["rows"] = std::move(array);
  return j;
}

inline std::string emit_table_json(const std::vector<TableRow>& rows) {
  return table_to_json(rows).dump(2) + "\n";
}

inline std::string emit_table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "g,delta,t,d,dim_sing,codim,degree,degree_euler,degree_series,"
      "jacobian,provenance\n";
  for (const TableRow& row : rows) {
    out += detail::csv_row(
        {std::to_string(row.g), row.delta, std::to_string(row.t),
         std::to_string(row.d), std::to_string(row.dim_sing),
         std::to_string(row.codim), to_decimal(row.degree),
         row.degree_euler ? to_decimal(*row.degree_euler) : "",
         row.degree_series ? to_decimal(*row.degree_series) : "",
         to_decimal(row.jacobian), provenance_name(row.provenance)});
  }
  return out;
}

inline std::string emit_table_text(const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"g", "delta", "t", "d", "dim_sing", "codim", "degree",
                  "degree_euler", "degree_series", "jacobian", "provenance"});
  for (const TableRow& row : rows) {
    grid.push_back({std::to_string(row.g), "(" + row.delta + ")",
                    std::to_string(row.t), std::to_string(row.d),
                    std::to_string(row.dim_sing), std::to_string(row.codim),
                    to_decimal(row.degree),
                    row.degree_euler ? to_decimal(*row.degree_euler) : "-",
                    row.degree_series ? to_decimal(*row.degree_series) : "-",
                    to_decimal(row.jacobian),
                    provenance_name(row.provenance)});
  }
  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i)
      widths[i] = std::max(widths[i], line[i].size());
  std::string out;
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out += "  ";
      out += line[i];
      if (i + 1 < line.size())
        out += std::string(widths[i] - line[i].size(), ' ');
    }
    out += '\n';
  }
  return out;
}

}  // namespace gaussdeg
