#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gaussdeg/degree.hpp"

namespace gaussdeg {

enum class ScanKind {
  Monotonicity,
  Separation,
  Collisions,
  JacobianComparison,
  Divergence
};

enum class Verdict { Pass, Fail, Informational };

inline const char* scan_kind_name(ScanKind kind) {
  switch (kind) {
    case ScanKind::Monotonicity: return "monotonicity";
    case ScanKind::Separation: return "separation";
    case ScanKind::Collisions: return "collisions";
    case ScanKind::JacobianComparison: return "jacobian";
    case ScanKind::Divergence: return "divergence";
  }
  return "?";
}

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Informational: return "informational";
  }
  return "?";
}

struct ScanOptions {
  bool include_smooth_branch = false;
  std::vector<int> extrapolated_ds;     // extra principal degrees (d) to scan
  bool allow_extrapolated_type = false; // unproved delta in monotonicity
  unsigned threads = 0;                 // 0: GAUSSDEG_THREADS, then hardware
};

// All loci handled at genus g, ordered by (delta, t): the three proved
// types, optionally extra extrapolated ones, A1 window rows and (on
// request) the smooth-branch row of each type.
inline std::vector<LocusSpec> enumerate_loci(int g,
                                             const ScanOptions& options = {}) {
  if (g < 2) throw DomainError("enumerate_loci: need g >= 2");
  std::vector<PolarizationType> deltas = {PolarizationType({2}),
                                          PolarizationType({2, 2}),
                                          PolarizationType({3})};
  for (int d : options.extrapolated_ds) {
    PolarizationType extra({d});  // validates d >= 2
    bool duplicate = false;
    for (const auto& known : deltas) duplicate |= known == extra;
    if (!duplicate) deltas.push_back(extra);
  }
  std::sort(deltas.begin(), deltas.end());

  std::vector<LocusSpec> loci;
  for (const auto& delta : deltas) {
    const int d = static_cast<int>(delta.degree());
    if (options.include_smooth_branch) {
      const int t_smooth = d / 2;
      if (t_smooth >= 1 && 2 * t_smooth <= g)
        loci.emplace_back(g, delta, t_smooth);
    }
    for (int t = d; 2 * t <= g; ++t) loci.emplace_back(g, delta, t);
  }
  return loci;
}

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return std::min(requested, 64u);
  if (const char* env = std::getenv("GAUSSDEG_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed <= 64)
      return static_cast<unsigned>(parsed);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Apply fn to each genus in [g_min, g_max] on a small worker pool. Results
// are stored by position, so the merged output is identical for any worker
// count. The first exception (if any) is rethrown after the join.
template <typename Result>
std::vector<Result> map_over_genus(int g_min, int g_max, unsigned threads,
                                   const std::function<Result(int)>& fn) {
  if (g_max < g_min)
    throw DomainError("scan: need g_min <= g_max");
  const int count = g_max - g_min + 1;
  std::vector<Result> results(static_cast<std::size_t>(count));
  const unsigned workers =
      std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(g_min + i);
    return results;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) break;
        try {
          results[i] = fn(g_min + i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          break;
        }
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// records

struct MonotonicityRecord {
  int g = 0;
  std::string delta;
  int t_min = 0;
  int t_max = 0;
  std::vector<std::string> degrees;  // t ascending, decimal
  bool strictly_decreasing = false;
};

struct SeparationRecord {  // two loci at the same genus, equal degree
  int g = 0;
  std::string delta_a;
  int t_a = 0;
  std::string delta_b;
  int t_b = 0;
  std::string degree;
};

struct CollisionRecord {  // equal degree across different genera, g_a < g_b
  int g_a = 0;
  std::string delta_a;
  int t_a = 0;
  int g_b = 0;
  std::string delta_b;
  int t_b = 0;
  std::string degree;
};

struct JacobianRecord {
  int g = 0;
  std::string jacobian_degree;
  std::string min_locus_degree;
  std::string min_delta;
  int min_t = 0;
  bool locus_min_exceeds_jacobian = false;
  bool jacobian_distinct_from_all = false;
  std::vector<std::string> locus_degrees;  // full list, only for g = 5, 6
};

struct DivergenceRecord {
  int g = 0;
  std::string delta;
  int t = 0;
  std::string printed;
  std::string authoritative;
  bool equal = false;
};

using ScanRecord = std::variant<MonotonicityRecord, SeparationRecord,
                                CollisionRecord, JacobianRecord,
                                DivergenceRecord>;

struct ScanReport {
  ScanKind kind = ScanKind::Monotonicity;
  std::map<std::string, std::string> parameters;
  std::vector<ScanRecord> records;
  Verdict verdict = Verdict::Informational;
};

// ---------------------------------------------------------------------------
// monotonicity: for fixed delta and g, the degree strictly decreases in t

inline ScanReport scan_monotonicity(const PolarizationType& delta, int g_min,
                                    int g_max,
                                    const ScanOptions& options = {}) {
  if (!delta.proved() && !options.allow_extrapolated_type)
    throw DomainError("scan_monotonicity: type " + delta.str() +
                      " is not a proved case");
  const int d = static_cast<int>(delta.degree());
  if (2 * d > g_min)
    throw DomainError("scan_monotonicity: need 2d <= g_min so the window is "
                      "nonempty at every genus");
  auto per_genus = detail::map_over_genus<MonotonicityRecord>(
      g_min, g_max, options.threads, [&](int g) {
        MonotonicityRecord record;
        record.g = g;
        record.delta = delta.str();
        record.t_min = d;
        record.t_max = g / 2;
        record.strictly_decreasing = true;
        BigInt previous;
        for (int t = d; 2 * t <= g; ++t) {
          BigInt degree = gauss_degree_locus(LocusSpec(g, delta, t));
          if (t > d && degree >= previous) record.strictly_decreasing = false;
          record.degrees.push_back(to_decimal(degree));
          previous = std::move(degree);
        }
        return record;
      });

  ScanReport report;
  report.kind = ScanKind::Monotonicity;
  report.parameters["g_min"] = std::to_string(g_min);
  report.parameters["g_max"] = std::to_string(g_max);
  report.parameters["delta"] = delta.str();
  bool all = true;
  for (auto& record : per_genus) {
    all &= record.strictly_decreasing;
    report.records.emplace_back(std::move(record));
  }
  report.verdict = all ? Verdict::Pass : Verdict::Fail;
  return report;
}

// All three proved types, each starting no earlier than its window allows.
inline ScanReport scan_monotonicity_all(int g_min, int g_max,
                                        const ScanOptions& options = {}) {
  ScanReport report;
  report.kind = ScanKind::Monotonicity;
  report.parameters["g_min"] = std::to_string(g_min);
  report.parameters["g_max"] = std::to_string(g_max);
  report.parameters["delta"] = "all";
  bool all = true;
  for (const auto& delta :
       {PolarizationType({2}), PolarizationType({2, 2}), PolarizationType({3})}) {
    const int clamped = std::max(g_min, 2 * static_cast<int>(delta.degree()));
    if (clamped > g_max) continue;
    ScanReport partial = scan_monotonicity(delta, clamped, g_max, options);
    all &= partial.verdict == Verdict::Pass;
    for (auto& record : partial.records)
      report.records.emplace_back(std::move(record));
  }
  report.verdict = all ? Verdict::Pass : Verdict::Fail;
  return report;
}

// ---------------------------------------------------------------------------
// separation: at fixed genus, distinct loci have distinct degrees

namespace detail {

struct LocusValue {
  std::string delta;
  int t = 0;
  std::string degree;
  std::uint64_t hash = 0;
};

struct SeparationSlice {
  std::vector<SeparationRecord> findings;
  std::size_t loci = 0;
};

inline std::vector<LocusValue> locus_values(int g, const ScanOptions& options) {
  std::vector<LocusValue> values;
  for (const LocusSpec& spec : enumerate_loci(g, options)) {
    LocusValue v;
    v.delta = spec.delta().str();
    v.t = spec.t();
    v.degree = to_decimal(gauss_degree_locus(spec));
    v.hash = decimal_hash(v.degree);
    values.push_back(std::move(v));
  }
  return values;
}

}  // namespace detail

inline ScanReport scan_separation(int g_min, int g_max,
                                  const ScanOptions& options = {}) {
  if (g_min < 4)
    throw DomainError("scan_separation: the first singular locus is at g = 4");
  auto slices = detail::map_over_genus<detail::SeparationSlice>(
      g_min, g_max, options.threads, [&](int g) {
        detail::SeparationSlice slice;
        auto values = detail::locus_values(g, options);
        slice.loci = values.size();
        // hash buckets first; exact re-check inside each bucket
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < values.size(); ++i)
          buckets[values[i].hash].push_back(i);
        for (std::size_t i = 0; i < values.size(); ++i) {
          const auto& bucket = buckets[values[i].hash];
          if (bucket.size() < 2) continue;
          for (std::size_t j : bucket) {
            if (j <= i) continue;
            if (values[i].degree != values[j].degree) continue;
            SeparationRecord finding;
            finding.g = g;
            finding.delta_a = values[i].delta;
            finding.t_a = values[i].t;
            finding.delta_b = values[j].delta;
            finding.t_b = values[j].t;
            finding.degree = values[i].degree;
            slice.findings.push_back(std::move(finding));
          }
        }
        return slice;
      });

  ScanReport report;
  report.kind = ScanKind::Separation;
  report.parameters["g_min"] = std::to_string(g_min);
  report.parameters["g_max"] = std::to_string(g_max);
  if (options.include_smooth_branch)
    report.parameters["include_smooth_branch"] = "true";
  std::size_t total = 0;
  for (auto& slice : slices) {
    total += slice.loci;
    for (auto& finding : slice.findings)
      report.records.emplace_back(std::move(finding));
  }
  report.parameters["loci_scanned"] = std::to_string(total);
  report.verdict = report.records.empty() ? Verdict::Pass : Verdict::Fail;
  return report;
}

// ---------------------------------------------------------------------------
// collisions: equal degrees across different genera (expected, documented)

inline ScanReport scan_collisions(int g_max, const ScanOptions& options = {}) {
  const int g_min = 4;
  if (g_max < g_min)
    throw DomainError("scan_collisions: need g_max >= 4");
  struct Entry {
    int g;
    std::string delta;
    int t;
    std::string degree;
    std::uint64_t hash;
  };
  auto slices = detail::map_over_genus<std::vector<Entry>>(
      g_min, g_max, options.threads, [&](int g) {
        std::vector<Entry> entries;
        for (auto& v : detail::locus_values(g, options))
          entries.push_back(Entry{g, std::move(v.delta), v.t,
                                  std::move(v.degree), v.hash});
        return entries;
      });

  std::vector<Entry> all;
  for (auto& slice : slices)
    for (auto& entry : slice) all.push_back(std::move(entry));

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < all.size(); ++i)
    buckets[all[i].hash].push_back(i);

  ScanReport report;
  report.kind = ScanKind::Collisions;
  report.parameters["g_min"] = std::to_string(g_min);
  report.parameters["g_max"] = std::to_string(g_max);
  if (options.include_smooth_branch)
    report.parameters["include_smooth_branch"] = "true";
  report.parameters["loci_scanned"] = std::to_string(all.size());

  std::vector<CollisionRecord> findings;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& bucket = buckets[all[i].hash];
    if (bucket.size() < 2) continue;
    for (std::size_t j : bucket) {
      if (j <= i) continue;
      if (all[i].g == all[j].g) continue;  // separation's jurisdiction
      if (all[i].degree != all[j].degree) continue;
      const Entry& lo = all[i].g < all[j].g ? all[i] : all[j];
      const Entry& hi = all[i].g < all[j].g ? all[j] : all[i];
      CollisionRecord record;
      record.g_a = lo.g;
      record.delta_a = lo.delta;
      record.t_a = lo.t;
      record.g_b = hi.g;
      record.delta_b = hi.delta;
      record.t_b = hi.t;
      record.degree = lo.degree;
      findings.push_back(std::move(record));
    }
  }
  std::sort(findings.begin(), findings.end(), [](const auto& a, const auto& b) {
    return std::tie(a.g_b, a.g_a, a.delta_a, a.t_a, a.delta_b, a.t_b) <
           std::tie(b.g_b, b.g_a, b.delta_a, b.t_a, b.delta_b, b.t_b);
  });
  for (auto& f : findings) report.records.emplace_back(std::move(f));
  report.verdict = Verdict::Informational;
  return report;
}

// ---------------------------------------------------------------------------
// jacobian comparison: locus degrees against C(2g-2, g-1)

inline ScanReport scan_jacobian_comparison(int g_min, int g_max,
                                           const ScanOptions& options = {}) {
  if (g_min < 5)
    throw DomainError("scan_jacobian_comparison: comparisons start at g = 5");
  auto per_genus = detail::map_over_genus<JacobianRecord>(
      g_min, g_max, options.threads, [&](int g) {
        JacobianRecord record;
        record.g = g;
        const BigInt jacobian = gauss_degree_jacobian(g, false);
        record.jacobian_degree = to_decimal(jacobian);
        std::optional<BigInt> minimum;
        record.jacobian_distinct_from_all = true;
        for (const LocusSpec& spec : enumerate_loci(g, options)) {
          BigInt degree = gauss_degree_locus(spec);
          if (degree == jacobian) record.jacobian_distinct_from_all = false;
          if (g == 5 || g == 6)
            record.locus_degrees.push_back(to_decimal(degree));
          if (!minimum || degree < *minimum) {
            minimum = degree;
            record.min_delta = spec.delta().str();
            record.min_t = spec.t();
          }
        }
        record.min_locus_degree = to_decimal(*minimum);
        record.locus_min_exceeds_jacobian = *minimum > jacobian;
        return record;
      });

  ScanReport report;
  report.kind = ScanKind::JacobianComparison;
  report.parameters["g_min"] = std::to_string(g_min);
  report.parameters["g_max"] = std::to_string(g_max);
  bool ok = true;
  for (auto& record : per_genus) {
    if (record.g >= 7)
      ok &= record.locus_min_exceeds_jacobian;
    else
      ok &= record.jacobian_distinct_from_all;
    report.records.emplace_back(std::move(record));
  }
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

// ---------------------------------------------------------------------------
// divergence: the printed polynomial forms against the authoritative degree

inline ScanReport scan_divergence(int g_max, const ScanOptions& options = {}) {
  const int g_min = 4;
  if (g_max < 6)
    throw DomainError("scan_divergence: need g_max >= 6 to reach every type");
  auto slices = detail::map_over_genus<std::vector<DivergenceRecord>>(
      g_min, g_max, options.threads, [&](int g) {
        std::vector<DivergenceRecord> rows;
        for (const LocusSpec& spec : enumerate_loci(g)) {
          DivergenceRecord row;
          row.g = g;
          row.delta = spec.delta().str();
          row.t = spec.t();
          row.printed = to_decimal(printed_F(g, spec.delta(), spec.t()));
          row.authoritative = to_decimal(gauss_degree_locus(spec));
          row.equal = row.printed == row.authoritative;
          rows.push_back(std::move(row));
        }
        return rows;
      });

  ScanReport report;
  report.kind = ScanKind::Divergence;
  report.parameters["g_min"] = std::to_string(g_min);
  report.parameters["g_max"] = std::to_string(g_max);
  std::size_t mismatches = 0;
  for (auto& slice : slices)
    for (auto& row : slice) {
      mismatches += row.equal ? 0 : 1;
      report.records.emplace_back(std::move(row));
    }
  report.parameters["mismatches"] = std::to_string(mismatches);
  report.verdict = Verdict::Informational;
  return report;
}

}  // namespace gaussdeg
