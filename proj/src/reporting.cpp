#include "urnwalk/reporting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace urnwalk {

namespace {

using Clock = std::chrono::steady_clock;

EnumOptions cell_options(bool prune_h, bool prune_l, int workers, long cap,
                         std::optional<std::chrono::milliseconds> timeout) {
  EnumOptions opts;
  opts.prune_horizon = prune_h;
  opts.prune_lexicographic = prune_l;
  opts.workers = workers;
  opts.exhaustive_cap_delta = cap;
  if (timeout) opts.deadline = Clock::now() + *timeout;
  return opts;
}

std::string format_ms(std::chrono::duration<double, std::milli> d) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << d.count();
  return out.str();
}

void require_even_delta_max(long delta_max) {
  if (delta_max < 2 || delta_max % 2 != 0)
    throw std::invalid_argument("delta-max must be an even integer >= 2, got " +
                                std::to_string(delta_max));
}

}  // namespace

std::vector<SeriesRow> build_table(const TableOptions& opts) {
  require_even_delta_max(opts.delta_max);
  if (opts.methods.empty()) throw std::invalid_argument("at least one method is required");

  std::vector<SeriesRow> rows;
  for (long delta = 2; delta <= opts.delta_max; delta += 2) {
    const WalkConfig cfg = WalkConfig::standard(delta);

    const auto iid_start = Clock::now();
    const Rational iid_value = expected_max_iid(IidConfig::for_delta(delta));
    const auto iid_elapsed =
        std::chrono::duration<double, std::milli>(Clock::now() - iid_start);

    for (Method method : opts.methods) {
      SeriesRow row;
      row.delta = delta;
      row.whites = cfg.whites();
      row.reds = cfg.reds();
      row.method = method;
      row.iid_exact = iid_value;
      row.iid_elapsed = iid_elapsed;
      try {
        const Report report =
            compute_expected_max(cfg, method,
                                 cell_options(opts.prune_horizon, opts.prune_lexicographic,
                                              opts.workers, opts.exhaustive_cap_delta, opts.timeout));
        row.urn_exact = report.expected_max;
        row.urn_elapsed = report.elapsed;
        row.sequences_evaluated = report.sequences_evaluated;
        row.nodes_pruned = report.nodes_pruned();
      } catch (const InfeasibleWorkload& e) {
        row.status = std::string("infeasible: ") + e.what();
      } catch (const EnumerationTimeout&) {
        row.status = "timeout";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<FigurePoint> build_figure_series(long delta_max) {
  require_even_delta_max(delta_max);
  std::vector<FigurePoint> points;
  points.reserve(static_cast<std::size_t>(delta_max / 2));
  for (long delta = 2; delta <= delta_max; delta += 2) {
    FigurePoint point;
    point.delta = delta;
    point.urn = expected_max_dp(WalkConfig::standard(delta));
    point.iid = expected_max_iid(IidConfig::for_delta(delta));
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<BenchRecord> run_benchmark(const BenchOptions& opts) {
  require_even_delta_max(opts.delta_max);
  if (opts.delta_min < 2 || opts.delta_min % 2 != 0 || opts.delta_min > opts.delta_max)
    throw std::invalid_argument("delta-min must be even, >= 2 and <= delta-max");

  std::vector<BenchRecord> records;
  for (long delta = opts.delta_min; delta <= opts.delta_max; delta += 2) {
    const WalkConfig cfg = WalkConfig::standard(delta);
    for (Method method : opts.methods) {
      const bool combos = method == Method::CombinationsRecursive ||
                          method == Method::CombinationsIterative;
      const int flag_cells = combos ? 4 : 1;
      for (int flags = 0; flags < flag_cells; ++flags) {
        BenchRecord record;
        record.delta = delta;
        record.method = method;
        record.flags_apply = combos;
        record.prune_horizon = combos && (flags & 1);
        record.prune_lexicographic = combos && (flags & 2);
        record.status = "ok";
        try {
          const Report report = compute_expected_max(
              cfg, method,
              cell_options(record.prune_horizon, record.prune_lexicographic, 1,
                           opts.exhaustive_cap_delta, opts.timeout));
          record.elapsed = report.elapsed;
          record.sequences_evaluated = report.sequences_evaluated;
          record.sequences_skipped = report.sequences_skipped;
          record.walks_truncated = report.walks_truncated;
          record.steps_evaluated = report.steps_evaluated;
          record.nodes_pruned = report.nodes_pruned();
        } catch (const InfeasibleWorkload& e) {
          record.status = std::string("infeasible: ") + e.what();
        } catch (const EnumerationTimeout&) {
          record.status = "timeout";
        }
        records.push_back(std::move(record));
      }
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    if (a.method != b.method) return static_cast<int>(a.method) < static_cast<int>(b.method);
    if (a.prune_horizon != b.prune_horizon) return !a.prune_horizon;
    return static_cast<int>(a.prune_lexicographic) < static_cast<int>(b.prune_lexicographic);
  });
  return records;
}

std::string table_csv(const std::vector<SeriesRow>& rows, int precision) {
  std::ostringstream out;
  out << "delta,whites,reds,model,method,exact,decimal,runtime_ms,sequences_evaluated,nodes_pruned\n";
  long last_iid_delta = -1;
  for (const SeriesRow& row : rows) {
    out << row.delta << ',' << row.whites << ',' << row.reds << ",urn," << method_name(row.method)
        << ',';
    if (row.urn_exact) {
      out << row.urn_exact->str() << ',' << row.urn_exact->decimal(precision) << ','
          << format_ms(row.urn_elapsed) << ',' << row.sequences_evaluated << ',' << row.nodes_pruned;
    } else {
      out << (row.status.empty() ? "infeasible" : row.status.substr(0, row.status.find(':')))
          << ",,,,";
    }
    out << '\n';
    if (row.delta != last_iid_delta && row.iid_exact) {
      out << row.delta << ',' << row.whites << ',' << row.reds << ",iid,dp,"
          << row.iid_exact->str() << ',' << row.iid_exact->decimal(precision) << ','
          << format_ms(row.iid_elapsed) << ",,\n";
      last_iid_delta = row.delta;
    }
  }
  return out.str();
}

std::string figure_csv(const std::vector<FigurePoint>& points, int precision) {
  std::ostringstream out;
  out << "delta,urn,iid,limit\n";
  const std::string limit = Rational(1, 1).decimal(precision);
  for (const FigurePoint& point : points) {
    out << point.delta << ',' << point.urn.decimal(precision) << ',' << point.iid.decimal(precision)
        << ',' << limit << '\n';
  }
  return out.str();
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "delta,method,prune_horizon,prune_lex,status,runtime_ms,sequences_evaluated,"
         "sequences_skipped,walks_truncated,steps_evaluated,nodes_pruned\n";
  for (const BenchRecord& r : records) {
    out << r.delta << ',' << method_name(r.method) << ',';
    if (r.flags_apply)
      out << (r.prune_horizon ? "on" : "off") << ',' << (r.prune_lexicographic ? "on" : "off") << ',';
    else
      out << "-,-,";
    const bool ok = r.status == "ok";
    out << (ok ? "ok" : r.status.substr(0, r.status.find(':'))) << ',';
    if (ok) {
      out << format_ms(r.elapsed) << ',' << r.sequences_evaluated << ',' << r.sequences_skipped
          << ',' << r.walks_truncated << ',' << r.steps_evaluated << ',' << r.nodes_pruned;
    } else {
      out << ",,,,,";
    }
    out << '\n';
  }
  return out.str();
}

std::size_t failed_cells(const std::vector<SeriesRow>& rows) {
  std::size_t failed = 0;
  for (const SeriesRow& row : rows) failed += !row.status.empty();
  return failed;
}

std::size_t failed_cells(const std::vector<BenchRecord>& records) {
  std::size_t failed = 0;
  for (const BenchRecord& record : records) failed += record.status != "ok";
  return failed;
}

}  // namespace urnwalk
