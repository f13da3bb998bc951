#include "anonykit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>

#include "anonykit/bin_cover.hpp"
#include "anonykit/rng.hpp"

namespace anonykit {

namespace {

constexpr SweepAlgo kAlgos[] = {SweepAlgo::fold, SweepAlgo::spread};
constexpr SweepOrder kOrders[] = {SweepOrder::random, SweepOrder::sorted};

std::string fmt(double v, const char* format = "%.1f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

KGrid make_grid(const FrequencyTable& table, int samples, bool log_spaced) {
  if (table.counts.empty()) {
    fail(errc::empty_instance, "frequency table has no rows");
  }
  if (samples < 1) fail(errc::precondition_violated, "samples must be >= 1");
  const Size lo = table.max_count();
  const Size hi = table.total() / 2;
  KGrid grid;
  if (hi <= lo) {
    grid.values.push_back(lo);
    grid.degenerate = hi < lo;
    return grid;
  }
  if (samples < 2) {
    fail(errc::precondition_violated,
         "need at least 2 samples to span a non-trivial k range");
  }
  for (int t = 0; t < samples; ++t) {
    Size v;
    if (t == 0) {
      v = lo;
    } else if (t == samples - 1) {
      v = hi;
    } else {
      const double frac = static_cast<double>(t) / (samples - 1);
      const double raw =
          log_spaced
              ? static_cast<double>(lo) *
                    std::pow(static_cast<double>(hi) / static_cast<double>(lo),
                             frac)
              : static_cast<double>(lo) +
                    (static_cast<double>(hi) - static_cast<double>(lo)) * frac;
      v = std::clamp<Size>(std::llround(raw), lo, hi);
    }
    if (grid.values.empty() || v > grid.values.back()) grid.values.push_back(v);
  }
  return grid;
}

}  // namespace

const char* algo_name(SweepAlgo a) {
  return a == SweepAlgo::fold ? "fold" : "spread";
}

const char* order_name(SweepOrder o) {
  return o == SweepOrder::random ? "random" : "sorted";
}

SweepVariant parse_variant(const std::string& name) {
  for (SweepAlgo a : kAlgos) {
    for (SweepOrder o : kOrders) {
      if (name == std::string(order_name(o)) + "-" + algo_name(a)) {
        return {a, o};
      }
    }
  }
  fail(errc::parse_error, "unknown sweep variant '" + name +
                              "' (expected e.g. 'sorted-fold')");
}

std::string variant_name(const SweepVariant& v) {
  return std::string(order_name(v.order)) + "-" + algo_name(v.algo);
}

KGrid default_k_grid(const FrequencyTable& table, int samples) {
  return make_grid(table, samples, true);
}

KGrid linear_k_grid(const FrequencyTable& table, int samples) {
  return make_grid(table, samples, false);
}

SweepReport run_sweep(const FrequencyTable& table,
                      const std::vector<SweepVariant>& variants,
                      const std::vector<Size>& k_grid, std::uint64_t seed) {
  if (table.counts.empty()) {
    fail(errc::empty_instance, "frequency table has no rows");
  }
  if (variants.empty()) {
    fail(errc::precondition_violated, "no sweep variants selected");
  }
  if (k_grid.empty()) fail(errc::precondition_violated, "empty k grid");
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (k_grid[i] < 1) fail(errc::precondition_violated, "k must be >= 1");
    if (i > 0 && k_grid[i] <= k_grid[i - 1]) {
      fail(errc::precondition_violated, "k grid must be strictly increasing");
    }
  }
  const Size total = table.total();
  if (k_grid.back() > total) {
    fail(errc::infeasible_k, "k=" + std::to_string(k_grid.back()) +
                                 " exceeds the total count " +
                                 std::to_string(total));
  }

  const int n = static_cast<int>(table.counts.size());
  std::vector<int> sorted_order(n);
  std::iota(sorted_order.begin(), sorted_order.end(), 0);
  std::stable_sort(sorted_order.begin(), sorted_order.end(),
                   [&](int a, int b) { return table.counts[a] > table.counts[b]; });

  SweepReport report;
  for (Size k : k_grid) {
    const auto inst = validate_instance({table.counts, k});
    std::vector<int> random_order(n);
    std::iota(random_order.begin(), random_order.end(), 0);
    fisher_yates(random_order, derive_seed(seed, static_cast<std::uint64_t>(k)));

    for (SweepAlgo algo : kAlgos) {
      for (SweepOrder order : kOrders) {
        if (std::find(variants.begin(), variants.end(),
                      SweepVariant{algo, order}) == variants.end()) {
          continue;
        }
        const auto& ord =
            order == SweepOrder::random ? random_order : sorted_order;
        const Packing packing = algo == SweepAlgo::fold
                                    ? fold(inst, ord)
                                    : spread_experimental(inst, ord);
        SweepRow row;
        row.k = k;
        row.variant = {algo, order};
        row.seed = seed;
        row.cost = packing.cost();
        const Size g = std::gcd(row.cost, k);
        row.ratio_num = row.cost / g;
        row.ratio_den = k / g;
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

std::string format_ratio(Size num, Size den) {
  if (den < 1) fail(errc::precondition_violated, "ratio denominator must be >= 1");
  const Size g = std::gcd(num, den);
  const Size n = num / g, d = den / g;
  if (d == 1) return std::to_string(n);
  return std::to_string(n) + "/" + std::to_string(d);
}

void write_sweep_csv(const SweepReport& report, std::ostream& out) {
  out << "k,algorithm,order,seed,cost,ratio\n";
  for (const auto& row : report.rows) {
    out << row.k << ',' << algo_name(row.variant.algo) << ','
        << order_name(row.variant.order) << ',' << row.seed << ',' << row.cost
        << ',' << format_ratio(row.ratio_num, row.ratio_den) << '\n';
  }
}

void write_sweep_svg(const SweepReport& report, std::ostream& out) {
  constexpr double kLeft = 70, kTop = 40, kPlotW = 600, kPlotH = 460;
  constexpr double kWidth = 840, kHeight = 560;
  static const char* kColors[] = {"#1b73c1", "#d2372c", "#2b8a3e", "#8c4bc1"};

  double kmin = 0, kmax = 0, rmax = 1;
  for (const auto& row : report.rows) {
    const double k = static_cast<double>(row.k);
    const double r =
        static_cast<double>(row.ratio_num) / static_cast<double>(row.ratio_den);
    if (kmin == 0 || k < kmin) kmin = k;
    kmax = std::max(kmax, k);
    rmax = std::max(rmax, r);
  }
  const double ymax = std::max(rmax, 1.05);
  const bool log_x = kmin < kmax;
  auto x_of = [&](Size k) {
    if (!log_x) return kLeft + kPlotW / 2;
    const double f = (std::log(static_cast<double>(k)) - std::log(kmin)) /
                     (std::log(kmax) - std::log(kmin));
    return kLeft + f * kPlotW;
  };
  auto y_of = [&](Size num, Size den) {
    const double r = static_cast<double>(num) / static_cast<double>(den);
    return kTop + (ymax - r) / (ymax - 1.0) * kPlotH;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"16\">overfull ratio (cost / k) by k</text>\n";
  // Axes.
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + kPlotH << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + kPlotH << "\" x2=\""
      << kLeft + kPlotW << "\" y2=\"" << kTop + kPlotH
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"" << kTop + kPlotH + 20
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(kmin, "%.0f")
      << "</text>\n";
  out << "<text x=\"" << kLeft + kPlotW - 30 << "\" y=\"" << kTop + kPlotH + 20
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(kmax, "%.0f")
      << "</text>\n";
  out << "<text x=\"" << kLeft - 40 << "\" y=\"" << kTop + kPlotH + 4
      << "\" font-family=\"sans-serif\" font-size=\"12\">1</text>\n";
  out << "<text x=\"" << kLeft - 40 << "\" y=\"" << kTop + 4
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(ymax, "%.2f")
      << "</text>\n";

  int color = 0;
  for (SweepAlgo algo : kAlgos) {
    for (SweepOrder order : kOrders) {
      const SweepVariant v{algo, order};
      std::string pts;
      for (const auto& row : report.rows) {
        if (row.variant != v) continue;
        pts += fmt(x_of(row.k)) + "," + fmt(y_of(row.ratio_num, row.ratio_den)) +
               " ";
      }
      if (pts.empty()) continue;
      const char* c = kColors[color % 4];
      out << "<polyline fill=\"none\" stroke=\"" << c
          << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
      const double ly = kTop + 20 * color;
      out << "<line x1=\"" << kLeft + kPlotW + 20 << "\" y1=\"" << ly
          << "\" x2=\"" << kLeft + kPlotW + 44 << "\" y2=\"" << ly
          << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
      out << "<text x=\"" << kLeft + kPlotW + 50 << "\" y=\"" << ly + 4
          << "\" font-family=\"sans-serif\" font-size=\"12\">"
          << variant_name(v) << "</text>\n";
      ++color;
    }
  }
  out << "</svg>\n";
}

void emit_report(const SweepReport& report, const std::string& csv_path,
                 const std::optional<std::string>& svg_path) {
  if (report.rows.empty()) {
    fail(errc::precondition_violated, "refusing to write an empty report");
  }
  {
    std::ofstream csv(csv_path);
    if (!csv) fail(errc::io_error, "cannot write " + csv_path);
    write_sweep_csv(report, csv);
    if (!csv.good()) fail(errc::io_error, "failed writing " + csv_path);
  }
  if (svg_path) {
    std::ofstream svg(*svg_path);
    if (!svg) fail(errc::io_error, "cannot write " + *svg_path);
    write_sweep_svg(report, svg);
    if (!svg.good()) fail(errc::io_error, "failed writing " + *svg_path);
  }
}

}  // namespace anonykit
