#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anonykit/io.hpp"

namespace anonykit {

enum class SweepAlgo { fold, spread };
enum class SweepOrder { random, sorted };

const char* algo_name(SweepAlgo a);    // "fold" / "spread"
const char* order_name(SweepOrder o);  // "random" / "sorted"

struct SweepVariant {
  SweepAlgo algo;
  SweepOrder order;

  bool operator==(const SweepVariant&) const = default;
};

// Parses "random-fold", "sorted-spread", ... ; anything else is a parse error.
SweepVariant parse_variant(const std::string& name);
std::string variant_name(const SweepVariant& v);

struct SweepRow {
  Size k = 0;
  SweepVariant variant;
  std::uint64_t seed = 0;
  Size cost = 0;
  Size ratio_num = 0;  // cost/k reduced to lowest terms
  Size ratio_den = 1;
};

struct SweepReport {
  std::vector<SweepRow> rows;
};

// k values from the largest count up to floor(total/2). When that range is
// empty (total < 2 * max count) the grid collapses to the single point
// max count and `degenerate` is set so callers can warn.
struct KGrid {
  std::vector<Size> values;  // strictly increasing
  bool degenerate = false;
};

KGrid default_k_grid(const FrequencyTable& table, int samples = 200);
KGrid linear_k_grid(const FrequencyTable& table, int samples = 200);

// Runs every requested variant at every grid point. "fold" is the next-fit
// covering pass, "spread" its dealing variant; "sorted" presents counts in
// descending order, "random" in a seeded shuffle (the same shuffle for every
// variant at a given k, derived from the master seed and k). Rows come out
// ordered by (k, algorithm, order) and all carry the master seed.
SweepReport run_sweep(const FrequencyTable& table,
                      const std::vector<SweepVariant>& variants,
                      const std::vector<Size>& k_grid, std::uint64_t seed);

// "7/5" for non-integral ratios, plain integers otherwise.
std::string format_ratio(Size num, Size den);

void write_sweep_csv(const SweepReport& report, std::ostream& out);
void write_sweep_svg(const SweepReport& report, std::ostream& out);

// Writes the CSV (and optionally the SVG chart); refuses empty reports
// before touching any file.
void emit_report(const SweepReport& report, const std::string& csv_path,
                 const std::optional<std::string>& svg_path = std::nullopt);

}  // namespace anonykit
