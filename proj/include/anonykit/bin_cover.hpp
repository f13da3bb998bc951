#ifndef ANONYKIT_BIN_COVER_HPP
#define ANONYKIT_BIN_COVER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "anonykit/core.hpp"

namespace anonykit {

// ---------------------------------------------------------------------------
// Covering heuristics
// ---------------------------------------------------------------------------

// Fold: linear-time next-fit cover. Items of size >= k are closed out as
// singleton bins; the remaining items are scanned in `order`, accumulating
// into the current bin, which closes as soon as its level reaches k. A
// trailing underfull bin is merged into the most recently closed scan bin,
// or into the first oversize singleton when no scan bin closed. The returned
// packing is feasible and costs at most max(k - 1 + max_i x_i, 3k - 3).
Packing fold(const ValidatedInstance& inst, std::span<const int> order);

// Fold in item-index order.
Packing fold(const ValidatedInstance& inst);

// Spread: 5/2-approximation. Runs next-fit over the items in decreasing size
// order (ties by item index), then repairs an underfull trailing bin by case
// analysis on the largest leftover item; with at most three greedy bins it
// switches to exact search (n <= 16) or best-of-repairs. The fold packings
// for both the decreasing and the identity order always enter the candidate
// pool, and the cheapest feasible candidate wins, so spread never loses to
// fold on the same instance.
Packing spread(const ValidatedInstance& inst);

// Order-sensitive simplification of spread used for experiments: next-fit in
// the given order, then the trailing underfull bin's items are re-dealt over
// the closed bins - each to the lowest-level bin while that cannot raise the
// current maximum, then strict round-robin over bins 0,1,2,... for the rest.
Packing spread_experimental(const ValidatedInstance& inst,
                            std::span<const int> order);

// ---------------------------------------------------------------------------
// Balanced splitting helpers
// ---------------------------------------------------------------------------

// Splits `values` (each <= max_value, sum s) into a prefix/suffix pair whose
// sums both satisfy 2*sum <= s + max_value. The cut index is the one whose
// doubled prefix sum lands closest to s (ties towards the longer prefix),
// which always lies within max_value of s because consecutive prefix sums
// differ by at most max_value. Throws bound_violated if a value exceeds
// max_value.
std::pair<std::vector<Size>, std::vector<Size>> split_two(
    std::span<const Size> values, Size max_value);

// Splits `values` (each <= total/2, summing exactly to `total`) into three
// parts, each with 2*sum <= total: the largest value alone, and split_two of
// the rest with the largest value as the bound. Parts may be empty.
std::array<std::vector<Size>, 3> split_three(std::span<const Size> values,
                                             Size total);

// ---------------------------------------------------------------------------
// Enumeration scheme: (1+eps)-style guarantees
// ---------------------------------------------------------------------------

// Exact rational on 128-bit integers. Wide enough for every rounding ladder
// whose enumeration fits the state budget; overflow is detected and reported
// rather than wrapped.
struct Rat128 {
  __int128 num = 0;
  __int128 den = 1;
};

// Geometric size ladder eps*(1+eps)^l for l = 0..N, in units of k, where N is
// the largest index keeping the entry below 3. Item sizes in [eps*k, 3k) are
// rounded down onto the ladder; the gap between neighbours is a factor 1+eps,
// which is where the approximation loss comes from.
class RoundingLadder {
 public:
  RoundingLadder(Size eps_num, Size eps_den);

  int levels() const { return static_cast<int>(entries_.size()); }
  const Rat128& entry(int l) const { return entries_[l]; }

  // -1/0/+1 comparison of entry(l) against the rational num/den.
  int compare_entry(int l, Size num, Size den) const;

  // Largest l with entry(l) <= x/k; requires x >= eps*k.
  int round_index(Size x, Size k) const;

  Size eps_num() const { return eps_num_; }
  Size eps_den() const { return eps_den_; }

 private:
  std::vector<Rat128> entries_;
  Size eps_num_;
  Size eps_den_;
};

// Multiset of ladder indices describing how one bin is filled with rounded
// large items; total rounded size stays below 3 (in units of k).
struct BinConfiguration {
  std::vector<int> ladder_counts;  // ladder_counts[l] = items rounded to l

  int item_count() const {
    int c = 0;
    for (int v : ladder_counts) c += v;
    return c;
  }
};

// All configurations drawing at most `available[l]` items of each ladder
// index, ordered canonically (lowest ladder index used, then ascending count
// vectors). The empty configuration is excluded. `budget` is decremented per
// enumeration step; exhaustion throws enumeration_budget_exceeded.
std::vector<BinConfiguration> enumerate_configurations(
    const RoundingLadder& ladder, const std::vector<int>& available,
    std::uint64_t& budget);

// One way to spend the whole multiset of rounded large items: a count per
// configuration (exactly consuming every large item) plus a number of bins
// left empty for small items. Total bins never exceed the applicable budget
// b, since no feasible packing uses more.
struct PackingType {
  std::vector<std::pair<int, int>> config_counts;  // (config index, count)
  int empty_bins = 0;
};

struct PtasOptions {
  // Cap on enumeration states (configurations, types and their evaluations).
  std::uint64_t budget = 10'000'000;
};

// Enumeration scheme with guarantee cost <= (1+eps)*(Opt + k): rounds large
// items (>= eps*k) onto the ladder, enumerates every packing type, replaces
// rounded items by the originals, greedily completes with the small items
// (always into the lowest bin), then merges the two lowest bins while any bin
// is below k. Returns the cheapest resulting feasible packing.
Packing approx_two_eps(const ValidatedInstance& inst, Size eps_num,
                       Size eps_den, const PtasOptions& opts = {});

// Variant trading constraint for objective: every returned bin reaches at
// least ceil((1-2*eps)*k) and the maximum level is at most ceil((1+eps)*Opt),
// where Opt is the optimum under the strict >= k constraint. Same pipeline as
// approx_two_eps but with the wider bin budget floor(total/ceil((1-eps)k)),
// a weak-feasibility filter on types (small items must be able to lift every
// bin's rounded level to (1-eps)), and no merge phase.
RelaxedPacking relaxed_one_eps(const ValidatedInstance& inst, Size eps_num,
                               Size eps_den, const PtasOptions& opts = {});

// ---------------------------------------------------------------------------
// Exact solver
// ---------------------------------------------------------------------------

struct ExactResult {
  Size cost = 0;
  Packing packing;
};

// Optimal min-max cover by dynamic programming over item subsets:
// f(S) = min over feasible T subseteq S of max(level(T), f(S \ T)).
// Exponential (3^n submask pairs); rejects n > 20 with too_large.
ExactResult exact_min_max(const ValidatedInstance& inst);

}  // namespace anonykit

#endif  // ANONYKIT_BIN_COVER_HPP
