#include "anonykit/bin_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace anonykit {

namespace {

void check_order(const ValidatedInstance& inst, std::span<const int> order) {
  if (static_cast<int>(order.size()) != inst.n()) {
    fail(errc::precondition_violated,
         "order has " + std::to_string(order.size()) + " entries for " +
             std::to_string(inst.n()) + " items");
  }
  std::vector<char> seen(inst.n(), 0);
  for (int item : order) {
    if (item < 0 || item >= inst.n() || seen[item]) {
      fail(errc::precondition_violated,
           "order is not a permutation of the item indices");
    }
    seen[item] = 1;
  }
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> decreasing_order(const ValidatedInstance& inst) {
  std::vector<int> order = identity_order(inst.n());
  std::stable_sort(order.begin(), order.end(), [&inst](int a, int b) {
    return inst.size(a) > inst.size(b);
  });
  return order;
}

int argmin_level(const std::vector<Size>& levels) {
  return static_cast<int>(
      std::min_element(levels.begin(), levels.end()) - levels.begin());
}

struct NextFitResult {
  std::vector<std::vector<int>> bins;  // trailing bin may be underfull
  std::vector<Size> levels;
  bool last_underfull = false;
};

NextFitResult next_fit(const ValidatedInstance& inst, std::span<const int> seq) {
  NextFitResult r;
  const Size k = inst.k();
  std::vector<int> open;
  Size level = 0;
  for (int item : seq) {
    open.push_back(item);
    level += inst.size(item);
    if (level >= k) {
      r.bins.push_back(open);
      r.levels.push_back(level);
      open.clear();
      level = 0;
    }
  }
  if (!open.empty()) {
    r.bins.push_back(open);
    r.levels.push_back(level);
    r.last_underfull = true;
  }
  return r;
}

// Prefix cut whose doubled sum lands closest to the total (ties towards the
// longer prefix). When all values are at most m this lands within m of the
// total, because consecutive doubled prefix sums move by at most 2m and the
// sequence walks from 0 past s.
std::size_t balanced_cut(std::span<const Size> values) {
  __int128 s = 0;
  for (Size v : values) s += v;
  __int128 prefix = 0;
  __int128 best_dist = s;
  std::size_t best = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    prefix += values[i - 1];
    __int128 d = 2 * prefix - s;
    if (d < 0) d = -d;
    if (d <= best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fold
// ---------------------------------------------------------------------------

Packing fold(const ValidatedInstance& inst, std::span<const int> order) {
  check_order(inst, order);
  const Size k = inst.k();

  std::vector<std::vector<int>> bins;
  for (int i = 0; i < inst.n(); ++i) {
    if (inst.size(i) >= k) bins.push_back({i});
  }

  std::vector<int> open;
  Size open_level = 0;
  int last_closed = -1;
  for (int item : order) {
    if (inst.size(item) >= k) continue;
    open.push_back(item);
    open_level += inst.size(item);
    if (open_level >= k) {
      bins.push_back(open);
      last_closed = static_cast<int>(bins.size()) - 1;
      open.clear();
      open_level = 0;
    }
  }
  if (!open.empty()) {
    // Underfull leftovers fold into the bin closed last, or into the first
    // oversize singleton; one of the two exists because the total reaches k.
    auto& target = bins[last_closed >= 0 ? last_closed : 0];
    target.insert(target.end(), open.begin(), open.end());
  }
  return Packing(inst, std::move(bins));
}

Packing fold(const ValidatedInstance& inst) {
  return fold(inst, identity_order(inst.n()));
}

// ---------------------------------------------------------------------------
// Spread
// ---------------------------------------------------------------------------

Packing spread(const ValidatedInstance& inst) {
  const Size k = inst.k();
  const std::vector<int> desc = decreasing_order(inst);
  NextFitResult greedy = next_fit(inst, desc);

  std::vector<Packing> candidates;
  auto consider = [&](std::vector<std::vector<int>> bins) {
    Packing p(inst, std::move(bins));
    if (p.feasible()) candidates.push_back(std::move(p));
  };

  if (!greedy.last_underfull) {
    consider(greedy.bins);
  } else if (greedy.bins.size() <= 3) {
    if (inst.n() <= 16) {
      candidates.push_back(exact_min_max(inst).packing);
    } else {
      // Too large for exact search: deal the leftovers over the closed bins,
      // lowest level first.
      auto bins = greedy.bins;
      auto levels = greedy.levels;
      const std::vector<int> leftover = bins.back();
      bins.pop_back();
      levels.pop_back();
      for (int item : leftover) {
        const int b = argmin_level(levels);
        bins[b].push_back(item);
        levels[b] += inst.size(item);
      }
      consider(std::move(bins));
    }
  } else {
    // At least four greedy bins and the trailing one is underfull. In the
    // decreasing order the trailing bin holds at most one item above k/2
    // (two would have closed it), and if present it is the first item.
    const std::vector<int> last = greedy.bins.back();
    const Size f = inst.size(last.front());
    const Size r = greedy.levels.back() - f;

    if (2 * static_cast<__int128>(f) <= k) {
      // Only small leftovers: deal them into the first three bins in parts
      // of at most k/2 each - the largest alone, then a balanced cut of the
      // rest, so no bin gains more than half of k.
      auto bins = greedy.bins;
      bins.pop_back();
      std::vector<Size> rest_vals;
      for (std::size_t i = 1; i < last.size(); ++i) {
        rest_vals.push_back(inst.size(last[i]));
      }
      const std::size_t cut = balanced_cut(rest_vals);
      bins[0].push_back(last[0]);
      for (std::size_t i = 0; i < rest_vals.size(); ++i) {
        bins[i < cut ? 1 : 2].push_back(last[1 + i]);
      }
      consider(std::move(bins));
    } else {
      // The trailing bin is one item f in (k/2, k) plus small items
      // totalling r. Find the first closed bin led by such a mid-range item.
      int first_large_bin = -1;
      for (std::size_t b = 0; b + 1 < greedy.bins.size(); ++b) {
        const Size x = inst.size(greedy.bins[b].front());
        if (2 * static_cast<__int128>(x) > k && x < k) {
          first_large_bin = static_cast<int>(b);
          break;
        }
      }
      if (first_large_bin < 0) {
        // Every closed bin is an oversize singleton; absorb the trailing
        // bin into the first of them.
        auto bins = greedy.bins;
        const std::vector<int> tail = bins.back();
        bins.pop_back();
        bins[0].insert(bins[0].end(), tail.begin(), tail.end());
        consider(std::move(bins));
      } else if (inst.size(greedy.bins[first_large_bin].front()) + r >= k) {
        // Swap that leading item with f: its old bin keeps a second item
        // above k/2 and stays covered, while the trailing bin now clears k.
        auto bins = greedy.bins;
        std::swap(bins[first_large_bin].front(), bins.back().front());
        consider(std::move(bins));
      }
      // Otherwise no greedy repair helps; the fold candidates below cover
      // this case within the approximation bound.
    }
  }

  candidates.push_back(fold(inst, desc));
  candidates.push_back(fold(inst));

  const Packing* best = &candidates.front();
  for (const Packing& c : candidates) {
    if (c.cost() < best->cost()) best = &c;
  }
  return *best;
}

Packing spread_experimental(const ValidatedInstance& inst,
                            std::span<const int> order) {
  check_order(inst, order);
  NextFitResult greedy = next_fit(inst, order);
  if (!greedy.last_underfull) {
    return Packing(inst, std::move(greedy.bins));
  }

  auto bins = std::move(greedy.bins);
  auto levels = std::move(greedy.levels);
  const std::vector<int> leftover = bins.back();
  bins.pop_back();
  levels.pop_back();
  // A closed bin exists: the scan can only end underfull after closing one,
  // since the total reaches k.

  const Size cur_max = *std::max_element(levels.begin(), levels.end());
  std::size_t i = 0;
  for (; i < leftover.size(); ++i) {
    const int b = argmin_level(levels);
    if (levels[b] + inst.size(leftover[i]) > cur_max) break;
    bins[b].push_back(leftover[i]);
    levels[b] += inst.size(leftover[i]);
  }
  // Any placement now raises the maximum: strict round-robin for the rest.
  for (std::size_t rr = 0; i < leftover.size(); ++i, ++rr) {
    const std::size_t b = rr % bins.size();
    bins[b].push_back(leftover[i]);
    levels[b] += inst.size(leftover[i]);
  }
  return Packing(inst, std::move(bins));
}

// ---------------------------------------------------------------------------
// Balanced splitting
// ---------------------------------------------------------------------------

std::pair<std::vector<Size>, std::vector<Size>> split_two(
    std::span<const Size> values, Size max_value) {
  if (max_value < 1) {
    fail(errc::precondition_violated, "split bound must be positive");
  }
  for (Size v : values) {
    if (v < 1) fail(errc::precondition_violated, "values must be positive");
    if (v > max_value) {
      fail(errc::bound_violated, "value " + std::to_string(v) +
                                     " exceeds the stated bound " +
                                     std::to_string(max_value));
    }
  }
  const std::size_t cut = balanced_cut(values);
  return {std::vector<Size>(values.begin(), values.begin() + cut),
          std::vector<Size>(values.begin() + cut, values.end())};
}

std::array<std::vector<Size>, 3> split_three(std::span<const Size> values,
                                             Size total) {
  __int128 s = 0;
  for (Size v : values) {
    if (v < 1) fail(errc::precondition_violated, "values must be positive");
    if (2 * static_cast<__int128>(v) > total) {
      fail(errc::precondition_violated,
           "value " + std::to_string(v) + " exceeds half the total " +
               std::to_string(total));
    }
    s += v;
  }
  if (s != total) {
    fail(errc::precondition_violated,
         "values must sum to the stated total " + std::to_string(total));
  }
  if (values.empty()) return {};

  std::vector<Size> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::span<const Size> rest(sorted.data() + 1, sorted.size() - 1);
  auto [b, c] = split_two(rest, sorted[0]);
  return {std::vector<Size>{sorted[0]}, std::move(b), std::move(c)};
}

// ---------------------------------------------------------------------------
// Rounding ladder
// ---------------------------------------------------------------------------

namespace {

__int128 checked_mul(__int128 a, __int128 b) {
  __int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(errc::enumeration_budget_exceeded,
         "epsilon too small: ladder arithmetic exceeds 128-bit range");
  }
  return out;
}

// Three-way comparison of positive rationals an/ad and bn/bd.
int cmp_rat(__int128 an, __int128 ad, __int128 bn, __int128 bd) {
  const __int128 lhs = checked_mul(an, bd);
  const __int128 rhs = checked_mul(bn, ad);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

RoundingLadder::RoundingLadder(Size eps_num, Size eps_den) {
  if (eps_num < 1 || eps_den < 1 || eps_num >= eps_den) {
    fail(errc::precondition_violated,
         "epsilon must be a rational strictly between 0 and 1");
  }
  const Size g = std::gcd(eps_num, eps_den);
  eps_num_ = eps_num / g;
  eps_den_ = eps_den / g;
  // entry(l) = eps*(1+eps)^l; in lowest terms the denominator is eps_den^(l+1)
  // since gcd(eps_num + eps_den, eps_den) = gcd(eps_num, eps_den) = 1.
  Rat128 e{eps_num_, eps_den_};
  while (cmp_rat(e.num, e.den, 3, 1) < 0) {
    entries_.push_back(e);
    e.num = checked_mul(e.num, eps_num_ + eps_den_);
    e.den = checked_mul(e.den, eps_den_);
  }
}

int RoundingLadder::compare_entry(int l, Size num, Size den) const {
  return cmp_rat(entries_[l].num, entries_[l].den, num, den);
}

int RoundingLadder::round_index(Size x, Size k) const {
  int best = -1;
  for (int l = 0; l < levels(); ++l) {
    // entry(l) <= x/k  <=>  num*k <= x*den
    if (cmp_rat(entries_[l].num, entries_[l].den, x, k) <= 0) {
      best = l;
    } else {
      break;
    }
  }
  if (best < 0) {
    fail(errc::precondition_violated,
         "size below eps*k cannot be rounded onto the ladder");
  }
  return best;
}

// ---------------------------------------------------------------------------
// Configuration and type enumeration
// ---------------------------------------------------------------------------

namespace {

void spend_budget(std::uint64_t& budget, const char* where) {
  if (budget == 0) {
    fail(errc::enumeration_budget_exceeded,
         std::string("enumeration state budget exhausted during ") + where);
  }
  --budget;
}

int min_ladder_index(const BinConfiguration& c) {
  for (std::size_t l = 0; l < c.ladder_counts.size(); ++l) {
    if (c.ladder_counts[l] > 0) return static_cast<int>(l);
  }
  return static_cast<int>(c.ladder_counts.size());
}

}  // namespace

std::vector<BinConfiguration> enumerate_configurations(
    const RoundingLadder& ladder, const std::vector<int>& available,
    std::uint64_t& budget) {
  const int L = ladder.levels();
  // Common denominator eps_den^L turns every entry into an integer, so each
  // configuration total is compared against 3 exactly.
  const __int128 denom = ladder.entry(L - 1).den;
  std::vector<__int128> scaled(L);
  for (int l = 0; l < L; ++l) {
    scaled[l] = checked_mul(ladder.entry(l).num, denom / ladder.entry(l).den);
  }
  const __int128 limit = checked_mul(3, denom);

  std::vector<BinConfiguration> out;
  std::vector<int> counts(L, 0);
  auto rec = [&](auto&& self, int l, __int128 sum) -> void {
    spend_budget(budget, "configuration enumeration");
    if (l == L) {
      if (sum > 0) out.push_back(BinConfiguration{counts});
      return;
    }
    __int128 s = sum;
    for (int c = 0; c <= available[l]; ++c) {
      if (c > 0) {
        s += scaled[l];
        if (s > limit) break;
      }
      counts[l] = c;
      self(self, l + 1, s);
    }
    counts[l] = 0;
  };
  rec(rec, 0, 0);

  // Canonical order: configurations holding smaller ladder indices first.
  // The type search below relies on this to enumerate each multiset of
  // configurations exactly once.
  std::sort(out.begin(), out.end(),
            [](const BinConfiguration& a, const BinConfiguration& b) {
              const int ma = min_ladder_index(a);
              const int mb = min_ladder_index(b);
              if (ma != mb) return ma < mb;
              return a.ladder_counts < b.ladder_counts;
            });
  return out;
}

namespace {

// Enumerates every exact way to spend the rounded large items on
// configurations. At each step the chosen configuration must consume the
// smallest ladder index that still has items, and repeats must come in
// non-decreasing configuration order; together with the canonical config
// order this yields each multiset of configurations exactly once.
struct TypeSearch {
  const std::vector<BinConfiguration>& configs;
  std::vector<int> remaining;
  int max_bins;
  std::uint64_t& budget;
  std::function<void(const std::vector<std::pair<int, int>>&, int)> emit;

  std::vector<std::pair<int, int>> chosen = {};
  int bins_used = 0;

  void run() { rec(0); }

  void rec(int min_cid) {
    spend_budget(budget, "type enumeration");
    int trigger = -1;
    for (std::size_t l = 0; l < remaining.size(); ++l) {
      if (remaining[l] > 0) {
        trigger = static_cast<int>(l);
        break;
      }
    }
    if (trigger < 0) {
      emit(chosen, bins_used);
      return;
    }
    if (bins_used >= max_bins) return;
    for (int cid = min_cid; cid < static_cast<int>(configs.size()); ++cid) {
      const auto& counts = configs[cid].ladder_counts;
      if (counts[trigger] == 0) continue;
      bool fits = true;
      for (std::size_t l = 0; l < counts.size(); ++l) {
        if (counts[l] > remaining[l]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t l = 0; l < counts.size(); ++l) remaining[l] -= counts[l];
      if (!chosen.empty() && chosen.back().first == cid) {
        ++chosen.back().second;
      } else {
        chosen.emplace_back(cid, 1);
      }
      ++bins_used;
      rec(cid);
      --bins_used;
      if (chosen.back().second > 1) {
        --chosen.back().second;
      } else {
        chosen.pop_back();
      }
      for (std::size_t l = 0; l < counts.size(); ++l) remaining[l] += counts[l];
    }
  }
};

enum class SchemeMode { strict_merge, relaxed };

// Shared enumeration pipeline. Returns the best bin structure found; levels
// are measured on `work`, which may carry reduced oversize sizes - the caller
// re-wraps the bins onto the original instance.
std::vector<std::vector<int>> enumerate_scheme(const ValidatedInstance& work,
                                               Size eps_num, Size eps_den,
                                               const PtasOptions& opts,
                                               SchemeMode mode) {
  const Size k = work.k();
  const int n = work.n();
  RoundingLadder ladder(eps_num, eps_den);
  const Size p = ladder.eps_num();
  const Size q = ladder.eps_den();
  const int L = ladder.levels();

  std::vector<std::vector<int>> by_ladder(L);
  std::vector<int> small_items;
  Size small_total = 0;
  for (int i = 0; i < n; ++i) {
    const Size x = work.size(i);
    if (static_cast<__int128>(x) * q >= static_cast<__int128>(p) * k) {
      by_ladder[ladder.round_index(x, k)].push_back(i);
    } else {
      small_items.push_back(i);
      small_total += x;
    }
  }
  std::vector<int> available(L);
  for (int l = 0; l < L; ++l) available[l] = static_cast<int>(by_ladder[l].size());

  // No packing uses more bins than total/k (strict) or total/ceil((1-eps)k)
  // (relaxed), and never more bins than items.
  const Size divisor =
      mode == SchemeMode::strict_merge
          ? k
          : static_cast<Size>((static_cast<__int128>(q - p) * k + q - 1) / q);
  const int max_bins =
      static_cast<int>(std::min<Size>(work.total() / divisor, n));
  // Bins holding only small items in a strict optimum each reach k, which
  // caps how many initially-empty bins a type can usefully carry.
  const int empty_cap = static_cast<int>(small_total / k);

  std::uint64_t budget = opts.budget;
  const std::vector<BinConfiguration> configs =
      enumerate_configurations(ladder, available, budget);

  // Scaled integer view of rounded levels for the weak-feasibility test.
  const __int128 denom = ladder.entry(L - 1).den;
  std::vector<__int128> scaled(L);
  for (int l = 0; l < L; ++l) {
    scaled[l] = checked_mul(ladder.entry(l).num, denom / ladder.entry(l).den);
  }
  std::vector<__int128> config_rounded(configs.size(), 0);
  for (std::size_t c = 0; c < configs.size(); ++c) {
    for (int l = 0; l < L; ++l) {
      config_rounded[c] += scaled[l] * configs[c].ladder_counts[l];
    }
  }
  // (1-eps) in the same scaled units.
  const __int128 relax_threshold = checked_mul(q - p, denom / q);

  std::optional<std::vector<std::vector<int>>> best_bins;
  Size best_cost = std::numeric_limits<Size>::max();

  auto evaluate = [&](const std::vector<std::pair<int, int>>& type_counts,
                      int bins_used, int empties) {
    spend_budget(budget, "type evaluation");
    std::vector<std::vector<int>> bins;
    std::vector<Size> levels;
    bins.reserve(bins_used + empties);
    std::vector<int> cursor(L, 0);
    for (const auto& [cid, count] : type_counts) {
      const auto& counts = configs[cid].ladder_counts;
      for (int rep = 0; rep < count; ++rep) {
        std::vector<int> bin;
        Size level = 0;
        for (int l = 0; l < L; ++l) {
          for (int c = 0; c < counts[l]; ++c) {
            const int item = by_ladder[l][cursor[l]++];
            bin.push_back(item);
            level += work.size(item);
          }
        }
        bins.push_back(std::move(bin));
        levels.push_back(level);
      }
    }
    for (int e = 0; e < empties; ++e) {
      bins.emplace_back();
      levels.push_back(0);
    }
    // Greedy completion: every small item goes to the currently lowest bin.
    for (int item : small_items) {
      const int b = argmin_level(levels);
      bins[b].push_back(item);
      levels[b] += work.size(item);
    }
    if (mode == SchemeMode::strict_merge) {
      // Merge the two lowest bins while any bin is short of k; the total is
      // at least k, so this always ends feasible.
      while (bins.size() > 1 &&
             *std::min_element(levels.begin(), levels.end()) < k) {
        int lo = argmin_level(levels);
        int second = -1;
        for (int b = 0; b < static_cast<int>(bins.size()); ++b) {
          if (b == lo) continue;
          if (second < 0 || levels[b] < levels[second]) second = b;
        }
        const int a = std::min(lo, second);
        const int z = std::max(lo, second);
        bins[a].insert(bins[a].end(), bins[z].begin(), bins[z].end());
        levels[a] += levels[z];
        bins.erase(bins.begin() + z);
        levels.erase(levels.begin() + z);
      }
    } else {
      // Without smalls to absorb, an empty bin cannot be lifted; the weak
      // feasibility filter excludes these, but guard anyway.
      for (const auto& bin : bins) {
        if (bin.empty()) return;
      }
    }
    const Size cost = *std::max_element(levels.begin(), levels.end());
    if (cost < best_cost) {
      best_cost = cost;
      best_bins = std::move(bins);
    }
  };

  auto on_type = [&](const std::vector<std::pair<int, int>>& type_counts,
                     int bins_used) {
    const int e_max = std::min(max_bins - bins_used, empty_cap);
    for (int e = 0; e <= e_max; ++e) {
      if (bins_used + e == 0) continue;
      if (mode == SchemeMode::relaxed) {
        // Weakly feasible: the small items must be able to lift every bin's
        // rounded level to (1-eps); otherwise some bin necessarily ends
        // below the relaxed threshold.
        __int128 gap = 0;
        for (const auto& [cid, count] : type_counts) {
          if (config_rounded[cid] < relax_threshold) {
            gap += static_cast<__int128>(count) *
                   (relax_threshold - config_rounded[cid]);
          }
        }
        gap += static_cast<__int128>(e) * relax_threshold;
        // gap (units of k, scaled by denom) vs small_total/k:
        if (checked_mul(gap, k) > checked_mul(small_total, denom)) continue;
      }
      evaluate(type_counts, bins_used, e);
    }
  };

  TypeSearch search{configs, available, max_bins, budget, on_type};
  search.run();

  if (!best_bins) {
    fail(errc::precondition_violated,
         "enumeration produced no candidate packing");
  }
  return std::move(*best_bins);
}

// Reduces the instance so that the optimum is guaranteed below 3k, or solves
// it outright when the structure makes that trivial.
struct PrepResult {
  std::optional<std::vector<std::vector<int>>> direct_bins;
  std::optional<ValidatedInstance> work;
};

PrepResult preprocess(const ValidatedInstance& inst) {
  const Size k = inst.k();
  Size nominal_total = 0;
  Size t0 = 0, t1 = 0;
  bool has_oversize = false;
  for (int i = 0; i < inst.n(); ++i) {
    const Size x = inst.size(i);
    if (x >= k) {
      t0 = has_oversize ? std::min(t0, x) : x;
      t1 = has_oversize ? std::max(t1, x) : x;
      has_oversize = true;
    } else {
      nominal_total += x;
    }
  }

  PrepResult out;
  if (nominal_total >= k) {
    if (has_oversize &&
        static_cast<__int128>(t1) >= 3 * static_cast<__int128>(k)) {
      // Some oversize item reaches 3k: fold is already optimal, since its
      // scan bins stay below 3k - 2 and the largest singleton dominates.
      out.direct_bins = fold(inst).bins();
      return out;
    }
    out.work = inst;
    return out;
  }

  // The small items cannot cover a bin on their own, so every feasible bin
  // holds exactly one oversize item (at least one exists: total >= k).
  if (t1 - t0 >= k) {
    // Optimal directly: oversize singletons, the small items joining the
    // smallest oversize item, whose bin still stays below the largest.
    std::vector<std::vector<int>> bins;
    int t0_bin = -1;
    for (int i = 0; i < inst.n(); ++i) {
      if (inst.size(i) >= k) {
        bins.push_back({i});
        if (t0_bin < 0 && inst.size(i) == t0) {
          t0_bin = static_cast<int>(bins.size()) - 1;
        }
      }
    }
    for (int i = 0; i < inst.n(); ++i) {
      if (inst.size(i) < k) bins[t0_bin].push_back(i);
    }
    out.direct_bins = std::move(bins);
    return out;
  }

  if (t0 == k) {
    out.work = inst;
    return out;
  }
  // Shift every oversize item down by t0 - k: the smallest becomes exactly k,
  // all stay below 2k, and partitions keep their structure because each bin
  // still needs exactly one oversize item. Solve the shifted instance and
  // re-level the same bins on the original sizes afterwards.
  BinCoveringInstance reduced;
  reduced.k = k;
  reduced.sizes = inst.sizes();
  for (auto& x : reduced.sizes) {
    if (x >= k) x -= t0 - k;
  }
  out.work = validate_instance(std::move(reduced));
  return out;
}

}  // namespace

Packing approx_two_eps(const ValidatedInstance& inst, Size eps_num,
                       Size eps_den, const PtasOptions& opts) {
  if (eps_num < 1 || eps_den < 1 || eps_num >= eps_den) {
    fail(errc::precondition_violated,
         "epsilon must be a rational strictly between 0 and 1");
  }
  PrepResult prep = preprocess(inst);
  if (prep.direct_bins) {
    return Packing(inst, std::move(*prep.direct_bins));
  }
  auto bins = enumerate_scheme(*prep.work, eps_num, eps_den, opts,
                               SchemeMode::strict_merge);
  return Packing(inst, std::move(bins));
}

RelaxedPacking relaxed_one_eps(const ValidatedInstance& inst, Size eps_num,
                               Size eps_den, const PtasOptions& opts) {
  if (eps_num < 1 || eps_den < 1 || eps_num >= eps_den) {
    fail(errc::precondition_violated,
         "epsilon must be a rational strictly between 0 and 1");
  }
  const Size g = std::gcd(eps_num, eps_den);
  PrepResult prep = preprocess(inst);
  if (prep.direct_bins) {
    return RelaxedPacking{Packing(inst, std::move(*prep.direct_bins)),
                          eps_num / g, eps_den / g};
  }
  auto bins =
      enumerate_scheme(*prep.work, eps_num, eps_den, opts, SchemeMode::relaxed);
  return RelaxedPacking{Packing(inst, std::move(bins)), eps_num / g,
                        eps_den / g};
}

// ---------------------------------------------------------------------------
// Exact solver
// ---------------------------------------------------------------------------

ExactResult exact_min_max(const ValidatedInstance& inst) {
  const int n = inst.n();
  if (n > 20) {
    fail(errc::too_large, "exact solver handles at most 20 items, got " +
                              std::to_string(n));
  }
  const Size k = inst.k();
  const int full = (1 << n) - 1;

  std::vector<Size> level(full + 1, 0);
  for (int mask = 1; mask <= full; ++mask) {
    const int low = mask & -mask;
    level[mask] =
        level[mask ^ low] + inst.size(std::countr_zero(static_cast<unsigned>(mask)));
  }

  const Size INF = std::numeric_limits<Size>::max();
  std::vector<Size> f(full + 1, INF);
  std::vector<int> choice(full + 1, 0);
  f[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    const int low = mask & -mask;
    // Every part is the block containing the lowest item of its mask, so
    // each partition is considered once.
    for (int sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || level[sub] < k) continue;
      const Size rest = f[mask ^ sub];
      if (rest == INF) continue;
      const Size cand = std::max(level[sub], rest);
      if (cand < f[mask]) {
        f[mask] = cand;
        choice[mask] = sub;
      }
    }
  }

  std::vector<std::vector<int>> bins;
  for (int mask = full; mask;) {
    const int sub = choice[mask];
    std::vector<int> bin;
    for (int i = 0; i < n; ++i) {
      if (sub >> i & 1) bin.push_back(i);
    }
    bins.push_back(std::move(bin));
    mask ^= sub;
  }
  Packing packing(inst, std::move(bins));
  const Size cost = f[full];
  return ExactResult{cost, std::move(packing)};
}

}  // namespace anonykit
