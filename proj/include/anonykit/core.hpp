#ifndef ANONYKIT_CORE_HPP
#define ANONYKIT_CORE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "anonykit/errors.hpp"

namespace anonykit {

using Size = std::int64_t;

// One min-max bin covering instance: item sizes x_1..x_n and a level
// threshold k. Every bin of a feasible packing must reach level >= k and the
// objective is to minimize the largest bin level. In the anonymization
// reading, items are identity groups that must be merged into equivalence
// classes of at least k records each.
struct BinCoveringInstance {
  std::vector<Size> sizes;
  Size k = 0;
};

// kappa = max(k, largest item size). No feasible packing can cost less:
// some bin holds the largest item, and every bin reaches at least k.
struct Kappa {
  Size value = 0;

  constexpr operator Size() const { return value; }
};

// Immutable, cheaply copyable handle to an instance that passed validation
// (n >= 1, all sizes >= 1, k >= 1, total >= k). All solvers take this type so
// feasibility is checked exactly once.
class ValidatedInstance {
 public:
  int n() const { return static_cast<int>(data_->sizes.size()); }
  Size size(int item) const { return data_->sizes[item]; }
  const std::vector<Size>& sizes() const { return data_->sizes; }
  Size k() const { return data_->k; }
  Kappa kappa() const { return Kappa{data_->kappa}; }
  Size total() const { return data_->total; }

 private:
  struct Data {
    std::vector<Size> sizes;
    Size k = 0;
    Size kappa = 0;
    Size total = 0;
  };

  explicit ValidatedInstance(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  friend ValidatedInstance validate_instance(BinCoveringInstance inst);

  std::shared_ptr<const Data> data_;
};

// Checks an instance and wraps it. Throws Error with code empty_instance,
// non_positive_size or infeasible_total.
ValidatedInstance validate_instance(BinCoveringInstance inst);

// A partition of the item indices {0..n-1} into bins. Bins and the items
// inside them keep the order in which the producing algorithm emitted them;
// construction rejects anything that is not an exact cover by non-empty bins.
// Instances of this type are immutable once built and safe to share.
class Packing {
 public:
  Packing(ValidatedInstance inst, std::vector<std::vector<int>> bins);

  const ValidatedInstance& instance() const { return inst_; }
  const std::vector<std::vector<int>>& bins() const { return bins_; }
  const std::vector<Size>& levels() const { return levels_; }
  Size level(int bin) const { return levels_[bin]; }
  int bin_count() const { return static_cast<int>(bins_.size()); }

  // Largest bin level; the min-max objective value.
  Size cost() const { return cost_; }
  // Smallest bin level.
  Size min_level() const { return min_level_; }
  // True when every bin reaches level >= k.
  bool feasible() const { return min_level_ >= inst_.k(); }

 private:
  ValidatedInstance inst_;
  std::vector<std::vector<int>> bins_;
  std::vector<Size> levels_;
  Size cost_ = 0;
  Size min_level_ = 0;
};

// Objective value of a packing (maximum bin level).
inline Size packing_cost(const Packing& p) { return p.cost(); }

// Result of the relaxed scheme: bins may stop short of k, down to the
// documented fraction of it, in exchange for a near-optimal maximum level.
// epsilon is carried as the exact rational eps_num/eps_den.
struct RelaxedPacking {
  Packing packing;
  Size eps_num = 1;
  Size eps_den = 2;
};

}  // namespace anonykit

#endif  // ANONYKIT_CORE_HPP
