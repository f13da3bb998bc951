#include "anonykit/core.hpp"

#include <algorithm>
#include <string>

namespace anonykit {

ValidatedInstance validate_instance(BinCoveringInstance inst) {
  if (inst.sizes.empty()) {
    fail(errc::empty_instance, "instance has no items");
  }
  if (inst.k < 1) {
    fail(errc::non_positive_size,
         "level threshold k must be >= 1, got " + std::to_string(inst.k));
  }
  __int128 total = 0;
  Size max_size = 0;
  for (std::size_t i = 0; i < inst.sizes.size(); ++i) {
    const Size x = inst.sizes[i];
    if (x < 1) {
      fail(errc::non_positive_size, "item " + std::to_string(i) +
                                        " has non-positive size " +
                                        std::to_string(x));
    }
    total += x;
    max_size = std::max(max_size, x);
  }
  if (total > static_cast<__int128>(INT64_MAX)) {
    fail(errc::too_large, "total item size overflows 64-bit range");
  }
  if (static_cast<Size>(total) < inst.k) {
    fail(errc::infeasible_total,
         "total item size " + std::to_string(static_cast<Size>(total)) +
             " is below k=" + std::to_string(inst.k) +
             "; no bin can be covered");
  }

  auto data = std::make_shared<ValidatedInstance::Data>();
  data->sizes = std::move(inst.sizes);
  data->k = inst.k;
  data->kappa = std::max(inst.k, max_size);
  data->total = static_cast<Size>(total);
  return ValidatedInstance(std::move(data));
}

Packing::Packing(ValidatedInstance inst, std::vector<std::vector<int>> bins)
    : inst_(std::move(inst)), bins_(std::move(bins)) {
  const int n = inst_.n();
  std::vector<char> seen(n, 0);
  int covered = 0;
  levels_.reserve(bins_.size());
  for (const auto& bin : bins_) {
    if (bin.empty()) {
      fail(errc::precondition_violated, "packing contains an empty bin");
    }
    Size level = 0;
    for (int item : bin) {
      if (item < 0 || item >= n) {
        fail(errc::precondition_violated,
             "packing references item " + std::to_string(item) +
                 " outside the instance");
      }
      if (seen[item]) {
        fail(errc::precondition_violated,
             "item " + std::to_string(item) + " appears in two bins");
      }
      seen[item] = 1;
      ++covered;
      level += inst_.size(item);
    }
    levels_.push_back(level);
  }
  if (covered != n) {
    fail(errc::precondition_violated,
         "packing covers " + std::to_string(covered) + " of " +
             std::to_string(n) + " items");
  }
  cost_ = *std::max_element(levels_.begin(), levels_.end());
  min_level_ = *std::min_element(levels_.begin(), levels_.end());
}

}  // namespace anonykit
