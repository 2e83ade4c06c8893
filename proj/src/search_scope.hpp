#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "presmin/window.hpp"

namespace presmin::detail {

/// Materialised membership plus the base/shift ranges every window search
/// must respect for one input.
class SearchScope {
 public:
  /// Covers window sizes up to n_max and shifts up to the larger of the
  /// default range and `min_shift`.
  SearchScope(const SetHandle& x, Natural n_max, Natural min_shift, const SearchLimits& limits)
      : limits_(limits) {
    if (const UPSet* u = x.periodic()) {
      periodic_ = true;
      base_limit_ = u->threshold() + u->period() - 1;
      threshold_ = u->threshold();
      period_ = u->period();
      const Natural shifts = std::max(default_max_shift(n_max), min_shift);
      bits_ = membership_bits(x, base_limit_ + n_max + shifts);
    } else {
      bits_ = membership_bits(x, *x.horizon());
    }
  }

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  bool periodic() const { return periodic_; }
  Natural last() const { return bits_.size() - 1; }

  /// Misses are provable unless the cap truncated the exhaustive range.
  bool exact_for(Natural n) const {
    return periodic_ && (!limits_.max_shift || *limits_.max_shift >= default_max_shift(n));
  }

  Natural max_shift(Natural n) const {
    Natural g = default_max_shift(n);
    if (limits_.max_shift) g = std::min(g, *limits_.max_shift);
    return g;
  }

  /// Largest admissible base for window size n and shift g, if any.
  std::optional<Natural> base_limit(Natural n, Natural g) const {
    if (periodic_) return base_limit_;
    if (n + g > last()) return std::nullopt;
    return last() - n - g;
  }

  /// Least a <= base_limit(n, g) with bits[x] == bits[x + g] on [a, a + n].
  std::optional<Natural> first_match(Natural n, Natural g) const {
    const auto limit = base_limit(n, g);
    if (!limit) return std::nullopt;
    Natural run_start = 0;
    for (Natural x = 0; x <= *limit + n; ++x) {
      if (bits_[x] != bits_[x + g]) {
        run_start = x + 1;
        if (run_start > *limit) return std::nullopt;
        continue;
      }
      if (x - run_start == n) return run_start;
    }
    return std::nullopt;
  }

 private:
  Natural default_max_shift(Natural n) const {
    if (periodic_) return threshold_ + period_ * (n + 2);
    return last() >= n ? last() - n : 0;
  }

  SearchLimits limits_;
  std::vector<std::uint8_t> bits_;
  bool periodic_ = false;
  Natural base_limit_ = 0;
  Natural threshold_ = 0;
  Natural period_ = 1;
};

}  // namespace presmin::detail
