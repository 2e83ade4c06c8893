#pragma once

#include <vector>

#include "presmin/errors.hpp"

namespace presmin {

/// Membership of some X ⊆ ℕ known exactly on [0, horizon].
class PrefixSet {
 public:
  PrefixSet() : flags_(1, false) {}
  /// `flags.size()` must be horizon + 1 (and at least 1).
  explicit PrefixSet(std::vector<bool> flags);

  /// Throws DomainError if a member exceeds the horizon.
  static PrefixSet from_members(Natural horizon, const std::vector<Natural>& members);

  Natural horizon() const { return flags_.size() - 1; }

  /// Throws HorizonExceeded for x > horizon.
  bool contains(Natural x) const {
    if (x > horizon()) throw HorizonExceeded(x, horizon());
    return flags_[x];
  }

  std::vector<Natural> members() const;
  Natural count() const;
  const std::vector<bool>& flags() const { return flags_; }

  /// Restriction to [0, b]; b must not exceed the horizon.
  PrefixSet truncated(Natural b) const;

  friend bool operator==(const PrefixSet&, const PrefixSet&) = default;

 private:
  std::vector<bool> flags_;
};

}  // namespace presmin
