#include "presmin/prefix_set.hpp"

#include <algorithm>

namespace presmin {

PrefixSet::PrefixSet(std::vector<bool> flags) : flags_(std::move(flags)) {
  if (flags_.empty()) throw DomainError("a prefix set covers at least [0, 0]");
}

PrefixSet PrefixSet::from_members(Natural horizon, const std::vector<Natural>& members) {
  std::vector<bool> flags(horizon + 1, false);
  for (Natural m : members) {
    if (m > horizon)
      throw DomainError("member " + std::to_string(m) + " exceeds horizon " +
                        std::to_string(horizon));
    flags[m] = true;
  }
  return PrefixSet(std::move(flags));
}

std::vector<Natural> PrefixSet::members() const {
  std::vector<Natural> out;
  for (Natural x = 0; x < flags_.size(); ++x)
    if (flags_[x]) out.push_back(x);
  return out;
}

Natural PrefixSet::count() const {
  return static_cast<Natural>(std::count(flags_.begin(), flags_.end(), true));
}

PrefixSet PrefixSet::truncated(Natural b) const {
  if (b > horizon()) throw HorizonExceeded(b, horizon());
  return PrefixSet(std::vector<bool>(flags_.begin(), flags_.begin() + b + 1));
}

}  // namespace presmin
