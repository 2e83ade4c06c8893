#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

#include "parallel.hpp"
#include "presmin/window.hpp"
#include "search_scope.hpp"

namespace presmin {

const char* to_string(Status s) {
  switch (s) {
    case Status::defined: return "defined";
    case Status::undefined_at_horizon: return "undefined_at_horizon";
    case Status::provably_undefined: return "provably_undefined";
  }
  return "?";
}

const char* to_string(MaxMatch::Kind k) {
  switch (k) {
    case MaxMatch::Kind::finite: return "finite";
    case MaxMatch::Kind::infinite_certified: return "infinite_certified";
    case MaxMatch::Kind::at_horizon: return "at_horizon";
    case MaxMatch::Kind::undefined: return "undefined";
  }
  return "?";
}

Natural Lookup::operator*() const {
  if (!defined()) throw DomainError(std::string("value is ") + to_string(status));
  return value;
}

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  const char* raw = std::getenv("PRESMIN_MAX_SEARCH");
  if (raw == nullptr || *raw == '\0') return limits;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    limits.max_shift = v;
  } catch (const std::exception&) {
    throw DomainError(std::string("PRESMIN_MAX_SEARCH must be a positive integer, got '") + raw +
                      "'");
  }
  return limits;
}

Window window(const SetHandle& x, Natural a, Natural b) {
  if (a > b) throw DomainError("window start exceeds its end");
  if (const auto h = x.horizon(); h && b > *h) throw HorizonExceeded(b, *h);
  Window w{a, b - a, {}};
  for (Natural y = a; y <= b; ++y)
    if (x.contains(y)) w.offsets.push_back(y - a);
  return w;
}

bool shift_match(const SetHandle& x, Natural a, Natural b, Natural g) {
  if (a > b) throw DomainError("window start exceeds its end");
  if (const auto h = x.horizon(); h && b + g > *h) throw HorizonExceeded(b + g, *h);
  for (Natural y = a; y <= b; ++y)
    if (x.contains(y) != x.contains(y + g)) return false;
  return true;
}

Lookup dtilde(const SetHandle& x, Natural n, const SearchLimits& limits) {
  const detail::SearchScope scope(x, n, 0, limits);
  for (Natural g = 1; g <= scope.max_shift(n); ++g)
    if (scope.first_match(n, g)) return Lookup::found(g);
  return Lookup::missing(scope.exact_for(n));
}

Lookup atilde(const SetHandle& x, Natural n, Natural d, const SearchLimits& limits) {
  if (d == 0) throw DomainError("shift must be at least 1");
  const detail::SearchScope scope(x, n, d, limits);
  if (const auto a = scope.first_match(n, d)) return Lookup::found(*a);
  return Lookup::missing(scope.periodic());
}

Lookup big_d(const SetHandle& x, Natural n, const SearchLimits& limits) {
  return ShiftTable(x, n, limits).big_d(n);
}

Lookup big_a(const SetHandle& x, Natural n, const SearchLimits& limits) {
  return ShiftTable(x, n, limits).big_a(n);
}

Lookup alpha(const SetHandle& x, Natural n, Natural period, const SearchLimits& limits) {
  return atilde(x, n, period, limits);
}

MaxMatch big_m(const SetHandle& x, Natural start, Natural n) {
  if (const auto h = x.horizon(); h && start + n > *h) throw HorizonExceeded(start + n, *h);
  if (n == 0) return {MaxMatch::Kind::infinite_certified, 0};
  Natural last;
  if (const UPSet* u = x.periodic())
    last = std::max(start, u->threshold()) + u->period() - 1;
  else
    last = *x.horizon() - n;
  for (Natural y = start; y <= last; ++y) {
    if (x.contains(y) == x.contains(y + n)) continue;
    if (y == start) return {MaxMatch::Kind::undefined, 0};
    return {MaxMatch::Kind::finite, y + n - 1};
  }
  if (x.periodic()) return {MaxMatch::Kind::infinite_certified, 0};
  return {MaxMatch::Kind::at_horizon, *x.horizon()};
}

PrefixSet monotone_restrict(const SetHandle& domain, const std::function<Natural(Natural)>& f,
                            Natural b) {
  std::vector<Natural> members;
  std::vector<Natural> images;
  std::set<Natural> distinct;
  for (Natural u = 0; u <= b; ++u) {
    if (!domain.contains(u)) continue;
    members.push_back(u);
    images.push_back(f(u));
    distinct.insert(images.back());
  }
  std::vector<Natural> kept;
  if (!members.empty() && distinct.size() <= std::sqrt(static_cast<double>(b))) {
    const Natural target = images.back();
    for (std::size_t i = 0; i < members.size(); ++i)
      if (images[i] == target) kept.push_back(members[i]);
  } else {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (kept.empty() || images[i] > f(kept.back())) kept.push_back(members[i]);
  }
  return PrefixSet::from_members(b, kept);
}

WindowProfile profile(const SetHandle& x, Natural n_max, std::optional<Natural> alpha_period,
                      const SearchLimits& limits) {
  if (alpha_period && *alpha_period == 0) throw DomainError("period must be at least 1");
  const ShiftTable table(x, n_max, limits);
  WindowProfile out{n_max, alpha_period, table.exact(), std::vector<ProfileEntry>(n_max + 1)};
  detail::parallel_for(0, n_max + 1, [&](Natural n) {
    ProfileEntry& e = out.entries[n];
    e.n = n;
    e.dtilde = table.dtilde(n);
    e.big_d = table.big_d(n);
    e.big_a = table.big_a(n);
    if (!alpha_period)
      e.alpha = Lookup::missing(false);
    else if (*alpha_period <= table.max_shift(n_max))
      e.alpha = table.atilde(n, *alpha_period);
    else
      e.alpha = presmin::alpha(x, n, *alpha_period, limits);
  });
  return out;
}

}  // namespace presmin
