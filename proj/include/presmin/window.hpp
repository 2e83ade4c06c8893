#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "presmin/set_handle.hpp"

namespace presmin {

/// Outcome of a bounded minimisation. "Undefined" is never a number: a
/// search either finds a value, runs out of horizon, or proves that no value
/// exists (only possible for ultimately periodic inputs).
enum class Status { defined, undefined_at_horizon, provably_undefined };

const char* to_string(Status s);

struct Lookup {
  Status status = Status::undefined_at_horizon;
  Natural value = 0;

  static Lookup found(Natural v) { return {Status::defined, v}; }
  static Lookup missing(bool provable) {
    return {provable ? Status::provably_undefined : Status::undefined_at_horizon, 0};
  }

  bool defined() const { return status == Status::defined; }
  explicit operator bool() const { return defined(); }
  /// Throws DomainError when undefined.
  Natural operator*() const;

  friend bool operator==(const Lookup&, const Lookup&) = default;
};

/// Optional cap on the shift range of every search.
struct SearchLimits {
  std::optional<Natural> max_shift;

  /// Reads PRESMIN_MAX_SEARCH; unset or empty means uncapped.
  static SearchLimits from_environment();
};

/// X[a, b] as offsets: {x : a + x ∈ X, a + x <= b}.
struct Window {
  Natural base = 0;
  Natural length = 0;
  std::vector<Natural> offsets;
};

/// Throws DomainError if a > b, HorizonExceeded if b is past the horizon.
Window window(const SetHandle& x, Natural a, Natural b);

/// X[a, b] == X[a + g, b + g], decided pointwise on [a, b].
bool shift_match(const SetHandle& x, Natural a, Natural b, Natural g);

// Search ranges. Prefix/oracle of horizon B: shifts g in [1, B - n], bases a
// in [0, B - n - g]. Ultimately periodic (N, d): bases in [0, N + d), shifts
// in [1, N + d·(n + 2)]; window contents repeat with period d past N, so
// these ranges are exhaustive and misses are provable.

/// Least g > 0 such that some base a has X[a, a+n] == X[a+g, a+g+n].
Lookup dtilde(const SetHandle& x, Natural n, const SearchLimits& limits = {});

/// Least base a with X[a, a+n] == X[a+d, a+d+n].
Lookup atilde(const SetHandle& x, Natural n, Natural d, const SearchLimits& limits = {});

/// Least d with atilde(n, d) defined such that every d' > d with
/// atilde(n, d') defined satisfies atilde(n, d) <= atilde(n, d') or
/// atilde(n, d') + d' > atilde(n, d) + n.
Lookup big_d(const SetHandle& x, Natural n, const SearchLimits& limits = {});

/// atilde(n, big_d(n)).
Lookup big_a(const SetHandle& x, Natural n, const SearchLimits& limits = {});

/// atilde for a period fixed in advance (the uniform period).
Lookup alpha(const SetHandle& x, Natural n, Natural period, const SearchLimits& limits = {});

/// Greatest h >= x + n with X[x, h - n] == X[x + n, h].
struct MaxMatch {
  enum class Kind { finite, infinite_certified, at_horizon, undefined };
  Kind kind = Kind::undefined;
  Natural h = 0;

  friend bool operator==(const MaxMatch&, const MaxMatch&) = default;
};

const char* to_string(MaxMatch::Kind k);

/// For ultimately periodic inputs the match is certified infinite when it
/// survives one full period past max(x, N). Throws HorizonExceeded if
/// x + n is past the horizon.
MaxMatch big_m(const SetHandle& x, Natural start, Natural n);

/// Subset of U ∩ [0, b] on which f is nondecreasing. When f takes at most
/// sqrt(b) values there, returns the fiber of f(max U) (f is constant on
/// it); otherwise returns {u : f(y) < f(u) for every earlier y in U}.
PrefixSet monotone_restrict(const SetHandle& domain, const std::function<Natural(Natural)>& f,
                            Natural b);

/// All atilde(n, g) for n in [0, n_max] and g in [1, max_shift(n_max)],
/// computed in one sweep per shift. Shifts are processed in parallel; the
/// result does not depend on the thread count.
class ShiftTable {
 public:
  ShiftTable(const SetHandle& x, Natural n_max, const SearchLimits& limits = {});

  Natural n_max() const { return n_max_; }
  /// Upper end of the shift range used for window size n.
  Natural max_shift(Natural n) const;
  /// True when misses are provable (periodic input, range not capped).
  bool exact() const { return exact_; }

  /// g in [1, max_shift(n_max)].
  Lookup atilde(Natural n, Natural g) const;
  Lookup dtilde(Natural n) const;
  Lookup big_d(Natural n) const;
  Lookup big_a(Natural n) const;

 private:
  static constexpr Natural kNone = ~Natural{0};

  Natural& cell(Natural n, Natural g) { return table_[(g - 1) * (n_max_ + 1) + n]; }
  Natural cell(Natural n, Natural g) const { return table_[(g - 1) * (n_max_ + 1) + n]; }

  Natural n_max_;
  Natural columns_;
  bool exact_;
  bool periodic_;
  std::vector<Natural> max_shift_;
  std::vector<bool> exact_for_;
  std::vector<Natural> table_;
};

struct ProfileEntry {
  Natural n = 0;
  Lookup dtilde;
  Lookup big_d;
  Lookup big_a;
  Lookup alpha;
};

struct WindowProfile {
  Natural n_max = 0;
  std::optional<Natural> alpha_period;
  bool exact = false;
  std::vector<ProfileEntry> entries;
};

/// d̃, D, A (and α when a period is given) for every n in [0, n_max].
WindowProfile profile(const SetHandle& x, Natural n_max,
                      std::optional<Natural> alpha_period = std::nullopt,
                      const SearchLimits& limits = {});

}  // namespace presmin
