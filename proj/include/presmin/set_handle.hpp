#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "presmin/prefix_set.hpp"
#include "presmin/upset.hpp"

namespace presmin {

/// A membership predicate answering for every x <= horizon.
struct Oracle {
  std::function<bool(Natural)> predicate;
  Natural horizon = 0;
  std::string name = "oracle";
};

/// Uniform read access to a subset of ℕ: an exact ultimately periodic set,
/// a finite prefix, or an oracle with a declared horizon.
class SetHandle {
 public:
  SetHandle(UPSet s);
  SetHandle(PrefixSet s);
  SetHandle(Oracle s);

  /// std::nullopt for ultimately periodic sets (no horizon).
  std::optional<Natural> horizon() const;

  /// Throws HorizonExceeded for x beyond the horizon.
  bool contains(Natural x) const;

  /// Non-null iff the handle holds an ultimately periodic set.
  const UPSet* periodic() const { return std::get_if<UPSet>(&value_); }
  const PrefixSet* prefix() const { return std::get_if<PrefixSet>(&value_); }

  std::string describe() const;

 private:
  std::variant<UPSet, PrefixSet, Oracle> value_;
};

/// Least member y > x with y within the horizon; std::nullopt if there is
/// none. Throws DomainError if x is not a member.
std::optional<Natural> successor(const SetHandle& s, Natural x);

/// Exact restriction to [0, b]. Throws HorizonExceeded if b > horizon.
PrefixSet to_prefix(const SetHandle& s, Natural b);

/// Membership bytes for [0, upto]; throws HorizonExceeded past the horizon.
std::vector<std::uint8_t> membership_bits(const SetHandle& s, Natural upto);

/// Boolean algebra on handles. Two periodic operands give an exact periodic
/// result; otherwise both are materialised up to the smaller horizon.
SetHandle unite(const SetHandle& a, const SetHandle& b);
SetHandle intersect(const SetHandle& a, const SetHandle& b);
SetHandle difference(const SetHandle& a, const SetHandle& b);
SetHandle complement(const SetHandle& s);
/// Membership at x is membership of `s` at x + t; the horizon moves by -t.
SetHandle shift(const SetHandle& s, Integer t);

}  // namespace presmin
