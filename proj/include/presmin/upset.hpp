#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "presmin/errors.hpp"

namespace presmin {

/// An ultimately periodic subset of the naturals.
///
/// Below the threshold N membership is given by explicit flags (the
/// exceptional prefix E); from N on, x is a member iff (x mod d) is one of
/// the residues R. Residues are absolute, not relative to N.
///
/// Instances need not be canonical; every set operation returns a canonical
/// value (minimal period, then minimal threshold), so two canonical values
/// denote the same set iff they compare equal.
class UPSet {
 public:
  /// The empty set in canonical form.
  UPSet();

  /// Throws DomainError if `period` is 0, or if an exceptional point is
  /// >= threshold, or a residue is >= period.
  UPSet(Natural threshold, std::vector<Natural> exceptional, Natural period,
        std::vector<Natural> residues);

  static UPSet empty();
  static UPSet all();
  static UPSet coset(Natural period, Natural residue);
  static UPSet point(Natural x);
  static UPSet finite(const std::vector<Natural>& members);
  /// {x : x >= lo}
  static UPSet at_least(Natural lo);
  /// {x : x < hi}
  static UPSet below(Natural hi);

  Natural threshold() const { return threshold_; }
  Natural period() const { return period_; }
  /// Sorted exceptional members, all < threshold.
  std::vector<Natural> exceptional() const;
  /// Sorted residues, all < period.
  std::vector<Natural> residues() const;

  bool contains(Natural x) const {
    if (x < threshold_) return exceptional_[x];
    return residue_flags_[x % period_];
  }

  bool is_canonical() const;
  /// True iff the set has no members beyond the threshold.
  bool is_finite() const;

  /// Textual literal `up(N=5; E=1,2,3; d=7; R=5)`.
  std::string to_string() const;
  /// Parses the literal form; whitespace around separators is optional.
  static UPSet parse(std::string_view text);

  friend bool operator==(const UPSet&, const UPSet&) = default;

 private:
  Natural threshold_ = 0;
  Natural period_ = 1;
  std::vector<bool> exceptional_;
  std::vector<bool> residue_flags_;

  friend UPSet canonicalize(const UPSet&);
};

/// Minimal period (over divisors of d), then minimal threshold.
UPSet canonicalize(const UPSet& s);

UPSet unite(const UPSet& a, const UPSet& b);
UPSet intersect(const UPSet& a, const UPSet& b);
UPSet complement(const UPSet& s);
UPSet difference(const UPSet& a, const UPSet& b);

/// Membership of the result at x equals membership of `s` at x + t; for
/// negative t, positions x < -t are empty.
UPSet shift(const UPSet& s, Integer t);

/// Set equality, independent of representation.
bool same_set(const UPSet& a, const UPSet& b);

}  // namespace presmin
