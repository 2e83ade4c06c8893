#pragma once

#include <optional>
#include <vector>

#include "presmin/window.hpp"

namespace presmin {

/// Largest σ(x) − x over members x < b whose successor σ(x) is <= b.
/// std::nullopt when X ∩ [0, b] has fewer than two members.
std::optional<Natural> successor_gap_bound(const SetHandle& x, Natural b);

/// Least d >= 1 with atilde(n, d) defined for every n <= n_max.
Lookup find_uniform_period(const SetHandle& x, Natural n_max, const SearchLimits& limits = {});

/// X ∩ [lo, hi] = {y >= lo : y mod modulus ∈ residues} ∩ [lo, hi]; hi is
/// absent when the segment runs to infinity (certified) or to the horizon.
struct Segment {
  Natural lo = 0;
  std::optional<Natural> hi;
  Natural modulus = 1;
  std::vector<Natural> residues;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Decomposition {
  std::vector<Natural> points;
  std::vector<Segment> segments;
  /// True for ultimately periodic inputs: the segment provably never ends.
  bool certified = false;
  /// Last position checked against the source; absent when certified.
  std::optional<Natural> checked_to;

  /// The decomposition read as an ultimately periodic set.
  UPSet to_upset() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Points below the threshold N and one periodic segment from N on, with
/// the least period d that verifies and the least N for that d. Throws
/// InferenceFailure when no candidate period reconstructs the input.
/// Prefix inputs need a periodic tail covering the upper half of [0, B]
/// and at least 3d + n_max + 1 positions.
Decomposition decompose(const SetHandle& x, Natural n_max, const SearchLimits& limits = {});

struct WitnessRow {
  Natural n = 0;
  Natural count = 0;
  /// Up to kWitnessesKept largest witnesses, ascending.
  std::vector<Natural> largest;
};

inline constexpr std::size_t kWitnessesKept = 5;

/// x ∈ X ∩ [0, B − n] with x + 1, …, x + n ∉ X, for each n in [1, n_max].
struct WitnessTable {
  Natural n_max = 0;
  Natural horizon = 0;
  std::vector<WitnessRow> rows;
  /// Largest closed gap σ(x) − x with σ(x) in [0, B/2], resp. (B/2, B].
  Natural early_gap = 0;
  Natural late_gap = 0;
  /// Gaps keep growing: late_gap > early_gap, at least three members in
  /// [0, B/2] and some witness for n = 1.
  bool evidence = false;
};

WitnessTable expanding_evidence(const SetHandle& x, Natural n_max, Natural b);

enum class Classification { eventually_periodic, expanding_evidence, inconclusive };

const char* to_string(Classification c);

struct AnalysisReport {
  Classification classification = Classification::inconclusive;
  std::optional<Decomposition> decomposition;
  WitnessTable witnesses;
  /// Gap bound of Im D, resp. Im α, over the monotone-restricted domain.
  std::optional<Natural> u;
  std::optional<Natural> v;
  WindowProfile profile;
};

/// Decomposition first, expanding evidence second; the two outcomes never
/// co-occur. Prefix inputs are analysed on [0, b].
AnalysisReport classify(const SetHandle& x, Natural n_max, Natural b,
                        const SearchLimits& limits = {});

}  // namespace presmin
