#include "presmin/inference.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace presmin {

namespace {

constexpr Natural kNone = ~Natural{0};

std::optional<Natural> image_gap_bound(const std::vector<Natural>& values) {
  if (values.empty()) return std::nullopt;
  const Natural top = *std::max_element(values.begin(), values.end());
  return successor_gap_bound(PrefixSet::from_members(top, values), top);
}

// Everything needed to test one candidate period d on a materialised range.
class PeriodCheck {
 public:
  PeriodCheck(const std::vector<std::uint8_t>& bits, Natural d) : bits_(bits), d_(d) {
    last_y_ = bits.size() - 1 - d;
    next_mismatch_.assign(last_y_ + 2, kNone);
    for (Natural y = last_y_ + 1; y-- > 0;)
      next_mismatch_[y] = bits[y] != bits[y + d] ? y : next_mismatch_[y + 1];
  }

  Natural last_y() const { return last_y_; }

  /// Least y >= from with X(y) != X(y + d).
  Natural next_mismatch(Natural from) const {
    return from > last_y_ ? kNone : next_mismatch_[from];
  }

  Natural last_mismatch() const {
    for (Natural y = last_y_ + 1; y-- > 0;)
      if (bits_[y] != bits_[y + d_]) return y;
    return kNone;
  }

  /// alpha restricted to bases >= s, for n in [0, n_max]; kNone where undefined.
  std::vector<Natural> alpha_from(Natural s, Natural n_max) const {
    std::vector<Natural> out(n_max + 1, kNone);
    Natural next_n = 0;
    for (Natural pos = s; pos <= last_y_ && next_n <= n_max;) {
      const Natural stop = std::min(next_mismatch(pos), last_y_ + 1);
      while (next_n <= n_max && next_n < stop - pos) out[next_n++] = pos;
      pos = stop + 1;
    }
    return out;
  }

  /// Drops N while position N - 1 still follows the periodic rule.
  Natural lower(Natural n) const {
    while (n > 0 && bits_[n - 1] == bits_[n - 1 + d_]) --n;
    return n;
  }

 private:
  const std::vector<std::uint8_t>& bits_;
  Natural d_;
  Natural last_y_ = 0;
  std::vector<Natural> next_mismatch_;
};

// One step of the construction: N = alpha(l) with l = max(d, v), where v
// bounds the gaps of Im alpha on its monotone part.
std::optional<Natural> threshold_guess(const std::vector<Natural>& alpha, Natural d) {
  const Natural n_max = alpha.size() - 1;
  std::vector<Natural> domain;
  for (Natural n = 1; n <= n_max; ++n)
    if (alpha[n] != kNone) domain.push_back(n);
  if (domain.empty()) return std::nullopt;
  const PrefixSet restricted = monotone_restrict(
      PrefixSet::from_members(n_max, domain), [&](Natural n) { return alpha[n]; }, n_max);
  const std::vector<Natural> kept = restricted.members();
  std::vector<Natural> image;
  for (Natural n : kept) image.push_back(alpha[n]);
  const Natural l = std::max(d, image_gap_bound(image).value_or(0));
  const auto it = std::lower_bound(kept.begin(), kept.end(), l);
  return alpha[it == kept.end() ? kept.back() : *it];
}

// Walks the construction from s = 0, restarting past each failure of the
// periodic rule. Returns the least threshold for period d, if d works.
std::optional<Natural> try_period(const std::vector<std::uint8_t>& bits, Natural d,
                                  Natural n_max, const UPSet* source) {
  if (bits.size() <= d) return std::nullopt;
  const PeriodCheck check(bits, d);
  const Natural horizon = bits.size() - 1;

  // The walk can only stop past the last failure; reject hopeless d early.
  Natural certify_to = check.last_y();
  if (source) {
    const Natural ns = source->threshold();
    const Natural span = std::lcm(d, source->period());
    if (ns + span > check.last_y() || check.next_mismatch(ns) <= ns + span) return std::nullopt;
    certify_to = ns + span;
  } else {
    const Natural last = check.last_mismatch();
    const Natural tail_from = last == kNone ? 0 : last + 1;
    if (horizon - tail_from < std::max(3 * d + n_max + 1, horizon - horizon / 2)) return std::nullopt;
  }

  for (Natural s = 0; s <= check.last_y();) {
    const auto n = threshold_guess(check.alpha_from(s, n_max), d);
    if (!n) return std::nullopt;
    const Natural failure = check.next_mismatch(*n);
    if (failure == kNone || failure > certify_to) return check.lower(*n);
    s = failure + 1;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Natural> successor_gap_bound(const SetHandle& x, Natural b) {
  std::optional<Natural> previous;
  std::optional<Natural> best;
  for (Natural y = 0; y <= b; ++y) {
    if (!x.contains(y)) continue;
    if (previous) best = std::max(best.value_or(0), y - *previous);
    previous = y;
  }
  return best;
}

Lookup find_uniform_period(const SetHandle& x, Natural n_max, const SearchLimits& limits) {
  const ShiftTable table(x, n_max, limits);
  for (Natural d = 1; d <= table.max_shift(n_max); ++d)
    if (table.atilde(n_max, d)) return Lookup::found(d);
  return Lookup::missing(table.exact());
}

UPSet Decomposition::to_upset() const {
  if (segments.size() != 1) throw DomainError("decomposition has no single periodic segment");
  const Segment& s = segments.front();
  return UPSet(s.lo, points, s.modulus, s.residues);
}

Decomposition decompose(const SetHandle& x, Natural n_max, const SearchLimits& limits) {
  if (n_max == 0) throw DomainError("n_max must be at least 1");
  const UPSet* source = x.periodic();
  const ShiftTable table(x, n_max, limits);
  Natural top = table.max_shift(n_max);
  std::vector<std::uint8_t> prefix_bits;
  if (!source) {
    const Natural horizon = *x.horizon();
    top = std::min(top, horizon > n_max ? (horizon - n_max) / 3 : 0);
    prefix_bits = membership_bits(x, horizon);
  }

  // Only multiples of the least period can hold from some point on.
  const Natural least_period = source ? canonicalize(*source).period() : 1;
  for (Natural d = 1; d <= top; ++d) {
    if (d % least_period != 0 || !table.atilde(n_max, d)) continue;
    std::optional<Natural> threshold;
    std::vector<std::uint8_t> local_bits;
    if (source) {
      const Natural ns = source->threshold();
      const Natural ds = source->period();
      local_bits = membership_bits(x, 2 * (ns + ds) + n_max + 2 * d + std::lcm(d, ds) + 1);
    }
    const auto& bits = source ? local_bits : prefix_bits;
    threshold = try_period(bits, d, n_max, source);
    if (!threshold) continue;

    Decomposition out;
    Segment segment{*threshold, std::nullopt, d, {}};
    for (Natural y = 0; y < *threshold; ++y)
      if (bits[y]) out.points.push_back(y);
    for (Natural y = *threshold; y < *threshold + d; ++y)
      if (bits[y]) segment.residues.push_back(y % d);
    std::sort(segment.residues.begin(), segment.residues.end());
    out.segments.push_back(std::move(segment));
    out.certified = source != nullptr;

    const UPSet rebuilt = out.to_upset();
    if (source) {
      if (rebuilt != canonicalize(*source))
        throw InferenceFailure("reconstruction " + rebuilt.to_string() +
                               " is not the canonical form " +
                               canonicalize(*source).to_string());
    } else {
      out.checked_to = bits.size() - 1;
      for (Natural y = 0; y < bits.size(); ++y)
        if (rebuilt.contains(y) != static_cast<bool>(bits[y]))
          throw InferenceFailure("reconstruction differs from the input at " +
                                 std::to_string(y));
    }
    return out;
  }
  throw InferenceFailure("no periodic decomposition verifies with period <= " +
                         std::to_string(top));
}

WitnessTable expanding_evidence(const SetHandle& x, Natural n_max, Natural b) {
  if (const auto h = x.horizon(); h && b > *h) throw HorizonExceeded(b, *h);
  WitnessTable table{n_max, b, {}, 0, 0, false};
  const std::vector<std::uint8_t> bits = membership_bits(x, b);
  std::vector<Natural> members;
  for (Natural y = 0; y <= b; ++y)
    if (bits[y]) members.push_back(y);

  // run[i]: non-members following members[i] inside [0, b].
  std::vector<Natural> counts(n_max + 2, 0);
  table.rows.resize(n_max);
  for (Natural n = 1; n <= n_max; ++n) table.rows[n - 1].n = n;
  for (std::size_t i = members.size(); i-- > 0;) {
    const Natural y = members[i];
    const Natural next = i + 1 < members.size() ? members[i + 1] : b + 1;
    const Natural run = next - y - 1;
    const Natural reach = std::min(run, n_max);
    ++counts[reach];
    for (Natural n = 1; n <= reach; ++n) {
      auto& largest = table.rows[n - 1].largest;
      if (largest.size() < kWitnessesKept) largest.push_back(y);
    }
    if (i + 1 < members.size()) {
      Natural& slot = next <= b / 2 ? table.early_gap : table.late_gap;
      slot = std::max(slot, next - y);
    }
  }
  Natural at_least = 0;
  for (Natural n = n_max; n >= 1; --n) {
    at_least += counts[n];
    table.rows[n - 1].count = at_least;
    std::reverse(table.rows[n - 1].largest.begin(), table.rows[n - 1].largest.end());
  }
  const auto early_members =
      std::upper_bound(members.begin(), members.end(), b / 2) - members.begin();
  table.evidence = n_max >= 1 && table.rows.front().count > 0 && early_members >= 3 &&
                   table.late_gap > table.early_gap;
  return table;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::eventually_periodic: return "EventuallyPeriodic";
    case Classification::expanding_evidence: return "ExpandingEvidence";
    case Classification::inconclusive: return "Inconclusive";
  }
  return "?";
}

AnalysisReport classify(const SetHandle& x, Natural n_max, Natural b, const SearchLimits& limits) {
  if (const auto h = x.horizon(); h && b > *h) throw HorizonExceeded(b, *h);
  const SetHandle work = x.periodic() ? x : SetHandle(to_prefix(x, b));

  AnalysisReport report;
  report.witnesses = expanding_evidence(work, n_max, b);
  try {
    report.decomposition = decompose(work, n_max, limits);
  } catch (const InferenceFailure&) {
  }
  if (report.decomposition)
    report.classification = Classification::eventually_periodic;
  else if (report.witnesses.evidence)
    report.classification = Classification::expanding_evidence;

  std::optional<Natural> period;
  if (report.decomposition)
    period = report.decomposition->segments.front().modulus;
  else if (const Lookup d = find_uniform_period(work, n_max, limits))
    period = *d;
  report.profile = profile(work, n_max, period, limits);

  const auto& entries = report.profile.entries;
  std::vector<Natural> with_d;
  std::vector<Natural> with_alpha;
  for (Natural n = 1; n <= n_max; ++n) {
    if (entries[n].big_d) with_d.push_back(n);
    if (entries[n].alpha) with_alpha.push_back(n);
  }
  auto image_over = [&](const std::vector<Natural>& domain, auto value_of, auto second) {
    PrefixSet u = monotone_restrict(PrefixSet::from_members(n_max, domain), value_of, n_max);
    if (second) u = monotone_restrict(u, second, n_max);
    std::vector<Natural> image;
    for (Natural n : u.members()) image.push_back(value_of(n));
    return image_gap_bound(image);
  };
  const std::function<Natural(Natural)> big_d_of = [&](Natural n) { return *entries[n].big_d; };
  const std::function<Natural(Natural)> big_a_of = [&](Natural n) { return *entries[n].big_a; };
  const std::function<Natural(Natural)> alpha_of = [&](Natural n) { return *entries[n].alpha; };
  report.u = image_over(with_d, big_d_of, big_a_of);
  report.v = image_over(with_alpha, alpha_of, std::function<Natural(Natural)>{});
  return report;
}

}  // namespace presmin
