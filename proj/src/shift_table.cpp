#include <algorithm>
#include <string>

#include "parallel.hpp"
#include "presmin/window.hpp"
#include "search_scope.hpp"

namespace presmin {

namespace {

constexpr Natural kMaxCells = Natural{1} << 26;

// Prefix minimum over keys [0, i].
class MinFenwick {
 public:
  explicit MinFenwick(std::size_t size) : tree_(size + 1, ~Natural{0}) {}

  void update(std::size_t key, Natural value) {
    for (std::size_t i = key + 1; i < tree_.size(); i += i & (~i + 1))
      tree_[i] = std::min(tree_[i], value);
  }

  Natural query(std::size_t key) const {
    Natural out = ~Natural{0};
    for (std::size_t i = key + 1; i > 0; i -= i & (~i + 1)) out = std::min(out, tree_[i]);
    return out;
  }

 private:
  std::vector<Natural> tree_;
};

}  // namespace

ShiftTable::ShiftTable(const SetHandle& x, Natural n_max, const SearchLimits& limits)
    : n_max_(n_max) {
  const detail::SearchScope scope(x, n_max, 0, limits);
  periodic_ = scope.periodic();
  exact_ = scope.exact_for(n_max);
  columns_ = 0;
  for (Natural n = 0; n <= n_max; ++n) {
    max_shift_.push_back(scope.max_shift(n));
    exact_for_.push_back(scope.exact_for(n));
    columns_ = std::max(columns_, max_shift_.back());
  }
  if (columns_ > kMaxCells / (n_max + 1))
    throw DomainError("shift table would exceed " + std::to_string(kMaxCells) +
                      " cells; lower n_max or set PRESMIN_MAX_SEARCH");
  table_.assign(columns_ * (n_max + 1), kNone);

  const auto& bits = scope.bits();
  // atilde(n, g) is nondecreasing in n, so one left-to-right pass over the
  // mismatch positions of shift g fills the whole column.
  detail::parallel_for(1, columns_ + 1, [&](Natural g) {
    if (g > scope.last()) return;
    const auto first_limit = scope.base_limit(0, g);
    if (!first_limit) return;
    const Natural x_end = periodic_ ? *first_limit + n_max : scope.last() - g;
    Natural next_n = 0;
    Natural run_start = 0;
    for (Natural y = 0; y <= x_end && next_n <= n_max; ++y) {
      if (bits[y] != bits[y + g]) {
        run_start = y + 1;
        if (run_start > *first_limit) return;
        continue;
      }
      while (next_n <= n_max && next_n <= y - run_start) {
        const auto limit = scope.base_limit(next_n, g);
        if (!limit || run_start > *limit) return;
        cell(next_n, g) = run_start;
        ++next_n;
      }
    }
  });
}

Natural ShiftTable::max_shift(Natural n) const {
  if (n > n_max_) throw DomainError("window size exceeds the table");
  return max_shift_[n];
}

Lookup ShiftTable::atilde(Natural n, Natural g) const {
  if (n > n_max_) throw DomainError("window size exceeds the table");
  if (g == 0) throw DomainError("shift must be at least 1");
  if (g > columns_) throw DomainError("shift exceeds the table");
  const Natural a = cell(n, g);
  if (a == kNone) return Lookup::missing(periodic_);
  return Lookup::found(a);
}

Lookup ShiftTable::dtilde(Natural n) const {
  for (Natural g = 1; g <= max_shift(n); ++g)
    if (cell(n, g) != kNone) return Lookup::found(g);
  return Lookup::missing(exact_for_[n]);
}

Lookup ShiftTable::big_d(Natural n) const {
  const Natural top = max_shift(n);
  Natural max_value = 0;
  for (Natural g = 1; g <= top; ++g)
    if (cell(n, g) != kNone) max_value = std::max(max_value, cell(n, g));
  // Descending shifts: d fails when some larger d' has a smaller atilde and
  // atilde(d') + d' <= atilde(d) + n.
  MinFenwick reach(max_value + 1);
  std::optional<Natural> best;
  for (Natural g = top; g >= 1; --g) {
    const Natural a = cell(n, g);
    if (a == kNone) continue;
    const bool fails = a > 0 && reach.query(a - 1) <= a + n;
    if (!fails) best = g;
    reach.update(a, a + g);
  }
  if (best) return Lookup::found(*best);
  return Lookup::missing(exact_for_[n]);
}

Lookup ShiftTable::big_a(Natural n) const {
  const Lookup d = big_d(n);
  if (!d) return d;
  return atilde(n, *d);
}

}  // namespace presmin
