#include "presmin/set_handle.hpp"

#include <algorithm>

namespace presmin {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <typename Op>
SetHandle combine(const SetHandle& a, const SetHandle& b, Op op) {
  const auto ha = a.horizon();
  const auto hb = b.horizon();
  const Natural h = std::min(ha.value_or(UINT64_MAX), hb.value_or(UINT64_MAX));
  std::vector<bool> flags(h + 1);
  for (Natural x = 0; x <= h; ++x) flags[x] = op(a.contains(x), b.contains(x));
  return PrefixSet(std::move(flags));
}

}  // namespace

SetHandle::SetHandle(UPSet s) : value_(std::move(s)) {}
SetHandle::SetHandle(PrefixSet s) : value_(std::move(s)) {}
SetHandle::SetHandle(Oracle s) : value_(std::move(s)) {
  if (!std::get<Oracle>(value_).predicate) throw DomainError("oracle without a predicate");
}

std::optional<Natural> SetHandle::horizon() const {
  return std::visit(overloaded{
                        [](const UPSet&) -> std::optional<Natural> { return std::nullopt; },
                        [](const PrefixSet& p) -> std::optional<Natural> { return p.horizon(); },
                        [](const Oracle& o) -> std::optional<Natural> { return o.horizon; },
                    },
                    value_);
}

bool SetHandle::contains(Natural x) const {
  return std::visit(overloaded{
                        [x](const UPSet& s) { return s.contains(x); },
                        [x](const PrefixSet& p) { return p.contains(x); },
                        [x](const Oracle& o) {
                          if (x > o.horizon) throw HorizonExceeded(x, o.horizon);
                          return o.predicate(x);
                        },
                    },
                    value_);
}

std::string SetHandle::describe() const {
  return std::visit(overloaded{
                        [](const UPSet& s) { return s.to_string(); },
                        [](const PrefixSet& p) {
                          return "prefix(B=" + std::to_string(p.horizon()) + ", " +
                                 std::to_string(p.count()) + " members)";
                        },
                        [](const Oracle& o) {
                          return o.name + "(B=" + std::to_string(o.horizon) + ")";
                        },
                    },
                    value_);
}

std::optional<Natural> successor(const SetHandle& s, Natural x) {
  if (!s.contains(x)) throw DomainError(std::to_string(x) + " is not a member");
  Natural limit;
  if (const UPSet* u = s.periodic()) {
    // Past the threshold the residue pattern repeats within one period.
    limit = std::max(u->threshold(), x + 1) + u->period();
  } else {
    limit = *s.horizon();
  }
  for (Natural y = x + 1; y <= limit; ++y)
    if (s.contains(y)) return y;
  return std::nullopt;
}

PrefixSet to_prefix(const SetHandle& s, Natural b) {
  if (const PrefixSet* p = s.prefix()) return p->truncated(b);
  if (auto h = s.horizon(); h && b > *h) throw HorizonExceeded(b, *h);
  std::vector<bool> flags(b + 1);
  for (Natural x = 0; x <= b; ++x) flags[x] = s.contains(x);
  return PrefixSet(std::move(flags));
}

std::vector<std::uint8_t> membership_bits(const SetHandle& s, Natural upto) {
  if (auto h = s.horizon(); h && upto > *h) throw HorizonExceeded(upto, *h);
  std::vector<std::uint8_t> bits(upto + 1);
  if (const UPSet* u = s.periodic()) {
    for (Natural x = 0; x <= upto; ++x) bits[x] = u->contains(x);
  } else if (const PrefixSet* p = s.prefix()) {
    const auto& flags = p->flags();
    for (Natural x = 0; x <= upto; ++x) bits[x] = flags[x];
  } else {
    for (Natural x = 0; x <= upto; ++x) bits[x] = s.contains(x);
  }
  return bits;
}

SetHandle unite(const SetHandle& a, const SetHandle& b) {
  if (a.periodic() && b.periodic()) return unite(*a.periodic(), *b.periodic());
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

SetHandle intersect(const SetHandle& a, const SetHandle& b) {
  if (a.periodic() && b.periodic()) return intersect(*a.periodic(), *b.periodic());
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

SetHandle difference(const SetHandle& a, const SetHandle& b) {
  if (a.periodic() && b.periodic()) return difference(*a.periodic(), *b.periodic());
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

SetHandle complement(const SetHandle& s) {
  if (s.periodic()) return complement(*s.periodic());
  return combine(s, s, [](bool x, bool) { return !x; });
}

SetHandle shift(const SetHandle& s, Integer t) {
  if (s.periodic()) return shift(*s.periodic(), t);
  const Integer h = static_cast<Integer>(*s.horizon()) - t;
  if (h < 0) throw DomainError("shift moves the whole prefix below zero");
  std::vector<bool> flags(static_cast<Natural>(h) + 1);
  for (Integer x = 0; x <= h; ++x) {
    const Integer y = x + t;
    flags[static_cast<Natural>(x)] = y >= 0 && s.contains(static_cast<Natural>(y));
  }
  return PrefixSet(std::move(flags));
}

}  // namespace presmin
