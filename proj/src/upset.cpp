#include "presmin/upset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace presmin {

namespace {

// Combined periods beyond this are refused rather than allocated.
constexpr Natural kMaxPeriod = Natural{1} << 26;

std::vector<Natural> flags_to_list(const std::vector<bool>& flags) {
  std::vector<Natural> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

Natural checked_lcm(Natural a, Natural b) {
  Natural l = std::lcm(a, b);
  if (l > kMaxPeriod || l < a || l < b)
    throw DomainError("combined period " + std::to_string(a) + "·" +
                      std::to_string(b) + " is too large");
  return l;
}

template <typename Op>
UPSet combine(const UPSet& a, const UPSet& b, Op op) {
  const Natural n = std::max(a.threshold(), b.threshold());
  const Natural d = checked_lcm(a.period(), b.period());
  std::vector<Natural> exceptional;
  for (Natural x = 0; x < n; ++x)
    if (op(a.contains(x), b.contains(x))) exceptional.push_back(x);
  std::vector<Natural> residues;
  for (Natural r = 0; r < d; ++r) {
    const Natural x = n + (r + d - n % d) % d;
    if (op(a.contains(x), b.contains(x))) residues.push_back(r);
  }
  return canonicalize(UPSet(n, std::move(exceptional), d, std::move(residues)));
}

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Natural natural() {
    skip_space();
    if (!at_digit()) throw ParseError("expected a natural number", pos_);
    Natural v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Natural digit = static_cast<Natural>(text_[pos_] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw ParseError("number too large", pos_);
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::string key() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a field name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<Natural> list() {
    std::vector<Natural> out;
    if (!at_digit()) return out;
    out.push_back(natural());
    while (accept(',')) out.push_back(natural());
    return out;
  }

  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

UPSet::UPSet() : residue_flags_(1, false) {}

UPSet::UPSet(Natural threshold, std::vector<Natural> exceptional, Natural period,
             std::vector<Natural> residues)
    : threshold_(threshold), period_(period) {
  if (period == 0) throw DomainError("period must be at least 1");
  if (period > kMaxPeriod) throw DomainError("period too large");
  exceptional_.assign(threshold, false);
  residue_flags_.assign(period, false);
  for (Natural e : exceptional) {
    if (e >= threshold)
      throw DomainError("exceptional point " + std::to_string(e) + " is not below the threshold");
    exceptional_[e] = true;
  }
  for (Natural r : residues) {
    if (r >= period)
      throw DomainError("residue " + std::to_string(r) + " is not below the period");
    residue_flags_[r] = true;
  }
}

UPSet UPSet::empty() { return UPSet(); }

UPSet UPSet::all() { return UPSet(0, {}, 1, {0}); }

UPSet UPSet::coset(Natural period, Natural residue) {
  if (period == 0) throw DomainError("period must be at least 1");
  return canonicalize(UPSet(0, {}, period, {residue % period}));
}

UPSet UPSet::point(Natural x) { return canonicalize(UPSet(x + 1, {x}, 1, {})); }

UPSet UPSet::finite(const std::vector<Natural>& members) {
  if (members.empty()) return empty();
  const Natural top = *std::max_element(members.begin(), members.end());
  return canonicalize(UPSet(top + 1, members, 1, {}));
}

UPSet UPSet::at_least(Natural lo) { return canonicalize(UPSet(lo, {}, 1, {0})); }

UPSet UPSet::below(Natural hi) {
  std::vector<Natural> members(hi);
  std::iota(members.begin(), members.end(), Natural{0});
  return canonicalize(UPSet(hi, std::move(members), 1, {}));
}

std::vector<Natural> UPSet::exceptional() const { return flags_to_list(exceptional_); }

std::vector<Natural> UPSet::residues() const { return flags_to_list(residue_flags_); }

bool UPSet::is_canonical() const { return canonicalize(*this) == *this; }

bool UPSet::is_finite() const {
  return std::none_of(residue_flags_.begin(), residue_flags_.end(), [](bool b) { return b; });
}

std::string UPSet::to_string() const {
  auto join = [](const std::vector<Natural>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(xs[i]);
    }
    return out;
  };
  std::ostringstream os;
  os << "up(N=" << threshold_ << "; E=" << join(exceptional()) << "; d=" << period_
     << "; R=" << join(residues()) << ")";
  return os.str();
}

UPSet UPSet::parse(std::string_view text) {
  LiteralReader in(text);
  in.skip_space();
  if (in.key() != "up") throw ParseError("set literal must start with 'up('", 0);
  in.expect('(');
  std::map<std::string, std::vector<Natural>> fields;
  do {
    const std::size_t at = in.pos();
    std::string name = in.key();
    in.expect('=');
    if (fields.count(name)) throw ParseError("duplicate field '" + name + "'", at);
    if (name == "N" || name == "d")
      fields[name] = {in.natural()};
    else if (name == "E" || name == "R")
      fields[name] = in.list();
    else
      throw ParseError("unknown field '" + name + "'", at);
  } while (in.accept(';'));
  in.expect(')');
  if (!in.done()) throw ParseError("trailing characters after set literal", in.pos());
  for (const char* required : {"N", "E", "d", "R"})
    if (!fields.count(required))
      throw ParseError(std::string("missing field '") + required + "'", in.pos());
  return UPSet(fields["N"][0], fields["E"], fields["d"][0], fields["R"]);
}

UPSet canonicalize(const UPSet& s) {
  const Natural d = s.period_;
  Natural p = d;
  for (Natural q = 1; q < d; ++q) {
    if (d % q != 0) continue;
    bool periodic = true;
    for (Natural r = q; r < d && periodic; ++r)
      periodic = s.residue_flags_[r] == s.residue_flags_[r % q];
    if (periodic) {
      p = q;
      break;
    }
  }
  UPSet out;
  out.period_ = p;
  out.residue_flags_.assign(s.residue_flags_.begin(), s.residue_flags_.begin() + p);
  Natural n = s.threshold_;
  while (n > 0 && s.exceptional_[n - 1] == out.residue_flags_[(n - 1) % p]) --n;
  out.threshold_ = n;
  out.exceptional_.assign(s.exceptional_.begin(), s.exceptional_.begin() + n);
  return out;
}

UPSet unite(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

UPSet intersect(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

UPSet difference(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

UPSet complement(const UPSet& s) {
  return combine(s, s, [](bool x, bool) { return !x; });
}

UPSet shift(const UPSet& s, Integer t) {
  const Integer n = std::max<Integer>(0, static_cast<Integer>(s.threshold()) - t);
  std::vector<Natural> exceptional;
  for (Integer x = 0; x < n; ++x) {
    const Integer y = x + t;
    if (y >= 0 && s.contains(static_cast<Natural>(y))) exceptional.push_back(static_cast<Natural>(x));
  }
  const Integer d = static_cast<Integer>(s.period());
  std::vector<Natural> residues;
  for (Natural r : s.residues())
    residues.push_back(static_cast<Natural>(((static_cast<Integer>(r) - t) % d + d) % d));
  return canonicalize(UPSet(static_cast<Natural>(n), std::move(exceptional), s.period(),
                            std::move(residues)));
}

bool same_set(const UPSet& a, const UPSet& b) { return canonicalize(a) == canonicalize(b); }

}  // namespace presmin
