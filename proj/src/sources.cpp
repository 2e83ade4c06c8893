#include "presmin/sources.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "presmin/formula.hpp"

namespace presmin {

namespace {

constexpr Natural kMaxHorizon = Natural{1} << 28;

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size() && !text.empty();
}

Natural natural_arg(std::string_view text, const std::string& what) {
  Natural v = 0;
  if (!parse_number(text, v)) throw SourceError(what + " must be a natural number, got '" +
                                                std::string(trim(text)) + "'");
  return v;
}

// Splits on commas that are not nested inside parentheses.
std::vector<std::string> split_args(std::string_view body, std::size_t offset) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')' && --depth < 0) throw ParseError("unbalanced ')'", offset + i);
    if (body[i] == ',' && depth == 0) {
      out.emplace_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('", offset + body.size());
  const std::string_view last = trim(body.substr(start));
  if (!last.empty() || !out.empty()) out.emplace_back(last);
  for (const auto& a : out)
    if (a.empty()) throw ParseError("empty argument", offset);
  return out;
}

class Params {
 public:
  Params(const SourceSpec& spec) : spec_(spec) {}

  Natural get(const std::string& key) const {
    for (const auto& [k, v] : spec_.params)
      if (k == key) return natural_arg(v, spec_.text + " parameter " + key);
    throw SourceError("builtin " + spec_.text + " needs parameter " + key);
  }

  Natural horizon() const {
    const Natural b = get("B");
    if (b > kMaxHorizon) throw SourceError("horizon B is too large");
    return b;
  }

  void only(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [k, v] : spec_.params)
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        throw SourceError("builtin " + spec_.text + " has no parameter " + k);
  }

 private:
  const SourceSpec& spec_;
};

PrefixSet primes(Natural b) {
  std::vector<bool> flags(b + 1, true);
  flags[0] = false;
  if (b >= 1) flags[1] = false;
  for (Natural p = 2; p * p <= b; ++p)
    if (flags[p])
      for (Natural q = p * p; q <= b; q += p) flags[q] = false;
  return PrefixSet(std::move(flags));
}

PrefixSet squares(Natural b) {
  std::vector<bool> flags(b + 1, false);
  for (Natural k = 0; k * k <= b; ++k) flags[k * k] = true;
  return PrefixSet(std::move(flags));
}

PrefixSet powers(Natural k, Natural b) {
  if (k < 2) throw SourceError("powers needs base k >= 2");
  std::vector<bool> flags(b + 1, false);
  for (Natural p = 1; p <= b; p *= k) {
    flags[p] = true;
    if (p > b / k) break;
  }
  return PrefixSet(std::move(flags));
}

PrefixSet fibonacci(Natural b) {
  std::vector<bool> flags(b + 1, false);
  for (Natural x = 0, y = 1; x <= b;) {
    flags[x] = true;
    const Natural next = x + y;
    x = y;
    y = next;
  }
  return PrefixSet(std::move(flags));
}

SetHandle resolve_builtin(const SourceSpec& spec) {
  const std::string& name = spec.text;
  const Params p(spec);
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    if (spec.args.size() < lo || spec.args.size() > hi)
      throw SourceError("builtin " + name + " takes " + std::to_string(lo) +
                        (lo == hi ? "" : " to " + std::to_string(hi)) + " arguments");
  };
  const bool composite = name == "finite" || name == "union" || name == "intersect" ||
                         name == "difference" || name == "complement" || name == "shift";
  if (composite && !spec.params.empty())
    throw SourceError("builtin " + name + " takes arguments, not parameters");
  if (!composite && !spec.args.empty())
    throw SourceError("builtin " + name + " takes parameters, not arguments");

  if (name == "empty" || name == "all") {
    p.only({});
    return name == "empty" ? UPSet::empty() : UPSet::all();
  }
  if (name == "coset") {
    p.only({"d", "r"});
    const Natural d = p.get("d");
    const Natural r = p.get("r");
    if (d == 0) throw SourceError("coset needs d >= 1");
    if (r >= d) throw SourceError("coset needs r < d");
    return UPSet::coset(d, r);
  }
  if (name == "primes") {
    p.only({"B"});
    return primes(p.horizon());
  }
  if (name == "squares") {
    p.only({"B"});
    return squares(p.horizon());
  }
  if (name == "powers") {
    p.only({"k", "B"});
    return powers(p.get("k"), p.horizon());
  }
  if (name == "fibonacci") {
    p.only({"B"});
    return fibonacci(p.horizon());
  }
  if (name == "finite") {
    std::vector<Natural> members;
    for (const auto& a : spec.args) members.push_back(natural_arg(a, "finite member"));
    if (!members.empty() && *std::max_element(members.begin(), members.end()) > kMaxHorizon)
      throw SourceError("finite member is too large");
    return UPSet::finite(members);
  }
  if (name == "union" || name == "intersect") {
    arity(2, SIZE_MAX);
    SetHandle acc = resolve(spec.args.front());
    for (std::size_t i = 1; i < spec.args.size(); ++i)
      acc = name == "union" ? unite(acc, resolve(spec.args[i]))
                            : intersect(acc, resolve(spec.args[i]));
    return acc;
  }
  if (name == "difference") {
    arity(2, 2);
    return difference(resolve(spec.args[0]), resolve(spec.args[1]));
  }
  if (name == "complement") {
    arity(1, 1);
    return complement(resolve(spec.args[0]));
  }
  if (name == "shift") {
    arity(2, 2);
    Integer t = 0;
    if (!parse_number(spec.args[1], t))
      throw SourceError("shift amount must be an integer, got '" + spec.args[1] + "'");
    return shift(resolve(spec.args[0]), t);
  }
  throw SourceError("unknown builtin '" + name + "'");
}

}  // namespace

SourceSpec SourceSpec::parse(std::string_view spec) {
  const std::string_view raw = spec;
  spec = trim(spec);
  const std::size_t offset = spec.data() - raw.data();
  SourceSpec out;
  if (starts_with(spec, "file:")) {
    out.kind = Kind::file;
    out.text = std::string(trim(spec.substr(5)));
    if (out.text.empty()) throw ParseError("file: needs a path", offset + 5);
    return out;
  }
  if (starts_with(spec, "formula:")) {
    out.kind = Kind::formula;
    out.text = std::string(spec.substr(8));
    return out;
  }
  if (starts_with(spec, "up:")) {
    out.kind = Kind::literal;
    out.text = std::string(spec.substr(3));
    return out;
  }
  std::size_t at = 0;
  if (starts_with(spec, "builtin:")) at = 8;
  const std::string_view body = spec.substr(at);
  std::size_t name_end = 0;
  while (name_end < body.size() &&
         (std::isalnum(static_cast<unsigned char>(body[name_end])) || body[name_end] == '_'))
    ++name_end;
  if (name_end == 0) throw ParseError("expected a builtin name", offset + at);
  out.text = std::string(body.substr(0, name_end));
  std::string_view rest = body.substr(name_end);
  const std::size_t rest_at = offset + at + name_end;
  if (rest.empty()) return out;
  if (rest.front() == '(') {
    if (rest.back() != ')') throw ParseError("expected ')' at the end", rest_at + rest.size());
    out.args = split_args(rest.substr(1, rest.size() - 2), rest_at + 1);
    return out;
  }
  if (rest.front() != '?') throw ParseError("expected '?' or '('", rest_at);
  rest.remove_prefix(1);
  std::size_t pos = rest_at + 1;
  while (!rest.empty()) {
    const std::size_t amp = rest.find('&');
    const std::string_view item = rest.substr(0, amp);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("expected key=value", pos);
    out.params.emplace_back(std::string(trim(item.substr(0, eq))),
                            std::string(trim(item.substr(eq + 1))));
    if (amp == std::string_view::npos) break;
    rest.remove_prefix(amp + 1);
    pos += amp + 1;
  }
  return out;
}

PrefixSet parse_members_file(std::string_view contents) {
  std::optional<Natural> horizon;
  std::vector<std::string> lines;
  std::istringstream in{std::string(contents)};
  for (std::string line; std::getline(in, line);) {
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string_view directive = trim(t.substr(1));
      if (starts_with(directive, "horizon")) {
        if (horizon) throw SourceError("duplicate #horizon header");
        horizon = natural_arg(directive.substr(7), "#horizon");
        if (*horizon > kMaxHorizon) throw SourceError("#horizon is too large");
      }
      continue;
    }
    lines.emplace_back(t);
  }
  if (!horizon) {
    if (lines.size() != 1 || lines.front().find_first_not_of("01") != std::string::npos)
      throw SourceError("member lists need a '#horizon B' header");
    std::vector<bool> flags;
    for (char c : lines.front()) flags.push_back(c == '1');
    return PrefixSet(std::move(flags));
  }
  std::vector<Natural> members;
  for (const auto& l : lines) {
    const Natural m = natural_arg(l, "member");
    if (m > *horizon)
      throw SourceError("member " + l + " exceeds the horizon " + std::to_string(*horizon));
    members.push_back(m);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return PrefixSet::from_members(*horizon, members);
}

SetHandle resolve(const SourceSpec& spec) {
  switch (spec.kind) {
    case SourceSpec::Kind::builtin: return resolve_builtin(spec);
    case SourceSpec::Kind::formula: return eval(*parse_formula(spec.text));
    case SourceSpec::Kind::literal: return canonicalize(UPSet::parse(spec.text));
    case SourceSpec::Kind::file: {
      std::ifstream file(spec.text, std::ios::binary);
      if (!file) throw SourceError("cannot read '" + spec.text + "'");
      std::ostringstream buffer;
      buffer << file.rdbuf();
      try {
        return parse_members_file(buffer.str());
      } catch (const SourceError& e) {
        throw SourceError(spec.text + ": " + e.what());
      }
    }
  }
  throw SourceError("unsupported source");
}

SetHandle resolve(std::string_view spec) { return resolve(SourceSpec::parse(spec)); }

}  // namespace presmin
