#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "presmin/set_handle.hpp"

namespace presmin {

/// A textual set description:
///
///   builtin:NAME?key=value&key=value   coset(d, r), primes(B), squares(B),
///                                      powers(k, B), fibonacci(B), empty, all
///   builtin:NAME(ARG, ARG, ...)        finite(1, 2, 3), union(S, S, ...),
///                                      intersect(S, S, ...), difference(S, S),
///                                      complement(S), shift(S, t)
///   file:PATH                          member list or 0/1 string
///   formula:TEXT                       one-variable formula in x
///   up:up(N=..; E=..; d=..; R=..)      ultimately periodic literal
///
/// Arguments of composite builtins are themselves specs; the `builtin:`
/// prefix may be omitted there.
struct SourceSpec {
  enum class Kind { builtin, file, formula, literal };

  Kind kind = Kind::builtin;
  /// Builtin name, file path, formula text or literal text.
  std::string text;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> args;

  /// Throws ParseError for malformed specs.
  static SourceSpec parse(std::string_view spec);
};

/// Throws SourceError for unknown builtins, bad parameters and unreadable
/// or malformed files; formula and literal errors surface as ParseError.
SetHandle resolve(const SourceSpec& spec);
SetHandle resolve(std::string_view spec);

/// File contents: either a `#horizon B` header followed by one natural per
/// line, or a single line of 0/1 flags for positions 0, 1, ... Blank lines
/// and other `#` lines are ignored.
PrefixSet parse_members_file(std::string_view contents);

}  // namespace presmin
