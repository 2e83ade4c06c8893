// Recursive-descent parser for the one-variable surface syntax:
//
//   formula := disj ("implies" formula)?
//   disj    := conj ("or" conj)*
//   conj    := unary ("and" unary)*
//   unary   := "not" unary | "(" formula ")" | atom
//   atom    := term ("<"|"<="|"="|"!="|">="|">") term
//            | term ("≡"|"=mod=") INT "(" "mod" INT ")"
//   term    := ["-"] summand (("+"|"-") summand)*
//   summand := INT "*" "x" | "x" "*" INT | "x" | INT

#include <cctype>
#include <limits>

#include "presmin/formula.hpp"

namespace presmin {

namespace {

enum class Tok {
  kInt, kX, kPlus, kMinus, kStar, kLParen, kRParen,
  kLt, kLe, kEq, kNe, kGe, kGt, kCong, kMod,
  kAnd, kOr, kNot, kImplies, kEnd,
};

struct Token {
  Tok kind;
  std::size_t pos;
  Integer value = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == text_.size()) {
        out.push_back({Tok::kEnd, pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool eat(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  Token next() {
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const int digit = text_[pos_] - '0';
        if (v > (std::numeric_limits<Integer>::max() - digit) / 10)
          throw ParseError("integer literal too large", at);
        v = v * 10 + digit;
        ++pos_;
      }
      return {Tok::kInt, at, v};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string_view word = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (word == "x") return {Tok::kX, at};
      if (word == "and") return {Tok::kAnd, at};
      if (word == "or") return {Tok::kOr, at};
      if (word == "not") return {Tok::kNot, at};
      if (word == "implies") return {Tok::kImplies, at};
      if (word == "mod") return {Tok::kMod, at};
      throw ParseError("unknown word '" + std::string(word) + "'", at);
    }
    // Longest symbols first.
    static constexpr std::pair<std::string_view, Tok> kSymbols[] = {
        {"=mod=", Tok::kCong}, {"≡", Tok::kCong},  {"≤", Tok::kLe},      {"≥", Tok::kGe},
        {"≠", Tok::kNe},       {"∧", Tok::kAnd},   {"∨", Tok::kOr},      {"¬", Tok::kNot},
        {"→", Tok::kImplies},  {"->", Tok::kImplies}, {"&&", Tok::kAnd}, {"||", Tok::kOr},
        {"<=", Tok::kLe},      {">=", Tok::kGe},   {"!=", Tok::kNe},     {"<", Tok::kLt},
        {">", Tok::kGt},       {"=", Tok::kEq},    {"!", Tok::kNot},     {"+", Tok::kPlus},
        {"-", Tok::kMinus},    {"*", Tok::kStar},  {"(", Tok::kLParen},  {")", Tok::kRParen},
    };
    for (const auto& [sym, kind] : kSymbols)
      if (eat(sym)) return {kind, at};
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    if (peek().kind != Tok::kEnd) fail("unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().pos);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  FormulaPtr formula() {
    FormulaPtr lhs = disjunction();
    if (accept(Tok::kImplies)) return make_implies(lhs, formula());
    return lhs;
  }

  FormulaPtr disjunction() {
    std::vector<FormulaPtr> parts{conjunction()};
    while (accept(Tok::kOr)) parts.push_back(conjunction());
    return make_or(std::move(parts));
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> parts{unary()};
    while (accept(Tok::kAnd)) parts.push_back(unary());
    return make_and(std::move(parts));
  }

  FormulaPtr unary() {
    if (accept(Tok::kNot)) return make_not(unary());
    if (accept(Tok::kLParen)) {
      FormulaPtr inner = formula();
      expect(Tok::kRParen, "')'");
      return inner;
    }
    return atom();
  }

  FormulaPtr atom() {
    const Term lhs = term();
    const Token op = peek();
    ++pos_;
    switch (op.kind) {
      case Tok::kLt: return make_less(lhs, term());
      case Tok::kLe: return make_not(make_less(term(), lhs));
      case Tok::kGt: return make_less(term(), lhs);
      case Tok::kGe: return make_not(make_less(lhs, term()));
      case Tok::kEq: return make_equal(lhs, term());
      case Tok::kNe: return make_not(make_equal(lhs, term()));
      case Tok::kCong: {
        bool negative = accept(Tok::kMinus);
        const Integer residue = expect(Tok::kInt, "a residue").value;
        expect(Tok::kLParen, "'(mod'");
        expect(Tok::kMod, "'mod'");
        const Token& m = expect(Tok::kInt, "a modulus");
        if (m.value == 0) throw ParseError("modulus must be at least 1", m.pos);
        expect(Tok::kRParen, "')'");
        return make_congruent(lhs, static_cast<Natural>(m.value), negative ? -residue : residue);
      }
      default:
        --pos_;
        fail("expected a comparison or '≡'");
    }
  }

  Term term() {
    Term t;
    bool negative = accept(Tok::kMinus);
    for (;;) {
      const Term s = summand();
      t.coefficient = checked_add(t.coefficient, negative ? -s.coefficient : s.coefficient);
      t.constant = checked_add(t.constant, negative ? -s.constant : s.constant);
      if (accept(Tok::kPlus))
        negative = false;
      else if (accept(Tok::kMinus))
        negative = true;
      else
        return t;
    }
  }

  Term summand() {
    if (accept(Tok::kX)) {
      if (accept(Tok::kStar)) return {expect(Tok::kInt, "an integer coefficient").value, 0};
      return Term::variable();
    }
    const Integer v = expect(Tok::kInt, "a term").value;
    if (accept(Tok::kStar)) {
      expect(Tok::kX, "'x'");
      return {v, 0};
    }
    return Term::literal(v);
  }

  Integer checked_add(Integer a, Integer b) const {
    Integer out;
    if (__builtin_add_overflow(a, b, &out)) fail("term overflows 64-bit integers");
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

}  // namespace presmin
