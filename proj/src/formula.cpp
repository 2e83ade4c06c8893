#include <algorithm>
#include <tuple>
#include <utility>

#include "presmin/formula.hpp"

namespace presmin {

namespace {

__extension__ typedef __int128 Wide;

// Points and half-lines further out than this would allocate huge prefixes.
constexpr Wide kMaxThreshold = Wide{1} << 26;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide mod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

Natural checked_threshold(Wide v) {
  if (v > kMaxThreshold)
    throw DomainError("formula constant too large for an explicit prefix");
  return static_cast<Natural>(v);
}

Wide gcd(Wide a, Wide b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
Wide inverse(Wide a, Wide m) {
  Wide old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const Wide q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  return mod(old_s, m);
}

// {x in ℕ : c·x + k < 0}
UPSet solve_less(Wide c, Wide k) {
  if (c == 0) return k < 0 ? UPSet::all() : UPSet::empty();
  if (c > 0) {
    const Wide m = -k - 1;
    if (m < 0) return UPSet::empty();
    return UPSet::below(checked_threshold(m / c + 1));
  }
  const Wide lo = -floor_div(-(k + 1), -c);  // ceil((k + 1) / |c|)
  if (lo <= 0) return UPSet::all();
  return UPSet::at_least(checked_threshold(lo));
}

// {x in ℕ : c·x + k = 0}
UPSet solve_equal(Wide c, Wide k) {
  if (c == 0) return k == 0 ? UPSet::all() : UPSet::empty();
  if ((-k) % c != 0) return UPSet::empty();
  const Wide x = -k / c;
  if (x < 0) return UPSet::empty();
  return UPSet::point(checked_threshold(x));
}

// {x in ℕ : c·x + k ≡ r (mod m)}
UPSet solve_congruent(Wide c, Wide k, Wide m, Wide r) {
  const Wide a = mod(c, m);
  const Wide t = mod(r - k, m);
  const Wide g = gcd(a, m);  // gcd(0, m) = m
  if (t % g != 0) return UPSet::empty();
  const Wide reduced = m / g;
  if (reduced == 1) return UPSet::all();
  const Wide x0 = mod((t / g) * inverse(a / g, reduced), reduced);
  return UPSet::coset(static_cast<Natural>(reduced), static_cast<Natural>(x0));
}

Wide value(const Term& t, Natural x) {
  return Wide{t.coefficient} * Wide{static_cast<Integer>(x)} + Wide{t.constant};
}

std::string print_term(const Term& t) {
  std::string out;
  const Integer c = t.coefficient;
  const Integer k = t.constant;
  if (c == 0) return std::to_string(k);
  if (c == 1)
    out = "x";
  else if (c == -1)
    out = "-x";
  else
    out = std::to_string(c) + "*x";
  if (k > 0) out += " + " + std::to_string(k);
  if (k < 0) out += " - " + std::to_string(static_cast<std::uint64_t>(-(k + 1)) + 1);
  return out;
}

enum Precedence { kImplies = 0, kOr = 1, kAnd = 2, kUnary = 3 };

std::string print_at(const Formula& f, int min_prec) {
  auto wrap = [min_prec](int prec, std::string s) {
    return prec < min_prec ? "(" + s + ")" : s;
  };
  return std::visit(
      overloaded{
          [](const Less& a) { return print_term(a.lhs) + " < " + print_term(a.rhs); },
          [](const Equal& a) { return print_term(a.lhs) + " = " + print_term(a.rhs); },
          [](const Congruent& a) {
            return print_term(a.term) + " ≡ " + std::to_string(a.residue) + " (mod " +
                   std::to_string(a.modulus) + ")";
          },
          [](const Not& n) {
            if (const Less* l = n.operand->as<Less>())
              return print_term(l->lhs) + " >= " + print_term(l->rhs);
            if (const Equal* e = n.operand->as<Equal>())
              return print_term(e->lhs) + " != " + print_term(e->rhs);
            return "not " + print_at(*n.operand, kUnary);
          },
          [&](const And& a) {
            std::string s;
            for (std::size_t i = 0; i < a.operands.size(); ++i)
              s += (i ? " and " : "") + print_at(*a.operands[i], kUnary);
            return wrap(kAnd, s);
          },
          [&](const Or& o) {
            std::string s;
            for (std::size_t i = 0; i < o.operands.size(); ++i)
              s += (i ? " or " : "") + print_at(*o.operands[i], kAnd);
            return wrap(kOr, s);
          },
          [&](const Implies& i) {
            return wrap(kImplies, print_at(*i.premise, kOr) + " implies " +
                                      print_at(*i.conclusion, kImplies));
          },
      },
      f.node());
}

}  // namespace

FormulaPtr make_less(Term lhs, Term rhs) {
  return std::make_shared<const Formula>(Less{lhs, rhs});
}

FormulaPtr make_equal(Term lhs, Term rhs) {
  return std::make_shared<const Formula>(Equal{lhs, rhs});
}

FormulaPtr make_congruent(Term term, Natural modulus, Integer residue) {
  if (modulus == 0) throw DomainError("congruence modulus must be at least 1");
  const Wide r = mod(residue, static_cast<Wide>(modulus));
  return std::make_shared<const Formula>(Congruent{term, modulus, static_cast<Natural>(r)});
}

FormulaPtr make_not(FormulaPtr f) { return std::make_shared<const Formula>(Not{std::move(f)}); }

FormulaPtr make_and(std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw DomainError("conjunction needs at least one operand");
  if (fs.size() == 1) return fs.front();
  return std::make_shared<const Formula>(And{std::move(fs)});
}

FormulaPtr make_or(std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw DomainError("disjunction needs at least one operand");
  if (fs.size() == 1) return fs.front();
  return std::make_shared<const Formula>(Or{std::move(fs)});
}

FormulaPtr make_implies(FormulaPtr premise, FormulaPtr conclusion) {
  return std::make_shared<const Formula>(Implies{std::move(premise), std::move(conclusion)});
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.node().index() != b.node().index()) return false;
  auto same_list = [](const std::vector<FormulaPtr>& x, const std::vector<FormulaPtr>& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                      [](const FormulaPtr& p, const FormulaPtr& q) {
                        return structurally_equal(*p, *q);
                      });
  };
  return std::visit(
      overloaded{
          [&](const Less& x) { return x == *b.as<Less>(); },
          [&](const Equal& x) { return x == *b.as<Equal>(); },
          [&](const Congruent& x) { return x == *b.as<Congruent>(); },
          [&](const Not& x) { return structurally_equal(*x.operand, *b.as<Not>()->operand); },
          [&](const And& x) { return same_list(x.operands, b.as<And>()->operands); },
          [&](const Or& x) { return same_list(x.operands, b.as<Or>()->operands); },
          [&](const Implies& x) {
            const Implies* y = b.as<Implies>();
            return structurally_equal(*x.premise, *y->premise) &&
                   structurally_equal(*x.conclusion, *y->conclusion);
          },
      },
      a.node());
}

std::string print(const Formula& f) { return print_at(f, kImplies); }

bool holds(const Formula& f, Natural x) {
  return std::visit(
      overloaded{
          [x](const Less& a) { return value(a.lhs, x) < value(a.rhs, x); },
          [x](const Equal& a) { return value(a.lhs, x) == value(a.rhs, x); },
          [x](const Congruent& a) {
            return mod(value(a.term, x), static_cast<Wide>(a.modulus)) ==
                   static_cast<Wide>(a.residue);
          },
          [x](const Not& n) { return !holds(*n.operand, x); },
          [x](const And& a) {
            return std::all_of(a.operands.begin(), a.operands.end(),
                               [x](const FormulaPtr& p) { return holds(*p, x); });
          },
          [x](const Or& o) {
            return std::any_of(o.operands.begin(), o.operands.end(),
                               [x](const FormulaPtr& p) { return holds(*p, x); });
          },
          [x](const Implies& i) { return !holds(*i.premise, x) || holds(*i.conclusion, x); },
      },
      f.node());
}

UPSet eval(const Formula& f) {
  auto diff = [](const Term& l, const Term& r) {
    return std::pair{Wide{l.coefficient} - Wide{r.coefficient},
                     Wide{l.constant} - Wide{r.constant}};
  };
  return std::visit(
      overloaded{
          [&](const Less& a) {
            auto [c, k] = diff(a.lhs, a.rhs);
            return solve_less(c, k);
          },
          [&](const Equal& a) {
            auto [c, k] = diff(a.lhs, a.rhs);
            return solve_equal(c, k);
          },
          [](const Congruent& a) {
            return solve_congruent(a.term.coefficient, a.term.constant,
                                   static_cast<Wide>(a.modulus), static_cast<Wide>(a.residue));
          },
          [](const Not& n) { return complement(eval(*n.operand)); },
          [](const And& a) {
            UPSet acc = eval(*a.operands.front());
            for (std::size_t i = 1; i < a.operands.size(); ++i)
              acc = intersect(acc, eval(*a.operands[i]));
            return acc;
          },
          [](const Or& o) {
            UPSet acc = eval(*o.operands.front());
            for (std::size_t i = 1; i < o.operands.size(); ++i)
              acc = unite(acc, eval(*o.operands[i]));
            return acc;
          },
          [](const Implies& i) {
            return unite(complement(eval(*i.premise)), eval(*i.conclusion));
          },
      },
      f.node());
}

FormulaPtr synthesize(const UPSet& s) {
  const UPSet c = canonicalize(s);
  const Term x = Term::variable();
  const auto n = static_cast<Integer>(c.threshold());
  std::vector<FormulaPtr> disjuncts;
  for (Natural e : c.exceptional())
    disjuncts.push_back(make_equal(x, Term::literal(static_cast<Integer>(e))));
  for (Natural r : c.residues()) {
    auto bound = make_not(make_less(x, Term::literal(n)));
    if (c.period() == 1) {
      disjuncts.push_back(bound);
      continue;
    }
    auto congruence = make_congruent(x, c.period(), static_cast<Integer>(r));
    disjuncts.push_back(n == 0 ? congruence : make_and({bound, congruence}));
  }
  if (disjuncts.empty()) return make_less(x, Term::literal(0));
  return make_or(std::move(disjuncts));
}

}  // namespace presmin
