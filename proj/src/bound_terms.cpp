// Term-table evaluation of the bound formulas. Every formula is a list of
// terms coeff * prod(factor^power) / prod(factor^power), where a factor is
// either a named invariant of G or an affine expression a*n + b*m + c.
// This path shares no arithmetic code with bounds.cpp.

#include <map>
#include <stdexcept>
#include <tuple>
#include <variant>

#include "eccaudit/bounds.hpp"

namespace eccaudit {

namespace {

enum class Sym {
  M1, M2, F, ID, M1Inv,
  IEci, Eci, M1Eci, Eci1, M1Eci1,
  Xi, FEci, M2Eci, FEci1, M2Eci1, S1, S2,
};

struct Affine {
  int n = 0;
  int m = 0;
  int c = 0;
};

struct Factor {
  std::variant<Sym, Affine> base;
  int power = 1;
};

struct Term {
  long num = 1;
  long den = 1;
  std::vector<Factor> top;
  std::vector<Factor> bottom;
};

using Formula = std::vector<Term>;
using Key = std::tuple<int, BoundKind, BoundVariant>;

Factor sym(Sym s, int power = 1) { return {s, power}; }
Factor aff(int n, int m, int c, int power = 1) { return {Affine{n, m, c}, power}; }
Factor nn(int power = 1) { return aff(1, 0, 0, power); }
Factor mm(int power = 1) { return aff(0, 1, 0, power); }

Term t(long num, std::vector<Factor> top) { return {num, 1, std::move(top), {}}; }
Term frac(long num, long den, std::vector<Factor> top) { return {num, den, std::move(top), {}}; }
Term recip(long num, long den, std::vector<Factor> bottom) {
  return {num, den, {}, std::move(bottom)};
}

const std::map<Key, Formula>& formulas() {
  using K = BoundKind;
  constexpr auto S = BoundVariant::Statement;
  constexpr auto P = BoundVariant::Proof;
  static const std::map<Key, Formula> table = {
      // +++
      {{1, K::IEci, S},
       {frac(1, 2, {sym(Sym::IEci)}), frac(1, 4, {mm()}), t(1, {sym(Sym::Xi)}),
        t(1, {sym(Sym::M1Inv)})}},
      {{1, K::IEci, P},
       {frac(1, 2, {sym(Sym::IEci)}), frac(1, 2, {sym(Sym::ID)}), t(1, {sym(Sym::Xi)}),
        t(1, {sym(Sym::M1Inv)})}},
      {{1, K::M1Eci, S},
       {t(4, {sym(Sym::M1Eci)}), t(1, {sym(Sym::F)}), t(2, {sym(Sym::M2)}),
        t(4, {sym(Sym::M1)}), t(1, {sym(Sym::FEci)}), t(2, {sym(Sym::M2Eci)})}},
      {{1, K::Eci1, S},
       {t(2, {sym(Sym::Eci1)}), t(4, {sym(Sym::Eci)}), t(1, {sym(Sym::M1)}), t(4, {mm()}),
        t(1, {sym(Sym::S2)}), t(2, {sym(Sym::S1)})}},
      {{1, K::M1Eci1, S},
       {t(4, {sym(Sym::M1Eci1)}), t(4, {sym(Sym::M1)}), t(8, {sym(Sym::M1Eci)}),
        t(1, {sym(Sym::F)}), t(2, {sym(Sym::M2)}), t(1, {sym(Sym::FEci1)}),
        t(2, {sym(Sym::M2Eci1)}), t(2, {sym(Sym::FEci)}), t(4, {sym(Sym::M2Eci)})}},

      // ---
      {{2, K::IEci, S},
       {recip(1, 3, {aff(1, 1, -1), nn()}), recip(1, 3, {aff(1, 1, -1), mm()}),
        recip(-1, 12, {mm()}), frac(-1, 3, {sym(Sym::M1Inv)})}},
      {{2, K::M1Eci, S},
       {t(3, {sym(Sym::F)}), t(6, {sym(Sym::M2)}), t(-6, {aff(1, 1, -3), sym(Sym::M1)}),
        t(3, {aff(1, 1, 0), aff(1, 1, -1, 2)}), t(-24, {mm(), aff(1, 1, -1)})}},
      {{2, K::Eci1, S},
       {t(9, {nn(), aff(1, 1, -1)}), t(9, {mm(), aff(1, 1, 0)}), t(-36, {mm()}),
        t(-9, {sym(Sym::M1)})}},
      {{2, K::Eci1, P},
       {t(9, {nn(), aff(1, 1, -1)}), t(9, {mm(), aff(1, 1, -1)}), t(-36, {mm()}),
        t(-9, {sym(Sym::M1)})}},
      {{2, K::M1Eci1, S},
       {t(9, {sym(Sym::F)}), t(18, {sym(Sym::M2)}), t(-18, {aff(1, 1, -3), sym(Sym::M1)}),
        t(9, {aff(1, 1, 0), aff(1, 1, -1, 2)}), t(-36, {mm(), aff(1, 1, -1)})}},

      // ++-
      {{3, K::IEci, S},
       {recip(1, 4, {mm(), nn()}), recip(1, 4, {mm(), aff(1, 0, -4)}),
        frac(1, 4, {sym(Sym::M1Inv)})}},
      {{3, K::M1Eci, S},
       {t(4, {sym(Sym::F)}), t(8, {sym(Sym::M2)}), t(8, {aff(1, 0, -4), sym(Sym::M1)}),
        t(4, {nn(), mm(2)}), t(4, {mm(), aff(1, 0, -4, 2)})}},
      {{3, K::Eci1, S},
       {t(16, {sym(Sym::M1)}), t(16, {mm(), aff(1, 0, -4)}), t(16, {mm(), nn()})}},
      {{3, K::M1Eci1, S},
       {t(16, {sym(Sym::F)}), t(32, {sym(Sym::M2)}), t(16, {mm(2), nn()}),
        t(16, {mm(), aff(1, 0, -4)})}},

      // --+
      {{4, K::IEci, S},
       {recip(1, 3, {nn(), aff(1, 0, 1)}), recip(-1, 6, {mm()}),
        recip(1, 3, {mm(), aff(0, 1, 3)}), frac(-1, 3, {sym(Sym::M1Inv)})}},
      {{4, K::M1Eci, S},
       {t(3, {sym(Sym::F)}), t(6, {sym(Sym::M2)}), t(-1, {aff(0, 6, 15), sym(Sym::M1)}),
        t(3, {nn(), aff(1, 0, 1, 2)}), t(-12, {mm(), aff(1, 0, 1)}),
        t(3, {mm(), aff(0, 1, 3, 2)})}},
      {{4, K::Eci1, S},
       {t(9, {nn(), aff(1, 0, 1)}), t(9, {mm(), aff(0, 1, 3)}), t(-18, {mm()}),
        t(-9, {sym(Sym::M1)})}},
      {{4, K::M1Eci1, S},
       {t(9, {sym(Sym::F)}), t(18, {sym(Sym::M2)}), t(-1, {aff(0, 18, 45), sym(Sym::M1)}),
        t(9, {nn(), aff(1, 0, 1, 2)}), t(9, {mm(), aff(0, 1, 3, 2)}),
        t(-36, {mm(), aff(1, 0, 1)})}},

      // +-+
      {{5, K::IEci, S},
       {recip(1, 12, {mm()}), recip(1, 3, {mm(), aff(0, 1, 3)}),
        frac(-1, 3, {sym(Sym::M1Inv)})}},
      {{5, K::M1Eci, S},
       {t(3, {sym(Sym::F)}), t(6, {sym(Sym::M2)}), t(-6, {aff(0, 1, -3), sym(Sym::M1)}),
        t(3, {mm(), aff(0, 1, 3, 2)})}},
      {{5, K::Eci1, S}, {t(36, {mm()}), t(9, {mm(), aff(0, 1, 3)}), t(-9, {sym(Sym::M1)})}},
      {{5, K::M1Eci1, S},
       {t(9, {sym(Sym::F)}), t(18, {sym(Sym::M2)}), t(-18, {aff(0, 1, -1), sym(Sym::M1)}),
        t(9, {mm(), aff(0, 1, 3, 2)})}},

      // -+-
      {{6, K::IEci, S},
       {recip(1, 3, {nn(), aff(1, 1, -1)}), recip(1, 3, {mm(), aff(1, 0, -4)}),
        recip(-1, 12, {mm()}), frac(1, 3, {sym(Sym::M1Inv)})}},
      {{6, K::M1Eci, S},
       {t(3, {sym(Sym::F)}), t(6, {sym(Sym::M2)}), t(6, {aff(1, 0, 2), sym(Sym::M1)}),
        t(3, {nn(), aff(1, 1, -1, 2)}), t(3, {mm(), aff(1, 0, -4, 2)}),
        t(-24, {aff(1, 1, -1)})}},
      {{6, K::Eci1, S},
       {t(9, {sym(Sym::M1)}), t(9, {nn(), aff(1, 1, 0)}), t(9, {mm(), aff(1, 0, -4)}),
        t(-36, {mm()})}},
      {{6, K::Eci1, P},
       {t(9, {sym(Sym::M1)}), t(9, {nn(), aff(1, 1, -1)}), t(9, {mm(), aff(1, 0, -4)}),
        t(-36, {mm()})}},
      {{6, K::M1Eci1, S},
       {t(9, {sym(Sym::F)}), t(18, {sym(Sym::M2)}), t(18, {aff(1, 0, -3), sym(Sym::M1)}),
        t(9, {nn(), aff(1, 1, -1, 2)}), t(9, {mm(), aff(1, 0, -4, 2)}),
        t(-36, {mm(), aff(1, 1, -1)})}},

      // -++
      {{7, K::IEci, S}, {recip(1, 3, {nn(), aff(1, 0, -1)}), frac(1, 3, {sym(Sym::M1Inv)})}},
      {{7, K::M1Eci, S},
       {t(3, {sym(Sym::F)}), t(6, {sym(Sym::M2)}), t(3, {nn(), aff(1, 0, -1, 2)})}},
      {{7, K::Eci1, S}, {t(9, {sym(Sym::M1)}), t(9, {nn(), aff(1, 0, -1)})}},
      {{7, K::M1Eci1, S},
       {t(9, {sym(Sym::F)}), t(18, {sym(Sym::M2)}), t(9, {nn(), aff(1, 0, -1, 2)})}},

      // +--
      {{8, K::IEci, S},
       {recip(1, 4, {mm(), nn()}), recip(1, 4, {mm(), aff(1, 1, -1)}),
        frac(-1, 4, {sym(Sym::M1Inv)})}},
      {{8, K::M1Eci, S},
       {t(4, {sym(Sym::F)}), t(8, {sym(Sym::M2)}), t(-8, {aff(1, 1, -1), sym(Sym::M1)}),
        t(4, {nn(), mm(2)}), t(4, {mm(), aff(1, 1, -1, 2)})}},
      {{8, K::Eci1, S},
       {t(16, {mm(), nn()}), t(16, {mm(), aff(1, 1, -1)}), t(-16, {sym(Sym::M1)})}},
      {{8, K::M1Eci1, S},
       {t(16, {sym(Sym::F)}), t(32, {sym(Sym::M2)}), t(-32, {aff(1, 1, -1), sym(Sym::M1)}),
        t(16, {mm(2), nn()}), t(16, {mm(), aff(1, 1, -1, 2)})}},
  };
  return table;
}

struct Env {
  const DegreeInvariants& d;
  const std::optional<EccInvariants>& e;
  const std::optional<EdgeEccInvariants>& ee;

  std::optional<Rational> lookup(Sym s) const {
    switch (s) {
      case Sym::M1: return Rational(d.m1);
      case Sym::M2: return Rational(d.m2);
      case Sym::F: return Rational(d.forgotten);
      case Sym::ID: return d.inverse_degree;
      case Sym::M1Inv: return d.m1_inverse;
      default: break;
    }
    if (!e || !ee) return std::nullopt;
    switch (s) {
      case Sym::IEci: return e->i_eci;
      case Sym::Eci: return Rational(e->eci);
      case Sym::M1Eci: return Rational(e->m1_eci);
      case Sym::Eci1: return Rational(e->eci1);
      case Sym::M1Eci1: return Rational(e->m1_eci1);
      case Sym::Xi: return ee->xi_inverse;
      case Sym::FEci: return Rational(ee->f_eci);
      case Sym::M2Eci: return Rational(ee->m2_eci);
      case Sym::FEci1: return Rational(ee->f_eci1);
      case Sym::M2Eci1: return Rational(ee->m2_eci1);
      case Sym::S1: return Rational(ee->edge_sum);
      case Sym::S2: return Rational(ee->edge_sum_sq);
      default: return std::nullopt;
    }
  }

  std::optional<Rational> value(const Factor& f) const {
    std::optional<Rational> base;
    if (const auto* a = std::get_if<Affine>(&f.base)) {
      base = Rational(a->n) * Rational(d.n) + Rational(a->m) * Rational(d.m) + Rational(a->c);
    } else {
      base = lookup(std::get<Sym>(f.base));
    }
    if (!base) return std::nullopt;
    Rational out = 1;
    for (int i = 0; i < f.power; ++i) out *= *base;
    return out;
  }
};

}  // namespace

BoundValue bound_value_by_terms(SignPattern p, BoundKind k, BoundVariant v,
                                const DegreeInvariants& d,
                                const std::optional<EccInvariants>& e,
                                const std::optional<EdgeEccInvariants>& ee) {
  const auto& table = formulas();
  const auto it = table.find({p.theorem(), k, v});
  if (it == table.end()) {
    throw std::invalid_argument("no term table for " + p.to_string() + " " +
                                std::string(to_string(k)) + " " + std::string(to_string(v)));
  }
  const Env env{d, e, ee};
  Rational sum = 0;
  bool inapplicable = false;
  std::string why;
  for (const Term& term : it->second) {
    Rational top = Rational(term.num, term.den);
    for (const Factor& f : term.top) {
      const auto x = env.value(f);
      if (!x) return BoundValue::undefined("required invariant of G is undefined");
      top *= *x;
    }
    Rational bottom = 1;
    for (const Factor& f : term.bottom) {
      const auto x = env.value(f);
      if (!x) return BoundValue::undefined("required invariant of G is undefined");
      bottom *= *x;
    }
    if (bottom <= 0) {
      if (!inapplicable) why = bottom == 0 ? "division by zero" : "outside formula domain";
      inapplicable = true;
      continue;
    }
    sum += top / bottom;
  }
  if (inapplicable) return BoundValue::inapplicable(why);
  return BoundValue::of(sum);
}

}  // namespace eccaudit
