#include "eccaudit/bounds.hpp"

#include <stdexcept>

namespace eccaudit {

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::IEci: return "I_ECI";
    case BoundKind::M1Eci: return "M1_ECI";
    case BoundKind::Eci1: return "ECI1";
    case BoundKind::M1Eci1: return "M1_ECI1";
  }
  return "?";
}

std::string_view to_string(BoundVariant v) {
  return v == BoundVariant::Statement ? "statement" : "proof";
}

BoundKind parse_bound_kind(std::string_view text) {
  for (BoundKind k : kAllKinds) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown bound kind '" + std::string(text) +
                              "' (expected I_ECI, M1_ECI, ECI1 or M1_ECI1)");
}

BoundVariant parse_bound_variant(std::string_view text) {
  for (BoundVariant v : kAllVariants) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown bound variant '" + std::string(text) +
                              "' (expected statement or proof)");
}

std::string BoundValue::to_string() const {
  switch (status) {
    case Status::Value: return eccaudit::to_string(value);
    case Status::Inapplicable: return "inapplicable";
    case Status::Undefined: return "undef";
  }
  return "undef";
}

std::string BoundInfo::id() const {
  return "T" + std::to_string(theorem()) + "." + std::string(to_string(kind)) + "." +
         std::string(to_string(variant));
}

const std::vector<BoundInfo>& list_bounds() {
  static const std::vector<BoundInfo> table = [] {
    using K = BoundKind;
    using V = BoundVariant;
    auto P = [](std::string_view s) { return SignPattern::parse(s); };
    std::vector<BoundInfo> t = {
        {P("+++"), K::IEci, V::Statement, "I_ECI(G)/2 + m/4 + xi^-1(G) + M1^-1(G)"},
        {P("+++"), K::IEci, V::Proof, "I_ECI(G)/2 + ID(G)/2 + xi^-1(G) + M1^-1(G)"},
        {P("+++"), K::M1Eci, V::Statement,
         "4 M1_ECI(G) + F(G) + 2 M2(G) + 4 M1(G) + F_ECI(G) + 2 M2_ECI(G)"},
        {P("+++"), K::Eci1, V::Statement,
         "2 ECI1(G) + 4 ECI(G) + M1(G) + 4m + S2(G) + 2 S1(G)"},
        {P("+++"), K::M1Eci1, V::Statement,
         "4 M1_ECI1(G) + 4 M1(G) + 8 M1_ECI(G) + F(G) + 2 M2(G) + F_ECI1(G) + 2 M2_ECI1(G)"
         " + 2 F_ECI(G) + 4 M2_ECI(G)"},

        {P("++-"), K::IEci, V::Statement, "1/(4mn) + 1/(4m(n-4)) + M1^-1(G)/4"},
        {P("++-"), K::M1Eci, V::Statement,
         "4F(G) + 8M2(G) + 8(n-4)M1(G) + 4nm^2 + 4m(n-4)^2"},
        {P("++-"), K::Eci1, V::Statement, "16M1(G) + 16m(n-4) + 16mn"},
        {P("++-"), K::M1Eci1, V::Statement, "16F(G) + 32M2(G) + 16m^2 n + 16m(n-4)"},

        {P("+-+"), K::IEci, V::Statement, "1/(12m) + 1/(3m(m+3)) - M1^-1(G)/3"},
        {P("+-+"), K::M1Eci, V::Statement, "3F(G) + 6M2(G) - 6(m-3)M1(G) + 3m(m+3)^2"},
        {P("+-+"), K::Eci1, V::Statement, "36m + 9m(m+3) - 9M1(G)"},
        {P("+-+"), K::M1Eci1, V::Statement, "9F(G) + 18M2(G) - 18(m-1)M1(G) + 9m(m+3)^2"},

        {P("+--"), K::IEci, V::Statement, "1/(4mn) + 1/(4m(m+n-1)) - M1^-1(G)/4"},
        {P("+--"), K::M1Eci, V::Statement,
         "4F(G) + 8M2(G) - 8(m+n-1)M1(G) + 4nm^2 + 4m(m+n-1)^2"},
        {P("+--"), K::Eci1, V::Statement, "16mn + 16m(m+n-1) - 16M1(G)"},
        {P("+--"), K::M1Eci1, V::Statement,
         "16F(G) + 32M2(G) - 32(m+n-1)M1(G) + 16m^2 n + 16m(m+n-1)^2"},

        {P("-++"), K::IEci, V::Statement, "1/(3n(n-1)) + M1^-1(G)/3"},
        {P("-++"), K::M1Eci, V::Statement, "3F(G) + 6M2(G) + 3n(n-1)^2"},
        {P("-++"), K::Eci1, V::Statement, "9M1(G) + 9n(n-1)"},
        {P("-++"), K::M1Eci1, V::Statement, "9F(G) + 18M2(G) + 9n(n-1)^2"},

        {P("-+-"), K::IEci, V::Statement,
         "1/(3n(m+n-1)) + 1/(3m(n-4)) - 1/(12m) + M1^-1(G)/3"},
        {P("-+-"), K::M1Eci, V::Statement,
         "3F(G) + 6M2(G) + 6(n+2)M1(G) + 3n(m+n-1)^2 + 3m(n-4)^2 - 24(m+n-1)"},
        {P("-+-"), K::Eci1, V::Statement, "9M1(G) + 9n(m+n) + 9m(n-4) - 36m"},
        {P("-+-"), K::Eci1, V::Proof, "9M1(G) + 9n(m+n-1) + 9m(n-4) - 36m"},
        {P("-+-"), K::M1Eci1, V::Statement,
         "9F(G) + 18M2(G) + 18(n-3)M1(G) + 9n(m+n-1)^2 + 9m(n-4)^2 - 36m(m+n-1)"},

        {P("--+"), K::IEci, V::Statement,
         "1/(3n(n+1)) - 1/(6m) + 1/(3m(m+3)) - M1^-1(G)/3"},
        {P("--+"), K::M1Eci, V::Statement,
         "3F(G) + 6M2(G) - (6m+15)M1(G) + 3n(n+1)^2 - 12m(n+1) + 3m(m+3)^2"},
        {P("--+"), K::Eci1, V::Statement, "9n(n+1) + 9m(m+3) - 18m - 9M1(G)"},
        {P("--+"), K::M1Eci1, V::Statement,
         "9F(G) + 18M2(G) - (18m+45)M1(G) + 9n(n+1)^2 + 9m(m+3)^2 - 36m(n+1)"},

        {P("---"), K::IEci, V::Statement,
         "1/(3(m+n-1)n) + 1/(3(m+n-1)m) - 1/(12m) - M1^-1(G)/3"},
        {P("---"), K::M1Eci, V::Statement,
         "3F(G) + 6M2(G) - 6(m+n-3)M1(G) + 3(m+n)(m+n-1)^2 - 24m(m+n-1)"},
        {P("---"), K::Eci1, V::Statement, "9n(m+n-1) + 9m(m+n) - 36m - 9M1(G)"},
        {P("---"), K::Eci1, V::Proof, "9n(m+n-1) + 9m(m+n-1) - 36m - 9M1(G)"},
        {P("---"), K::M1Eci1, V::Statement,
         "9F(G) + 18M2(G) - 18(m+n-3)M1(G) + 9(m+n)(m+n-1)^2 - 36m(m+n-1)"},
    };
    return t;
  }();
  return table;
}

bool has_variant(SignPattern p, BoundKind k, BoundVariant v) {
  if (v == BoundVariant::Statement) return true;
  const int t = p.theorem();
  return (t == 1 && k == BoundKind::IEci) || (t == 2 && k == BoundKind::Eci1) ||
         (t == 6 && k == BoundKind::Eci1);
}

namespace {

// Collects reciprocal terms and remembers the first domain failure.
class Reciprocals {
 public:
  Rational operator()(const Rational& x, std::string_view label) {
    if (x <= 0 && !failure_) {
      failure_ = std::string(x == 0 ? "division by zero" : "outside formula domain") +
                 " in " + std::string(label);
    }
    return x > 0 ? Rational(1 / x) : Rational(0);
  }
  const std::optional<std::string>& failure() const { return failure_; }

 private:
  std::optional<std::string> failure_;
};

Rational sq(const Rational& x) { return x * x; }

BoundValue total_graph_bound(BoundKind k, BoundVariant v, const DegreeInvariants& d,
                             const std::optional<EccInvariants>& e,
                             const std::optional<EdgeEccInvariants>& ee) {
  if (!e || !ee) return BoundValue::undefined("eccentric invariants of G are undefined");
  const Rational m(d.m);
  const Rational M1(d.m1), M2(d.m2), F(d.forgotten);
  switch (k) {
    case BoundKind::IEci: {
      if (!e->i_eci) return BoundValue::undefined("I_ECI(G) is undefined");
      const Rational common = *e->i_eci / 2 + ee->xi_inverse + d.m1_inverse;
      if (v == BoundVariant::Statement) return BoundValue::of(common + m / 4);
      if (!d.inverse_degree) return BoundValue::undefined("ID(G) is undefined");
      return BoundValue::of(common + *d.inverse_degree / 2);
    }
    case BoundKind::M1Eci:
      return BoundValue::of(4 * Rational(e->m1_eci) + F + 2 * M2 + 4 * M1 +
                            Rational(ee->f_eci) + 2 * Rational(ee->m2_eci));
    case BoundKind::Eci1:
      return BoundValue::of(2 * Rational(e->eci1) + 4 * Rational(e->eci) + M1 + 4 * m +
                            Rational(ee->edge_sum_sq) + 2 * Rational(ee->edge_sum));
    case BoundKind::M1Eci1:
      return BoundValue::of(4 * Rational(e->m1_eci1) + 4 * M1 + 8 * Rational(e->m1_eci) + F +
                            2 * M2 + Rational(ee->f_eci1) + 2 * Rational(ee->m2_eci1) +
                            2 * Rational(ee->f_eci) + 4 * Rational(ee->m2_eci));
  }
  return BoundValue::undefined("unknown kind");
}

}  // namespace

BoundValue bound_value(SignPattern p, BoundKind k, BoundVariant v, const DegreeInvariants& d,
                       const std::optional<EccInvariants>& e,
                       const std::optional<EdgeEccInvariants>& ee) {
  if (!has_variant(p, k, v)) {
    throw std::invalid_argument("no " + std::string(to_string(v)) + " variant for pattern " +
                                p.to_string() + " kind " + std::string(to_string(k)));
  }
  const int theorem = p.theorem();
  if (theorem == 1) return total_graph_bound(k, v, d, e, ee);

  const Rational n(d.n), m(d.m);
  const Rational M1(d.m1), M2(d.m2), F(d.forgotten), Minv(d.m1_inverse);
  const Rational N1 = m + n - 1;  // the order of the transform minus one
  const bool proof = v == BoundVariant::Proof;
  Reciprocals inv;
  Rational r;

  switch (theorem) {
    case 2:
      switch (k) {
        case BoundKind::IEci:
          r = inv(3 * N1 * n, "1/(3(m+n-1)n)") + inv(3 * N1 * m, "1/(3(m+n-1)m)") -
              inv(12 * m, "1/(12m)") - Minv / 3;
          break;
        case BoundKind::M1Eci:
          r = 3 * F + 6 * M2 - 6 * (m + n - 3) * M1 + 3 * (m + n) * sq(N1) - 24 * m * N1;
          break;
        case BoundKind::Eci1:
          r = 9 * n * N1 + 9 * m * (proof ? N1 : Rational(m + n)) - 36 * m - 9 * M1;
          break;
        case BoundKind::M1Eci1:
          r = 9 * F + 18 * M2 - 18 * (m + n - 3) * M1 + 9 * (m + n) * sq(N1) - 36 * m * N1;
          break;
      }
      break;
    case 3:
      switch (k) {
        case BoundKind::IEci:
          r = inv(4 * m * n, "1/(4mn)") + inv(4 * m * (n - 4), "1/(4m(n-4))") + Minv / 4;
          break;
        case BoundKind::M1Eci:
          r = 4 * F + 8 * M2 + 8 * (n - 4) * M1 + 4 * n * sq(m) + 4 * m * sq(n - 4);
          break;
        case BoundKind::Eci1:
          r = 16 * M1 + 16 * m * (n - 4) + 16 * m * n;
          break;
        case BoundKind::M1Eci1:
          r = 16 * F + 32 * M2 + 16 * sq(m) * n + 16 * m * (n - 4);
          break;
      }
      break;
    case 4:
      switch (k) {
        case BoundKind::IEci:
          r = inv(3 * n * (n + 1), "1/(3n(n+1))") - inv(6 * m, "1/(6m)") +
              inv(3 * m * (m + 3), "1/(3m(m+3))") - Minv / 3;
          break;
        case BoundKind::M1Eci:
          r = 3 * F + 6 * M2 - (6 * m + 15) * M1 + 3 * n * sq(n + 1) - 12 * m * (n + 1) +
              3 * m * sq(m + 3);
          break;
        case BoundKind::Eci1:
          r = 9 * n * (n + 1) + 9 * m * (m + 3) - 18 * m - 9 * M1;
          break;
        case BoundKind::M1Eci1:
          r = 9 * F + 18 * M2 - (18 * m + 45) * M1 + 9 * n * sq(n + 1) + 9 * m * sq(m + 3) -
              36 * m * (n + 1);
          break;
      }
      break;
    case 5:
      switch (k) {
        case BoundKind::IEci:
          r = inv(12 * m, "1/(12m)") + inv(3 * m * (m + 3), "1/(3m(m+3))") - Minv / 3;
          break;
        case BoundKind::M1Eci:
          r = 3 * F + 6 * M2 - 6 * (m - 3) * M1 + 3 * m * sq(m + 3);
          break;
        case BoundKind::Eci1:
          r = 36 * m + 9 * m * (m + 3) - 9 * M1;
          break;
        case BoundKind::M1Eci1:
          r = 9 * F + 18 * M2 - 18 * (m - 1) * M1 + 9 * m * sq(m + 3);
          break;
      }
      break;
    case 6:
      switch (k) {
        case BoundKind::IEci:
          r = inv(3 * n * N1, "1/(3n(m+n-1))") + inv(3 * m * (n - 4), "1/(3m(n-4))") -
              inv(12 * m, "1/(12m)") + Minv / 3;
          break;
        case BoundKind::M1Eci:
          r = 3 * F + 6 * M2 + 6 * (n + 2) * M1 + 3 * n * sq(N1) + 3 * m * sq(n - 4) -
              24 * N1;
          break;
        case BoundKind::Eci1:
          r = 9 * M1 + 9 * n * (proof ? N1 : Rational(m + n)) + 9 * m * (n - 4) - 36 * m;
          break;
        case BoundKind::M1Eci1:
          r = 9 * F + 18 * M2 + 18 * (n - 3) * M1 + 9 * n * sq(N1) + 9 * m * sq(n - 4) -
              36 * m * N1;
          break;
      }
      break;
    case 7:
      switch (k) {
        case BoundKind::IEci:
          r = inv(3 * n * (n - 1), "1/(3n(n-1))") + Minv / 3;
          break;
        case BoundKind::M1Eci:
          r = 3 * F + 6 * M2 + 3 * n * sq(n - 1);
          break;
        case BoundKind::Eci1:
          r = 9 * M1 + 9 * n * (n - 1);
          break;
        case BoundKind::M1Eci1:
          r = 9 * F + 18 * M2 + 9 * n * sq(n - 1);
          break;
      }
      break;
    default:  // 8
      switch (k) {
        case BoundKind::IEci:
          r = inv(4 * m * n, "1/(4mn)") + inv(4 * m * N1, "1/(4m(m+n-1))") - Minv / 4;
          break;
        case BoundKind::M1Eci:
          r = 4 * F + 8 * M2 - 8 * N1 * M1 + 4 * n * sq(m) + 4 * m * sq(N1);
          break;
        case BoundKind::Eci1:
          r = 16 * m * n + 16 * m * N1 - 16 * M1;
          break;
        case BoundKind::M1Eci1:
          r = 16 * F + 32 * M2 - 32 * N1 * M1 + 16 * sq(m) * n + 16 * m * sq(N1);
          break;
      }
      break;
  }
  if (inv.failure()) return BoundValue::inapplicable(*inv.failure());
  return BoundValue::of(r);
}

}  // namespace eccaudit
