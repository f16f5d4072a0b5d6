#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccaudit/indices.hpp"
#include "eccaudit/rational.hpp"
#include "eccaudit/transform.hpp"

namespace eccaudit {

/// Which index of the transformation graph is being bounded.
enum class BoundKind { IEci, M1Eci, Eci1, M1Eci1 };

/// Statement is the inequality as stated with each theorem. Proof is the
/// final line of the accompanying derivation, where that differs.
enum class BoundVariant { Statement, Proof };

inline constexpr std::array<BoundKind, 4> kAllKinds{BoundKind::IEci, BoundKind::M1Eci,
                                                    BoundKind::Eci1, BoundKind::M1Eci1};
inline constexpr std::array<BoundVariant, 2> kAllVariants{BoundVariant::Statement,
                                                          BoundVariant::Proof};

std::string_view to_string(BoundKind k);
std::string_view to_string(BoundVariant v);
BoundKind parse_bound_kind(std::string_view text);
BoundVariant parse_bound_variant(std::string_view text);

/// Evaluated right-hand side of one bound.
struct BoundValue {
  enum class Status { Value, Inapplicable, Undefined };
  Status status = Status::Undefined;
  Rational value;      // meaningful only for Status::Value
  std::string reason;  // why the value is missing

  static BoundValue of(Rational v) { return {Status::Value, std::move(v), {}}; }
  static BoundValue inapplicable(std::string why) { return {Status::Inapplicable, 0, std::move(why)}; }
  static BoundValue undefined(std::string why) { return {Status::Undefined, 0, std::move(why)}; }

  bool has_value() const { return status == Status::Value; }
  /// Rational text, "inapplicable" or "undef".
  std::string to_string() const;
};

struct BoundInfo {
  SignPattern pattern;
  BoundKind kind;
  BoundVariant variant;
  std::string formula;

  int theorem() const { return pattern.theorem(); }
  /// "T<theorem>.<kind>.<variant>", e.g. "T7.M1_ECI.statement".
  std::string id() const;
};

/// Every implemented (pattern, kind, variant), patterns in report order.
const std::vector<BoundInfo>& list_bounds();

bool has_variant(SignPattern p, BoundKind k, BoundVariant v);

/// Evaluates a bound from invariants of the base graph G. Eccentric inputs are
/// only consulted by the +++ bounds. A reciprocal of a non-positive quantity
/// makes the bound inapplicable; a missing required input makes it undefined.
/// Throws std::invalid_argument for a (pattern, kind, variant) that does not exist.
BoundValue bound_value(SignPattern p, BoundKind k, BoundVariant v, const DegreeInvariants& d,
                       const std::optional<EccInvariants>& e,
                       const std::optional<EdgeEccInvariants>& ee);

/// Same contract as bound_value, evaluated by interpreting a table of terms
/// instead of hand-written expressions. Used to cross-check bound_value.
BoundValue bound_value_by_terms(SignPattern p, BoundKind k, BoundVariant v,
                                const DegreeInvariants& d,
                                const std::optional<EccInvariants>& e,
                                const std::optional<EdgeEccInvariants>& ee);

}  // namespace eccaudit
