#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bnloci/arith.hpp"
#include "bnloci/regions.hpp"

namespace bnloci {

enum class CurveClass { Arbitrary, GenericCurve, Hyperelliptic, NonHyperelliptic };
enum class Verdict { WholeSpace, NonEmpty, Empty, Unknown };

std::string to_string(CurveClass c);
std::string to_string(Verdict v);
std::string to_string(Stability s);
CurveClass parse_curve_class(const std::string& text);

struct Evidence {
  std::string rule;
  std::vector<std::pair<std::string, Rat>> params;
  std::string citation;
};

struct Classification {
  std::int64_t genus = 0;
  Triple triple;
  Rat mu;
  Rat lambda;
  CurveClass curve = CurveClass::Arbitrary;
  Stability stability = Stability::Stable;
  Verdict verdict = Verdict::Unknown;
  std::vector<Evidence> evidence;
  Int rho;
  std::vector<std::string> annotations;
  /// Rules consulted, listed when the verdict is Unknown.
  std::vector<std::string> attempted;

  /// The rule that best explains the verdict, or "" when Unknown.
  std::string primary_rule() const;
  bool nonempty() const { return verdict == Verdict::NonEmpty || verdict == Verdict::WholeSpace; }
};

/// Raised when one rule proves emptiness and another nonemptiness.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Classification classify(Genus g, const Triple& t, CurveClass c = CurveClass::Arbitrary,
                        Stability m = Stability::Stable);

struct H0Max {
  enum class Attained { Yes, No, Unknown };
  std::int64_t bound = 0;
  Attained attained = Attained::Unknown;
  std::string note;
};
std::string to_string(H0Max::Attained a);

/// Largest k the rules allow for stable bundles of rank n and degree d.
H0Max h0_max(Genus g, std::int64_t n, std::int64_t d, CurveClass c);

std::vector<std::string> annotate_geometry(Genus g, const Triple& t);

/// Classification of (n, d + n*dprime, k), upgraded to NonEmpty when t itself
/// is nonempty, since tensoring by an effective line bundle keeps sections.
Classification shift_nonempty(Genus g, const Triple& t, std::int64_t dprime,
                              CurveClass c = CurveClass::Arbitrary, Stability m = Stability::Stable);

}  // namespace bnloci
