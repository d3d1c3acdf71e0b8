#pragma once

#include <vector>

#include "bnloci/oracle.hpp"

namespace bnloci::detail {

enum class Outcome { WholeSpace, NonEmpty, Empty };

struct Finding {
  Outcome outcome;
  Evidence evidence;
};

struct Query {
  Genus g;
  Triple t;
  CurveClass c;
  Stability m;
  BNPoint p;
};

struct RuleSpec {
  const char* id;
  void (*fn)(const Query&, std::vector<Finding>&);
};

const std::vector<RuleSpec>& direct_rules();

/// All rules except Serre duality and monotonicity in k.
std::vector<Finding> run_direct(Genus g, const Triple& t, CurveClass c, Stability m);

bool non_hyperelliptic(Genus g, CurveClass c);

}  // namespace bnloci::detail
