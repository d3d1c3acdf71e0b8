#pragma once

#include <optional>
#include <vector>

#include "bnloci/rational.hpp"

namespace bnloci {

/// One linear piece over an interval from a to b. Each end is open or closed.
struct Piece {
  Rat a;
  Rat b;
  bool a_closed = false;
  bool b_closed = true;
  Rat slope;
  Rat intercept;

  bool contains(const Rat& x) const;
  Rat at(const Rat& x) const { return slope * x + intercept; }
};

/// Piecewise-linear function on an interval tiled by pieces.
///
/// Adjacent pieces share an endpoint that belongs to exactly one of them, so
/// every abscissa in the domain has a unique piece.
class BoundaryFn {
 public:
  explicit BoundaryFn(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Rat& lo() const { return pieces_.front().a; }
  const Rat& hi() const { return pieces_.back().b; }
  bool in_domain(const Rat& x) const;

  /// Throws std::out_of_range outside the domain.
  Rat operator()(const Rat& x) const;
  std::optional<Rat> try_eval(const Rat& x) const;
  const Piece& piece_at(const Rat& x) const;

  /// Left and right limits at x (x inside or on the closure of the domain).
  Rat left_limit(const Rat& x) const;
  Rat right_limit(const Rat& x) const;

  /// Every piece endpoint, sorted and deduplicated.
  std::vector<Rat> breakpoints() const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace bnloci
