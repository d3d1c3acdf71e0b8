#include "bnloci/boundary_fn.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnloci {

bool Piece::contains(const Rat& x) const {
  const auto lo = x <=> a;
  const auto hi = x <=> b;
  const bool after_a = lo > 0 || (lo == 0 && a_closed);
  const bool before_b = hi < 0 || (hi == 0 && b_closed);
  return after_a && before_b;
}

BoundaryFn::BoundaryFn(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("boundary function needs at least one piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!(p.a < p.b)) throw std::invalid_argument("piece with empty interval");
    if (i > 0) {
      const Piece& q = pieces_[i - 1];
      if (q.b != p.a) throw std::invalid_argument("pieces do not tile the domain");
      if (q.b_closed == p.a_closed) throw std::invalid_argument("shared endpoint must belong to exactly one piece");
    }
  }
}

bool BoundaryFn::in_domain(const Rat& x) const {
  return pieces_.front().contains(x) || pieces_.back().contains(x) || (x > lo() && x < hi());
}

const Piece& BoundaryFn::piece_at(const Rat& x) const {
  // First piece whose right end is not left of x.
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Piece& p, const Rat& v) { return p.b < v; });
  if (it != pieces_.end()) {
    if (it->contains(x)) return *it;
    if (std::next(it) != pieces_.end() && std::next(it)->contains(x)) return *std::next(it);
  }
  throw std::out_of_range("abscissa " + x.str() + " outside the domain");
}

Rat BoundaryFn::operator()(const Rat& x) const { return piece_at(x).at(x); }

std::optional<Rat> BoundaryFn::try_eval(const Rat& x) const {
  if (!in_domain(x)) return std::nullopt;
  return (*this)(x);
}

Rat BoundaryFn::left_limit(const Rat& x) const {
  for (const Piece& p : pieces_) {
    if (p.a < x && x <= p.b) return p.at(x);
  }
  throw std::out_of_range("no left limit at " + x.str());
}

Rat BoundaryFn::right_limit(const Rat& x) const {
  for (const Piece& p : pieces_) {
    if (p.a <= x && x < p.b) return p.at(x);
  }
  throw std::out_of_range("no right limit at " + x.str());
}

std::vector<Rat> BoundaryFn::breakpoints() const {
  std::vector<Rat> out;
  out.reserve(pieces_.size() + 1);
  out.push_back(pieces_.front().a);
  for (const Piece& p : pieces_) out.push_back(p.b);
  return out;
}

}  // namespace bnloci
