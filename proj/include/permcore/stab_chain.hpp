#pragma once

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "permcore/perm.hpp"

namespace permcore {

/// Base points plus strong generators and explicit transversals. Orders are
/// exact; membership and uniform random elements come for free once built.
class StabChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;          // strong generators fixing earlier base points
    std::vector<Point> orbit;        // BFS order, orbit[0] == base_point
    std::vector<Perm> reps;          // reps[i] maps base_point -> orbit[i]
    std::vector<std::int64_t> pos;   // point -> index into orbit, or -1
  };

  /// Deterministic Schreier-Sims. New base points are always the smallest
  /// point moved by the offending residue; base_hint points (if any) are
  /// installed first, in the order given.
  static StabChain build(Point degree, std::vector<Perm> gens,
                         const std::vector<Point>& base_hint = {});

  Point degree() const { return degree_; }
  u64 order() const { return order_; }
  size_t length() const { return levels_.size(); }
  const Level& level(size_t i) const { return levels_[i]; }
  const std::vector<Level>& levels() const { return levels_; }

  bool contains(const Perm& g) const;

  /// Strips g through levels starting at `from`; returns the residue.
  Perm sift(const Perm& g, size_t from = 0) const;

  /// Generators of the pointwise stabilizer of the first k base points
  /// (strong generators of level k). Useful with a base_hint prefix.
  std::vector<Perm> stabilizer_gens(size_t k) const;

  /// Uniformly random element: product of one uniformly random transversal
  /// representative per level.
  Perm random_element(std::mt19937_64& rng) const;

  /// Deterministic enumeration of all elements. The visitor returns false to
  /// stop early. Level-0 transversal varies fastest.
  void for_each_element(const std::function<bool(const Perm&)>& visit) const;

 private:
  Point degree_ = 0;
  u64 order_ = 1;
  std::vector<Level> levels_;

  void recompute_orbit(size_t i);
  // Returns the level at which g got stuck (levels_.size() if it sifted
  // through cleanly), along with the residue.
  std::pair<Perm, size_t> strip(const Perm& g, size_t from) const;
};

/// Brute-force closure of a generating set, stopping once `cap` elements are
/// exceeded (returns empty vector in that case). Test oracle and small-group
/// workhorse.
std::vector<Perm> closure(Point degree, const std::vector<Perm>& gens, size_t cap);

}  // namespace permcore
