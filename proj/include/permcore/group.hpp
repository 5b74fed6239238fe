#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "permcore/stab_chain.hpp"

namespace permcore {

struct Caps {
  u64 coset_degree = 1'000'000;        // largest coset action we will realize
  u64 conjugate_orbit = 2'000'000;     // largest subgroup-conjugation orbit
  u64 element_enumeration = 2'000'000; // largest subgroup we fully enumerate
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator list plus degree, with a lazily built stabilizer chain. Once the
/// chain is attached the handle is immutable; queries are safe from
/// concurrent threads.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(Point degree, std::vector<Perm> gens, std::string label = {});
  PermGroup(const PermGroup& other);
  PermGroup& operator=(const PermGroup& other);
  PermGroup(PermGroup&&) noexcept = default;
  PermGroup& operator=(PermGroup&&) noexcept = default;

  Point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& label() const { return label_; }

  const StabChain& chain() const;  // built on first use
  u64 order() const { return chain().order(); }
  bool contains(const Perm& g) const { return chain().contains(g); }

  /// Optional base order to use when the chain is first built.
  void set_base_hint(std::vector<Point> hint);

  /// Deterministic element enumeration (via the chain).
  void for_each_element(const std::function<bool(const Perm&)>& visit) const {
    chain().for_each_element(visit);
  }
  std::vector<Perm> elements(size_t cap) const;  // throws CapExceeded past cap

  Perm random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

 private:
  Point degree_ = 0;
  std::vector<Perm> gens_;
  std::string label_;
  std::vector<Point> base_hint_;
  mutable std::shared_ptr<const StabChain> chain_;
  mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

using GroupRef = std::shared_ptr<const PermGroup>;

/// A subgroup given by generators living in an ambient group's symmetric
/// group. Construction checks each generator against the ambient membership
/// oracle.
struct Subgroup {
  GroupRef ambient;
  PermGroup group;

  Subgroup() = default;
  Subgroup(GroupRef amb, std::vector<Perm> gens, std::string label = {});
  u64 order() const { return group.order(); }
};

GroupRef make_group(Point degree, std::vector<Perm> gens, std::string label = {});

/// G-orbit of a point, in BFS order, with optional coset representatives
/// (words expressed as permutations: rep[i] maps p to orbit[i]).
std::vector<Point> orbit_of(const PermGroup& g, Point p);
std::vector<std::pair<Point, Perm>> orbit_with_reps(const PermGroup& g, Point p);

/// All orbits of a generator set on {0..degree-1}, each sorted, ordered by
/// smallest element.
std::vector<std::vector<Point>> all_orbits(Point degree, const std::vector<Perm>& gens);

struct CosetAction {
  PermGroup image;   // the induced action on right cosets
  u64 kernel_order;  // order of the core of the subgroup
  std::vector<Perm> coset_reps;  // canonical representatives, image-point order
};

/// Faithful-or-not permutation representation of g on the right cosets of h.
/// Refuses loudly (CapExceeded) when the index exceeds caps.coset_degree.
CosetAction coset_action(const PermGroup& g, const Subgroup& h, const Caps& caps = {});

/// Canonical representative of the right coset (chain of h) * g.
Perm canonical_coset_rep(const StabChain& h_chain, const Perm& g);

struct BlockResult {
  bool primitive = false;
  std::vector<Point> minimal_block;  // some nontrivial block when imprimitive
};

/// Minimal-block test for a transitive group; throws std::invalid_argument on
/// intransitive input.
BlockResult primitivity(const PermGroup& g);

}  // namespace permcore
