#pragma once

#include "permcore/group.hpp"

namespace atlas {

using permcore::GroupRef;
using permcore::Perm;
using permcore::Point;
using permcore::u64;

/// Primitive wreath product H wr Sym(k) acting on Delta^k. A tuple
/// (d_1, ..., d_k) is encoded most significant coordinate first:
/// index = d_1 * m^(k-1) + ... + d_k, with m = degree(H).
GroupRef wreath_product_action(const GroupRef& h, unsigned k, u64 degree_cap = 1'000'000);

/// Deterministic element list of a group (chain enumeration order), with a
/// lookup oracle. Shared by the holomorph and diagonal constructions.
struct ElementTable {
  std::vector<Perm> elements;
  std::unordered_map<size_t, std::vector<Point>> index;  // hash -> candidates

  explicit ElementTable(const permcore::PermGroup& g, u64 cap = 20'000);
  Point index_of(const Perm& p) const;
  Point size() const { return static_cast<Point>(elements.size()); }
};

/// Group generated by right translations, left translations, and the given
/// automorphisms (as permutations of the element table) acting on the
/// elements of T.
GroupRef holomorph_action(const GroupRef& t, const std::vector<Perm>& aut_perms_on_elements);

/// Automorphism of T's element table induced by conjugation with a
/// normalizing permutation u of the same degree as T.
Perm conjugation_aut(const ElementTable& table, const Perm& u);

/// Automorphism induced by inversion t -> t^-1 (not itself in the holomorph
/// for nonabelian T; used by the diagonal construction).
Perm inversion_map(const ElementTable& table);

/// T x T acting on T by t -> a^-1 t b; with_outer adjoins the inversion swap
/// and the supplied automorphism permutations.
GroupRef diagonal_action(const GroupRef& t, bool with_outer,
                         const std::vector<Perm>& aut_perms_on_elements = {});

}  // namespace atlas
