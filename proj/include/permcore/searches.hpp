#pragma once

#include "permcore/group.hpp"

namespace permcore {

/// Setwise stabilizer of a point set, by depth-first search over a stabilizer
/// chain whose base starts inside the set. Exact.
Subgroup set_stabilizer(const GroupRef& g, const std::vector<Point>& set);

/// Pointwise stabilizer of a point list (chain with the points as base
/// prefix).
Subgroup point_stabilizer(const GroupRef& g, const std::vector<Point>& pts);

/// N_G(H) by orbit-stabilizer on the conjugates of H. Requires H's elements
/// to be enumerable within caps.element_enumeration and the conjugation orbit
/// to fit caps.conjugate_orbit; refusal carries the partial orbit size.
/// Asserts |G| == |orbit| * |N| before returning.
Subgroup normalizer(const GroupRef& g, const Subgroup& h, const Caps& caps = {});

/// Sylow p-subgroup via normalizer climb: seed with a p-element, then extend
/// with p-elements of N_G(P)/P until the full p-part is reached. Returns the
/// trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const GroupRef& g, u64 p, const Caps& caps = {});

/// Order of the intersection of two subgroups of a common ambient group,
/// by iterating the smaller one's elements against the other's membership
/// test. Throws CapExceeded when the smaller subgroup exceeds `cap`.
u64 intersection_order(const Subgroup& a, const Subgroup& b, u64 cap = 100'000);

/// First element found, in deterministic enumeration order, whose order is
/// divisible by p, powered up to a p-element of maximal p-power order.
/// Falls back to seeded random elements if an initial scan window finds
/// nothing. Requires p | |G|.
Perm first_p_element(const PermGroup& g, u64 p);

}  // namespace permcore
