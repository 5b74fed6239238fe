#include "permcore/searches.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "numtheory/numtheory.hpp"

namespace permcore {

namespace {

bool in_set(const std::vector<bool>& mask, Point p) { return mask[p]; }

}  // namespace

Subgroup point_stabilizer(const GroupRef& g, const std::vector<Point>& pts) {
  for (Point p : pts)
    if (p >= g->degree()) throw std::invalid_argument("point_stabilizer: point out of range");
  PermGroup scratch(g->degree(), g->generators(), g->label());
  scratch.set_base_hint(pts);
  std::vector<Perm> gens = scratch.chain().stabilizer_gens(pts.size());
  return Subgroup(g, std::move(gens), g->label() + "_pstab");
}

Subgroup set_stabilizer(const GroupRef& g, const std::vector<Point>& set) {
  Point n = g->degree();
  std::vector<bool> mask(n, false);
  for (Point p : set) {
    if (p >= n) throw std::invalid_argument("set_stabilizer: point out of range");
    mask[p] = true;
  }

  // Chain with base points drawn from the set first: the set constraint then
  // prunes at every level.
  std::vector<Point> hint(set.begin(), set.end());
  std::sort(hint.begin(), hint.end());
  hint.erase(std::unique(hint.begin(), hint.end()), hint.end());
  PermGroup scratch(n, g->generators(), g->label());
  scratch.set_base_hint(hint);
  const StabChain& ch = scratch.chain();

  std::vector<Perm> found;  // generators of the stabilizer discovered so far
  auto known = [&](const Perm& p) {
    StabChain k = StabChain::build(n, found);
    return k.contains(p);
  };

  // K-orbit pruning at the root: skip root images lying in the orbit of an
  // already-explored image under the current stabilizer.
  std::vector<Point> explored_roots;
  auto in_explored_orbit = [&](Point c) -> bool {
    if (found.empty())
      return std::find(explored_roots.begin(), explored_roots.end(), c) != explored_roots.end();
    std::vector<bool> seen(n, false);
    std::vector<Point> stack(explored_roots.begin(), explored_roots.end());
    for (Point p : stack) seen[p] = true;
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      if (p == c) return true;
      for (const Perm& s : found) {
        Point q = s[p];
        if (!seen[q]) {
          seen[q] = true;
          stack.push_back(q);
        }
      }
    }
    return seen[c];
  };

  std::function<void(size_t, const Perm&)> dfs = [&](size_t lvl, const Perm& partial) {
    if (lvl == ch.length()) {
      // Leaf: partial has prescribed images for the whole base.
      bool ok = true;
      for (Point p = 0; p < n && ok; ++p)
        if (mask[p] != in_set(mask, partial[p])) ok = false;
      if (ok && !partial.is_identity() && !known(partial)) found.push_back(partial);
      return;
    }
    const auto& lv = ch.level(lvl);
    bool base_in = mask[lv.base_point];
    for (size_t j = 0; j < lv.orbit.size(); ++j) {
      Point c = partial[lv.orbit[j]];
      if (mask[c] != base_in) continue;
      if (lvl == 0) {
        if (in_explored_orbit(c)) continue;
      }
      dfs(lvl + 1, lv.reps[j] * partial);
      if (lvl == 0) explored_roots.push_back(c);
    }
  };
  dfs(0, Perm(n));
  return Subgroup(g, std::move(found), g->label() + "_setstab");
}

namespace {

// Canonical fingerprint of a subgroup given its full element list: an
// order-independent 128-bit hash of the image tables.
struct SubgroupKey {
  u64 a = 0, b = 0;
  bool operator==(const SubgroupKey& o) const { return a == o.a && b == o.b; }
};
struct SubgroupKeyHash {
  size_t operator()(const SubgroupKey& k) const { return k.a ^ (k.b * 0x9e3779b97f4a7c15ull); }
};

SubgroupKey key_of_elements(const std::vector<Perm>& els) {
  SubgroupKey k;
  for (const Perm& p : els) {
    u64 h1 = hash_images(p.images());
    u64 h2 = 1469598103934665603ull;
    for (Point v : p.images()) {
      h2 = (h2 + v + 1) * 1099511628211ull;
      h2 ^= h2 >> 29;
    }
    k.a += h1;
    k.b ^= h1 * 0x2545F4914F6CDD1Dull + h2;
  }
  return k;
}

SubgroupKey key_of_conjugate(const std::vector<Perm>& els, const Perm& w) {
  SubgroupKey k;
  for (const Perm& p : els) {
    Perm q = p.conjugated_by(w);
    u64 h1 = hash_images(q.images());
    u64 h2 = 1469598103934665603ull;
    for (Point v : q.images()) {
      h2 = (h2 + v + 1) * 1099511628211ull;
      h2 ^= h2 >> 29;
    }
    k.a += h1;
    k.b ^= h1 * 0x2545F4914F6CDD1Dull + h2;
  }
  return k;
}

}  // namespace

Subgroup normalizer(const GroupRef& g, const Subgroup& h, const Caps& caps) {
  std::vector<Perm> h_elements = h.group.elements(caps.element_enumeration);

  // Orbit of H under conjugation, nodes identified by element-set
  // fingerprints; each node stores only the conjugating element.
  std::vector<Perm> conjugators{Perm(g->degree())};
  std::unordered_map<SubgroupKey, size_t, SubgroupKeyHash> index;
  index.emplace(key_of_elements(h_elements), 0);

  std::vector<Perm> n_gens = h.group.generators();
  StabChain n_chain = StabChain::build(g->degree(), n_gens);
  auto note_stabilizer_element = [&](const Perm& p) {
    if (!n_chain.contains(p)) {
      n_gens.push_back(p);
      n_chain = StabChain::build(g->degree(), n_gens);
    }
  };

  for (size_t head = 0; head < conjugators.size(); ++head) {
    Perm w = conjugators[head];
    for (const Perm& s : g->generators()) {
      Perm ws = w * s;
      SubgroupKey k = key_of_conjugate(h_elements, ws);
      auto it = index.find(k);
      if (it == index.end()) {
        if (conjugators.size() >= caps.conjugate_orbit)
          throw CapExceeded("normalizer: conjugation orbit exceeds cap, partial size " +
                            std::to_string(conjugators.size()));
        index.emplace(k, conjugators.size());
        conjugators.push_back(ws);
      } else {
        // Schreier generator of the stabilizer of the node.
        note_stabilizer_element(ws * conjugators[it->second].inverse());
      }
    }
  }

  u64 orbit_size = conjugators.size();
  if (orbit_size * n_chain.order() != g->order())
    throw std::logic_error("normalizer: orbit-stabilizer mismatch");
  return Subgroup(g, std::move(n_gens), "N_" + g->label());
}

Perm first_p_element(const PermGroup& g, u64 p) {
  Perm found(g.degree());
  bool ok = false;
  size_t scanned = 0;
  constexpr size_t kScanWindow = 200'000;
  g.for_each_element([&](const Perm& e) {
    ++scanned;
    u64 o = e.order();
    if (o % p == 0) {
      found = e;
      ok = true;
      return false;
    }
    return scanned < kScanWindow;
  });
  if (!ok) {
    std::mt19937_64 rng(0x5eed1e5u);
    for (int tries = 0; tries < 1'000'000; ++tries) {
      Perm e = g.random_element(rng);
      if (e.order() % p == 0) {
        found = e;
        ok = true;
        break;
      }
    }
  }
  if (!ok) throw std::logic_error("first_p_element: no p-element found");
  u64 o = found.order();
  u64 pp = numtheory::p_part(o, p);
  return found.power(static_cast<long long>(o / pp));
}

Subgroup sylow_subgroup(const GroupRef& g, u64 p, const Caps& caps) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  u64 target = numtheory::p_part(g->order(), p);
  if (target == 1) return Subgroup(g, {}, g->label() + "_syl" + std::to_string(p));

  Perm seed = first_p_element(*g, p);
  Subgroup P(g, {seed}, g->label() + "_syl" + std::to_string(p));
  while (P.group.order() < target) {
    Subgroup N = normalizer(g, P, caps);
    const StabChain& pch = P.group.chain();
    // Scan N for an element with p dividing its order modulo P; its suitable
    // power extends P by a factor of p.
    bool extended = false;
    N.group.for_each_element([&](const Perm& y) {
      // order of yP in N/P: least k with y^k in P; it divides o(y)
      u64 oy = y.order();
      u64 m = 0;
      Perm pw(y.degree());
      auto divisors = numtheory::arith(oy).divisors();
      for (u64 d : divisors) {
        if (pch.contains(y.power(static_cast<long long>(d)))) {
          m = d;
          break;
        }
      }
      if (m == 0 || m % p != 0) return true;
      Perm ext = y.power(static_cast<long long>(m / p));
      std::vector<Perm> gens = P.group.generators();
      gens.push_back(ext);
      P = Subgroup(g, std::move(gens), P.group.label());
      extended = true;
      return false;
    });
    if (!extended)
      throw std::logic_error("sylow_subgroup: climb stalled");
  }
  if (P.group.order() != target) throw std::logic_error("sylow_subgroup: overshoot");
  return P;
}

u64 intersection_order(const Subgroup& a, const Subgroup& b, u64 cap) {
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& large = a.order() <= b.order() ? b : a;
  if (small.order() > cap) throw CapExceeded("intersection_order: smaller factor exceeds cap");
  const StabChain& lch = large.group.chain();
  u64 count = 0;
  small.group.for_each_element([&](const Perm& e) {
    if (lch.contains(e)) ++count;
    return true;
  });
  return count;
}

}  // namespace permcore
