#include "permcore/stab_chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace permcore {

namespace {

struct PermSetHash {
  size_t operator()(const Perm& p) const { return hash_images(p.images()); }
};

}  // namespace

void StabChain::recompute_orbit(size_t i) {
  Level& lv = levels_[i];
  lv.orbit.clear();
  lv.reps.clear();
  lv.pos.assign(degree_, -1);
  lv.orbit.push_back(lv.base_point);
  lv.reps.emplace_back(Perm(degree_));
  lv.pos[lv.base_point] = 0;
  for (size_t head = 0; head < lv.orbit.size(); ++head) {
    Point pt = lv.orbit[head];
    for (const Perm& s : lv.gens) {
      Point img = s[pt];
      if (lv.pos[img] < 0) {
        lv.pos[img] = static_cast<std::int64_t>(lv.orbit.size());
        lv.orbit.push_back(img);
        lv.reps.push_back(lv.reps[head] * s);
      }
    }
  }
}

std::pair<Perm, size_t> StabChain::strip(const Perm& g, size_t from) const {
  Perm h = g;
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Point img = h[lv.base_point];
    if (lv.pos[img] < 0) return {h, i};
    h = h * lv.reps[static_cast<size_t>(lv.pos[img])].inverse();
  }
  return {h, levels_.size()};
}

StabChain StabChain::build(Point degree, std::vector<Perm> gens,
                           const std::vector<Point>& base_hint) {
  StabChain c;
  c.degree_ = degree;

  // Drop identities and duplicates to keep orbits lean.
  {
    std::unordered_set<Perm, PermSetHash> seen;
    std::vector<Perm> cleaned;
    for (auto& g : gens) {
      if (g.degree() != degree) throw std::invalid_argument("StabChain: generator degree mismatch");
      if (g.is_identity()) continue;
      if (seen.insert(g).second) cleaned.push_back(std::move(g));
    }
    gens = std::move(cleaned);
  }

  auto add_level = [&](Point b) {
    Level lv;
    lv.base_point = b;
    c.levels_.push_back(std::move(lv));
  };
  for (Point b : base_hint) {
    if (b >= degree) throw std::invalid_argument("StabChain: base point out of range");
    add_level(b);
  }

  // Place each generator at the deepest level whose earlier base points it
  // fixes, extending the base when a generator fixes all current base points.
  auto install = [&](const Perm& g) {
    size_t lvl = 0;
    while (lvl < c.levels_.size() && g[c.levels_[lvl].base_point] == c.levels_[lvl].base_point)
      ++lvl;
    if (lvl == c.levels_.size()) add_level(g.smallest_moved());
    for (size_t j = 0; j <= lvl; ++j) c.levels_[j].gens.push_back(g);
    return lvl;
  };

  for (const Perm& g : gens) install(g);
  if (c.levels_.empty()) {
    c.order_ = 1;
    return c;  // trivial group
  }
  for (size_t j = 0; j < c.levels_.size(); ++j) c.recompute_orbit(j);

  // Deterministic Schreier-Sims: verify each level's Schreier generators sift
  // to the identity through deeper levels, installing residues where not.
  size_t i = c.levels_.size();
  while (i > 0) {
    --i;
    bool clean = true;
    Level& lv = c.levels_[i];
    for (size_t oi = 0; oi < lv.orbit.size() && clean; ++oi) {
      for (size_t si = 0; si < lv.gens.size() && clean; ++si) {
        const Perm& s = lv.gens[si];
        Point from = lv.orbit[oi];
        Point to = s[from];
        Perm schreier = lv.reps[oi] * s * lv.reps[static_cast<size_t>(lv.pos[to])].inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stuck] = c.strip(schreier, i + 1);
        if (stuck == c.levels_.size() && residue.is_identity()) continue;
        // Residue fixes base points 0..i, so it belongs at a deeper level.
        size_t lvl = install(residue);
        // The new strong generator sits in every level up to lvl; all their
        // orbits may have grown.
        for (size_t j = 0; j <= lvl; ++j) c.recompute_orbit(j);
        i = lvl + 1;  // re-verify from the deepest touched level upward
        clean = false;
      }
    }
    if (!clean) continue;  // i was reset; loop decrements back into place
  }

  c.order_ = 1;
  for (const Level& lv : c.levels_) {
    u64 sz = lv.orbit.size();
    if (c.order_ > UINT64_MAX / sz) throw std::overflow_error("StabChain: order exceeds 64 bits");
    c.order_ *= sz;
  }
  return c;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stuck] = strip(g, 0);
  return stuck == levels_.size() && residue.is_identity();
}

Perm StabChain::sift(const Perm& g, size_t from) const { return strip(g, from).first; }

std::vector<Perm> StabChain::stabilizer_gens(size_t k) const {
  std::vector<Perm> out;
  if (k >= levels_.size()) return out;
  std::unordered_set<Perm, PermSetHash> seen;
  for (const Perm& g : levels_[k].gens)
    if (seen.insert(g).second) out.push_back(g);
  return out;
}

Perm StabChain::random_element(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (size_t i = levels_.size(); i-- > 0;) {
    const Level& lv = levels_[i];
    size_t pick = std::uniform_int_distribution<size_t>(0, lv.orbit.size() - 1)(rng);
    g = g * lv.reps[pick];
  }
  return g;
}

void StabChain::for_each_element(const std::function<bool(const Perm&)>& visit) const {
  // Recursive product over transversals, deepest level outermost so the
  // level-0 transversal varies fastest.
  std::function<bool(size_t, const Perm&)> rec = [&](size_t lvl, const Perm& acc) {
    if (lvl == SIZE_MAX) return visit(acc);
    const Level& lv = levels_[lvl];
    for (const Perm& rep : lv.reps) {
      if (!rec(lvl - 1, acc * rep)) return false;
    }
    return true;
  };
  if (levels_.empty()) {
    visit(Perm(degree_));
    return;
  }
  rec(levels_.size() - 1, Perm(degree_));
}

std::vector<Perm> closure(Point degree, const std::vector<Perm>& gens, size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  out.emplace_back(Perm(degree));
  seen.insert(out[0]);
  for (size_t head = 0; head < out.size(); ++head) {
    for (const Perm& s : gens) {
      Perm next = out[head] * s;
      if (seen.insert(next).second) {
        out.push_back(std::move(next));
        if (out.size() > cap) return {};
      }
    }
  }
  return out;
}

}  // namespace permcore
