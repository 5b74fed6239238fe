#include "permcore/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace permcore {

PermGroup::PermGroup(Point degree, std::vector<Perm> gens, std::string label)
    : degree_(degree), gens_(std::move(gens)), label_(std::move(label)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
  if (gens_.empty()) gens_.push_back(Perm(degree_));
}

PermGroup::PermGroup(const PermGroup& other)
    : degree_(other.degree_), gens_(other.gens_), label_(other.label_),
      base_hint_(other.base_hint_) {
  std::lock_guard<std::mutex> lk(*other.mu_);
  chain_ = other.chain_;  // built chains are immutable and shareable
}

PermGroup& PermGroup::operator=(const PermGroup& other) {
  if (this == &other) return *this;
  PermGroup tmp(other);
  degree_ = tmp.degree_;
  gens_ = std::move(tmp.gens_);
  label_ = std::move(tmp.label_);
  base_hint_ = std::move(tmp.base_hint_);
  chain_ = std::move(tmp.chain_);
  return *this;
}

const StabChain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lk(*mu_);
  if (!chain_)
    chain_ = std::make_shared<const StabChain>(StabChain::build(degree_, gens_, base_hint_));
  return *chain_;
}

void PermGroup::set_base_hint(std::vector<Point> hint) {
  std::lock_guard<std::mutex> lk(*mu_);
  if (chain_) throw std::logic_error("PermGroup: base hint after chain was built");
  base_hint_ = std::move(hint);
}

std::vector<Perm> PermGroup::elements(size_t cap) const {
  if (order() > cap) throw CapExceeded("element enumeration cap exceeded");
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(order()));
  for_each_element([&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Subgroup::Subgroup(GroupRef amb, std::vector<Perm> gens, std::string label)
    : ambient(std::move(amb)), group(ambient->degree(), std::move(gens), std::move(label)) {
  for (const Perm& g : group.generators())
    if (!g.is_identity() && !ambient->contains(g))
      throw std::invalid_argument("Subgroup: generator fails ambient membership");
}

GroupRef make_group(Point degree, std::vector<Perm> gens, std::string label) {
  return std::make_shared<const PermGroup>(degree, std::move(gens), std::move(label));
}

std::vector<Point> orbit_of(const PermGroup& g, Point p) {
  if (p >= g.degree()) throw std::invalid_argument("orbit_of: point out of range");
  std::vector<Point> orbit{p};
  std::vector<bool> seen(g.degree(), false);
  seen[p] = true;
  for (size_t head = 0; head < orbit.size(); ++head) {
    for (const Perm& s : g.generators()) {
      Point img = s[orbit[head]];
      if (!seen[img]) {
        seen[img] = true;
        orbit.push_back(img);
      }
    }
  }
  return orbit;
}

std::vector<std::pair<Point, Perm>> orbit_with_reps(const PermGroup& g, Point p) {
  if (p >= g.degree()) throw std::invalid_argument("orbit_with_reps: point out of range");
  std::vector<std::pair<Point, Perm>> orbit;
  orbit.emplace_back(p, Perm(g.degree()));
  std::vector<std::int64_t> pos(g.degree(), -1);
  pos[p] = 0;
  for (size_t head = 0; head < orbit.size(); ++head) {
    for (const Perm& s : g.generators()) {
      Point img = s[orbit[head].first];
      if (pos[img] < 0) {
        pos[img] = static_cast<std::int64_t>(orbit.size());
        orbit.emplace_back(img, orbit[head].second * s);
      }
    }
  }
  return orbit;
}

std::vector<std::vector<Point>> all_orbits(Point degree, const std::vector<Perm>& gens) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree; ++p) {
    if (seen[p]) continue;
    std::vector<Point> orbit{p};
    seen[p] = true;
    for (size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& s : gens) {
        Point img = s[orbit[head]];
        if (!seen[img]) {
          seen[img] = true;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Perm canonical_coset_rep(const StabChain& h_chain, const Perm& g) {
  // Greedy minimum over the subgroup orbit of each base point: the result is
  // a well-defined representative of (subgroup)*g.
  Perm cur = g;
  for (size_t i = 0; i < h_chain.length(); ++i) {
    const auto& lv = h_chain.level(i);
    Point best_img = cur[lv.orbit[0]];
    size_t best_idx = 0;
    for (size_t j = 1; j < lv.orbit.size(); ++j) {
      Point img = cur[lv.orbit[j]];
      if (img < best_img) {
        best_img = img;
        best_idx = j;
      }
    }
    if (best_idx != 0) cur = lv.reps[best_idx] * cur;
  }
  return cur;
}

CosetAction coset_action(const PermGroup& g, const Subgroup& h, const Caps& caps) {
  u64 hg_order = h.group.order();
  u64 g_order = g.order();
  if (g_order % hg_order != 0)
    throw std::logic_error("coset_action: subgroup order does not divide group order");
  u64 index = g_order / hg_order;
  if (index > caps.coset_degree)
    throw CapExceeded("coset_action: index " + std::to_string(index) +
                      " exceeds degree cap " + std::to_string(caps.coset_degree));

  const StabChain& hch = h.group.chain();
  std::vector<Perm> reps;
  std::unordered_map<size_t, std::vector<size_t>> by_hash;  // hash -> rep indices
  auto intern = [&](Perm rep) -> size_t {
    size_t hsh = hash_images(rep.images());
    auto& bucket = by_hash[hsh];
    for (size_t idx : bucket)
      if (reps[idx] == rep) return idx;
    bucket.push_back(reps.size());
    reps.push_back(std::move(rep));
    return reps.size() - 1;
  };

  intern(canonical_coset_rep(hch, Perm(g.degree())));
  std::vector<std::vector<Point>> gen_images(g.generators().size());
  for (size_t head = 0; head < reps.size(); ++head) {
    Perm base = reps[head];  // copy: reps may reallocate
    for (size_t si = 0; si < g.generators().size(); ++si) {
      size_t to = intern(canonical_coset_rep(hch, base * g.generators()[si]));
      if (gen_images[si].size() <= head) gen_images[si].resize(head + 1);
      gen_images[si][head] = static_cast<Point>(to);
    }
  }
  if (reps.size() != index)
    throw std::logic_error("coset_action: coset count mismatch");

  std::vector<Perm> image_gens;
  for (auto& img : gen_images) {
    img.resize(reps.size());
    image_gens.emplace_back(Perm(std::move(img)));
  }
  CosetAction out{PermGroup(static_cast<Point>(reps.size()), std::move(image_gens),
                            g.label() + "/" + h.group.label()),
                  0, std::move(reps)};
  out.kernel_order = g_order / out.image.order();
  return out;
}

BlockResult primitivity(const PermGroup& g) {
  Point n = g.degree();
  if (n == 0) throw std::invalid_argument("primitivity: empty domain");
  if (orbit_of(g, 0).size() != n)
    throw std::invalid_argument("primitivity: group is not transitive");
  if (n == 1) return {true, {}};

  std::vector<Point> parent(n);
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  BlockResult result;
  result.primitive = true;
  for (Point beta = 1; beta < n; ++beta) {
    std::iota(parent.begin(), parent.end(), Point{0});
    std::vector<std::pair<Point, Point>> queue{{0, beta}};
    parent[find(beta)] = find(0);
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const Perm& s : g.generators()) {
        Point ra = find(s[a]), rb = find(s[b]);
        if (ra != rb) {
          parent[rb] = ra;
          queue.emplace_back(ra, rb);
        }
      }
    }
    // Collect the block containing 0.
    Point root = find(0);
    std::vector<Point> block;
    for (Point x = 0; x < n; ++x)
      if (find(x) == root) block.push_back(x);
    if (block.size() < n) {
      result.primitive = false;
      if (result.minimal_block.empty() || block.size() < result.minimal_block.size())
        result.minimal_block = block;
    }
  }
  return result;
}

}  // namespace permcore
