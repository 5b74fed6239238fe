#include <random>
#include <set>

#include "doctest.h"
#include "permcore/group.hpp"
#include "permcore/searches.hpp"

using namespace permcore;

namespace {

GroupRef symmetric(Point n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> t(n);
    for (Point i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.emplace_back(Perm(t));
    std::vector<Point> c(n);
    for (Point i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(Perm(c));
  }
  return make_group(n, std::move(gens), "Sym(" + std::to_string(n) + ")");
}

GroupRef cyclic(Point n) {
  std::vector<Point> c(n);
  for (Point i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return make_group(n, {Perm(c)}, "C(" + std::to_string(n) + ")");
}

u64 factorial(u64 n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("perm parse and print round trip") {
  Perm p = parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[5] == 5);
  CHECK(p.cycle_string() == "(1,2,3)(4,5)");
  CHECK(parse_cycles(" ( 1 , 2 ) ", 4).cycle_string() == "(1,2)");
  CHECK(parse_cycles("()", 5).is_identity());
  CHECK_THROWS(parse_cycles("(1,2", 4));
  CHECK_THROWS(parse_cycles("(1,9)", 4));
  CHECK_THROWS(parse_cycles("(1,2)(2,3)", 4));
}

TEST_CASE("perm algebra") {
  std::mt19937_64 rng(7);
  auto s6 = symmetric(6);
  for (int i = 0; i < 50; ++i) {
    Perm a = s6->random_element(rng), b = s6->random_element(rng), c = s6->random_element(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.conjugated_by(b) == b.inverse() * a * b);
  }
  CHECK(parse_cycles("(1,2,3)(4,5)", 6).order() == 6);
}

TEST_CASE("chain orders for standard groups") {
  for (Point n = 1; n <= 8; ++n) CHECK(symmetric(n)->order() == factorial(n));
  CHECK(cyclic(12)->order() == 12);
  // trivial group
  PermGroup trivial(5, {});
  CHECK(trivial.order() == 1);
}

TEST_CASE("chain order equals brute-force closure size") {
  std::mt19937_64 rng(11);
  auto s7 = symmetric(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Perm> gens{s7->random_element(rng), s7->random_element(rng)};
    auto closed = closure(7, gens, 5040);
    PermGroup g(7, gens);
    REQUIRE(!closed.empty());
    CHECK(g.order() == closed.size());
    for (const Perm& e : closed) CHECK(g.contains(e));
  }
}

TEST_CASE("membership rejects outsiders") {
  auto a4 = make_group(4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)}, "Alt(4)");
  CHECK(a4->order() == 12);
  CHECK(!a4->contains(parse_cycles("(1,2)", 4)));
  CHECK(a4->contains(parse_cycles("(1,2)(3,4)", 4)));
}

TEST_CASE("orbits and fixed points") {
  auto s4 = symmetric(4);
  CHECK(orbit_of(*s4, 0).size() == 4);
  // 11-cycle inside degree 12 fixes the last point
  auto c11 = make_group(12, {parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 12)});
  CHECK(orbit_of(*c11, 11) == std::vector<Point>{11});
  CHECK(orbit_of(*c11, 0).size() == 11);
  CHECK_THROWS_AS(orbit_of(*s4, 9), std::invalid_argument);
  // orbit representatives map the seed to each orbit point
  auto reps = orbit_with_reps(*s4, 2);
  for (auto& [pt, rep] : reps) CHECK(rep[2] == pt);
}

TEST_CASE("orbit-stabilizer on random subgroups") {
  std::mt19937_64 rng(13);
  auto s8 = symmetric(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Perm> gens{s8->random_element(rng), s8->random_element(rng)};
    auto g = make_group(8, gens);
    if (g->order() > 10'000) continue;
    for (Point p = 0; p < 8; ++p) {
      auto stab = point_stabilizer(g, {p});
      CHECK(orbit_of(*g, p).size() * stab.order() == g->order());
    }
  }
}

TEST_CASE("point stabilizer of symmetric group") {
  auto s6 = symmetric(6);
  CHECK(point_stabilizer(s6, {0}).order() == 120);
  CHECK(point_stabilizer(s6, {0, 1}).order() == 24);
}

TEST_CASE("set stabilizer") {
  auto s4 = symmetric(4);
  auto st = set_stabilizer(s4, {0, 1});
  CHECK(st.order() == 4);  // Sym(2) x Sym(2)
  auto s6 = symmetric(6);
  CHECK(set_stabilizer(s6, {0, 1, 2}).order() == 36);
  // Lagrange: produced subgroup order divides ambient order
  CHECK(s6->order() % set_stabilizer(s6, {1, 3}).order() == 0);
}

TEST_CASE("coset action degree and kernel") {
  auto s4 = symmetric(4);
  auto a4 = Subgroup(s4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)}, "Alt(4)");
  auto ca = coset_action(*s4, a4);
  CHECK(ca.image.degree() == 2);
  CHECK(ca.kernel_order == 12);
  CHECK(ca.kernel_order * ca.image.order() == s4->order());

  // Sym(5) on cosets of point stabilizer: natural action again, faithful
  auto s5 = symmetric(5);
  auto st = point_stabilizer(s5, {0});
  auto ca5 = coset_action(*s5, st);
  CHECK(ca5.image.degree() == 5);
  CHECK(ca5.kernel_order == 1);
  CHECK(ca5.image.order() == 120);

  Caps tight;
  tight.coset_degree = 3;
  CHECK_THROWS_AS(coset_action(*s5, st, tight), CapExceeded);
}

TEST_CASE("normalizer basics") {
  auto s4 = symmetric(4);
  auto v4 = Subgroup(s4, {parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)});
  CHECK(normalizer(s4, v4).order() == 24);  // V4 is normal in Sym(4)
  auto c3 = Subgroup(s4, {parse_cycles("(1,2,3)", 4)});
  CHECK(normalizer(s4, c3).order() == 6);
  // normalizer(G, G) == G
  auto whole = Subgroup(s4, s4->generators());
  CHECK(normalizer(s4, whole).order() == 24);
}

TEST_CASE("sylow subgroups") {
  auto s4 = symmetric(4);
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).order() == 1);  // p does not divide the order
  auto s7 = symmetric(7);
  CHECK(sylow_subgroup(s7, 7).order() == 7);
  CHECK(sylow_subgroup(s7, 2).order() == 16);
}

TEST_CASE("intersection order") {
  auto s4 = symmetric(4);
  auto a4 = Subgroup(s4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)});
  auto d8 = Subgroup(s4, {parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)});
  CHECK(intersection_order(a4, d8) == 4);
}

TEST_CASE("primitivity and blocks") {
  auto c4 = cyclic(4);
  auto res = primitivity(*c4);
  CHECK(!res.primitive);
  CHECK(res.minimal_block == std::vector<Point>{0, 2});
  CHECK(primitivity(*symmetric(5)).primitive);
  auto c6 = cyclic(6);
  CHECK(!primitivity(*c6).primitive);
  auto intrans = make_group(6, {parse_cycles("(1,2,3)", 6)});
  CHECK_THROWS_AS(primitivity(*intrans), std::invalid_argument);
}

TEST_CASE("element enumeration is complete and deterministic") {
  auto a4 = make_group(4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)});
  auto els1 = a4->elements(100);
  auto els2 = a4->elements(100);
  CHECK(els1.size() == 12);
  CHECK(els1 == els2);
  std::set<std::vector<Point>> distinct;
  for (auto& e : els1) distinct.insert(e.images());
  CHECK(distinct.size() == 12);
}

TEST_CASE("random elements are members") {
  std::mt19937_64 rng(5);
  auto s6 = symmetric(6);
  auto a4 = make_group(4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)});
  for (int i = 0; i < 100; ++i) {
    CHECK(s6->contains(s6->random_element(rng)));
    CHECK(a4->contains(a4->random_element(rng)));
  }
}
