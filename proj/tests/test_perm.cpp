#include "doctest.h"

#include "orbva/perm.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace orbva;

namespace {

std::uint64_t mask(std::initializer_list<int> pts) {
  std::vector<int> v(pts);
  return points_to_mask(v);
}

// Brute-force stabilizer data by filtering the full element list.
StabilizerData brute_stabilizer_data(const PermGroup& g, std::uint64_t K) {
  StabilizerData d;
  const auto& els = g.elements();
  d.group_order = BigInt(els.size());
  long setwise = 0, pointwise = 0;
  std::set<std::uint64_t> orbit;
  for (const auto& p : els) {
    std::uint64_t img = p.apply_to_set(K);
    orbit.insert(img);
    if (img == K) {
      ++setwise;
      bool fixes = true;
      for (int pt : mask_to_points(K)) {
        if (p(pt) != pt) fixes = false;
      }
      if (fixes) ++pointwise;
    }
  }
  d.setwise_order = setwise;
  d.pointwise_order = pointwise;
  d.orbit_length = BigInt(orbit.size());
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("perm");

TEST_CASE("permutation basics") {
  Permutation t = Permutation::transposition(4, 0, 1);
  Permutation c = Permutation::cycle(4);
  CHECK(t * t == Permutation::identity(4));
  CHECK((c * c * c * c) == Permutation::identity(4));
  CHECK((t * c)(0) == t(c(0)));
  CHECK(c.inverse() * c == Permutation::identity(4));
  CHECK(c.apply_to_set(mask({0, 3})) == mask({1, 0}));
  CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("orders of the built-in groups") {
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK(PermGroup::symmetric(1).order() == 1);
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK(PermGroup::symmetric(8).order() == 40320);
  CHECK(PermGroup::symmetric(10).order() == 3628800);
  CHECK(PermGroup::pointed_symmetric(4).order() == 6);
  CHECK(PermGroup::pointed_symmetric(10).order() == 362880);
  auto prod = PermGroup::direct_product(PermGroup::symmetric(3), PermGroup::symmetric(4));
  CHECK(prod.order() == 6 * 24);
}

TEST_CASE("membership") {
  PermGroup p4 = PermGroup::pointed_symmetric(4);
  CHECK(p4.contains(Permutation::transposition(4, 1, 3)));
  CHECK_FALSE(p4.contains(Permutation::transposition(4, 0, 3)));
  CHECK(p4.is_subgroup_of(PermGroup::symmetric(4)));
  CHECK_FALSE(PermGroup::symmetric(4).is_subgroup_of(p4));
}

TEST_CASE("element enumeration matches order") {
  for (int n : {1, 2, 3, 4, 5}) {
    auto g = PermGroup::symmetric(n);
    CHECK(BigInt(g.elements().size()) == g.order());
  }
}

TEST_CASE("stabilizer data examples") {
  auto d = PermGroup::symmetric(4).stabilizer_data(mask({0, 1}));
  CHECK(d.group_order == 24);
  CHECK(d.setwise_order == 4);
  CHECK(d.pointwise_order == 2);
  CHECK(d.orbit_length == 6);

  auto p = PermGroup::pointed_symmetric(4).stabilizer_data(mask({0}));
  CHECK(p.group_order == 6);
  CHECK(p.setwise_order == 6);
  CHECK(p.pointwise_order == 6);
  CHECK(p.orbit_length == 1);

  auto e = PermGroup::symmetric(4).stabilizer_data(0);
  CHECK(e.setwise_order == 24);
  CHECK(e.pointwise_order == 24);
  CHECK(e.orbit_length == 1);

  CHECK_THROWS(PermGroup::symmetric(3).stabilizer_data(mask({5})));
}

TEST_CASE("stabilizer data against brute force") {
  std::mt19937 rng(7);
  std::vector<PermGroup> groups = {PermGroup::symmetric(5), PermGroup::pointed_symmetric(5),
                                   PermGroup::direct_product(PermGroup::symmetric(3),
                                                             PermGroup::symmetric(2))};
  for (const auto& g : groups) {
    for (int trial = 0; trial < 12; ++trial) {
      std::uint64_t K = 0;
      for (int i = 0; i < g.degree(); ++i) {
        if (rng() % 3 == 0) K |= std::uint64_t{1} << i;
      }
      auto fast = g.stabilizer_data(K);
      auto slow = brute_stabilizer_data(g, K);
      CHECK(fast.group_order == slow.group_order);
      CHECK(fast.setwise_order == slow.setwise_order);
      CHECK(fast.pointwise_order == slow.pointwise_order);
      CHECK(fast.orbit_length == slow.orbit_length);
      // orbit-stabilizer identity
      CHECK(fast.orbit_length * fast.setwise_order == fast.group_order);
    }
  }
}

TEST_CASE("restriction groups") {
  CHECK(PermGroup::symmetric(4).restriction(mask({0, 2})).order() == 2);
  CHECK(PermGroup::pointed_symmetric(4).restriction(mask({0})).order() == 1);
  CHECK(PermGroup::symmetric(5).restriction(mask({1, 2, 3})).order() == 6);
  CHECK_THROWS(PermGroup::symmetric(4).restriction(0));
  // |restriction| = |setwise| / |pointwise|
  auto g = PermGroup::direct_product(PermGroup::symmetric(3), PermGroup::symmetric(3));
  std::uint64_t K = mask({0, 1, 3});
  CHECK(g.restriction(K).order() * g.pointwise_stabilizer_order(K) ==
        g.setwise_stabilizer_order(K));
}

TEST_CASE("pointwise stabilizer generators generate the right subgroup") {
  auto g = PermGroup::symmetric(6);
  std::uint64_t K = mask({1, 4});
  auto gens = g.pointwise_stabilizer_generators(K);
  PermGroup h(6, gens);
  CHECK(h.order() == g.pointwise_stabilizer_order(K));
  CHECK(h.order() == 24);
  for (const auto& s : gens) {
    CHECK(s(1) == 1);
    CHECK(s(4) == 4);
  }
}

TEST_CASE("pointwise intersection identity") {
  // pointwise(A union B) = pointwise(A) intersect pointwise(B), via orders.
  std::mt19937 rng(11);
  for (const auto& g : {PermGroup::symmetric(6), PermGroup::pointed_symmetric(6)}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::uint64_t A = rng() % 64, B = rng() % 64;
      PermGroup ga(g.degree(), g.pointwise_stabilizer_generators(A));
      BigInt meet = 0;
      // order of intersection = |pointwise_A restricted to fixing B|
      meet = ga.pointwise_stabilizer_order(B);
      CHECK(meet == g.pointwise_stabilizer_order(A | B));
    }
  }
}

TEST_CASE("function orbit counts") {
  std::vector<int> heis = {1, 1, 2};  // dims of the weight-0,1,2 spaces
  auto s4 = function_orbit_reps(PermGroup::symmetric(4), heis, 2);
  CHECK(s4.count == 3);
  auto s1 = function_orbit_reps(PermGroup::symmetric(1), heis, 2);
  CHECK(s1.count == 2);
  auto zero = function_orbit_reps(PermGroup::symmetric(4), heis, 0);
  CHECK(zero.count == 1);
  CHECK(zero.reps[0].empty());
  // Representatives are lexicographically minimal members of their orbits.
  for (const auto& rep : s4.reps) {
    auto orbit = orbit_of(rep, PermGroup::symmetric(4).generators(), act_on_word);
    CHECK(*std::min_element(orbit.begin(), orbit.end()) == rep);
  }
}

TEST_CASE("symmetric family b_n saturates at N = n") {
  std::vector<int> heis = {1, 1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n) {
    std::vector<BigInt> seq;
    for (int N = 1; N <= n + 2; ++N) {
      seq.push_back(function_orbit_reps(PermGroup::symmetric(N), heis, n).count);
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(seq[i] <= seq[i + 1]);
    CHECK(seq[n - 1] == seq.back());  // saturated at N = n
    if (n >= 2) CHECK(seq[n - 2] != seq.back());
  }
}

TEST_CASE("family diagnostics: symmetric vs pointed") {
  std::vector<int> heis = {1, 1, 2};
  auto sym = family_diagnostics(GroupFamily::symmetric(), mask({0}), heis, 2, 2, 8);
  for (bool b : sym.nested) CHECK(b);
  CHECK_FALSE(sym.finite_orbit_flag);
  CHECK(sym.orbit_lengths.front() == 2);
  CHECK(sym.orbit_lengths.back() == 8);
  CHECK(sym.saturation_N == 2);
  CHECK(sym.restriction_stabilized);

  auto pt = family_diagnostics(GroupFamily::pointed_symmetric(), mask({0}), heis, 2, 2, 8);
  for (bool b : pt.nested) CHECK(b);
  CHECK(pt.finite_orbit_flag);
  for (const auto& len : pt.orbit_lengths) CHECK(len == 1);

  auto prod = family_diagnostics(GroupFamily::product(), mask({0}), heis, 2, 2, 5);
  for (bool b : prod.nested) CHECK(b);
  CHECK_FALSE(prod.finite_orbit_flag);
}

TEST_CASE("b_2 sequence for the symmetric family") {
  std::vector<int> heis = {1, 1, 2};
  std::vector<BigInt> expect = {2, 3, 3, 3, 3, 3};
  for (int N = 1; N <= 6; ++N) {
    CHECK(function_orbit_reps(PermGroup::symmetric(N), heis, 2).count == expect[N - 1]);
  }
}

TEST_CASE("placed support orbits: counts") {
  auto s4 = PermGroup::symmetric(4);
  CHECK(placed_support_orbits(s4, mask({0}), mask({0}), mask({0})).size() == 5);
  CHECK(placed_support_orbits(s4, 0, 0, 0).size() == 1);
  CHECK(placed_support_orbits(PermGroup::symmetric(3), mask({0, 1}), mask({0}), 0).size() == 2);
}

TEST_CASE("placed support orbits: class sizes partition the product space") {
  std::mt19937 rng(3);
  for (const auto& g : {PermGroup::symmetric(5), PermGroup::pointed_symmetric(5),
                        PermGroup::direct_product(PermGroup::symmetric(3),
                                                  PermGroup::symmetric(2))}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::uint64_t K1 = rng() % (1 << g.degree());
      std::uint64_t K2 = rng() % (1 << g.degree());
      std::uint64_t K3 = rng() % (1 << g.degree());
      auto classes = placed_support_orbits(g, K1, K2, K3);
      BigInt total = 0;
      for (const auto& c : classes) {
        total += c.class_size;
        // kappa transports the base sets onto the representative sets.
        CHECK(c.kappa[0].apply_to_set(K1) == c.conf.K1);
        CHECK(c.kappa[1].apply_to_set(K2) == c.conf.K2);
        CHECK(c.kappa[2].apply_to_set(K3) == c.conf.K3);
        // class size = |G| / |diagonal stabilizer| divides |G|
        CHECK(g.order() % c.class_size == 0);
      }
      CHECK(total == g.set_orbit_length(K1) * g.set_orbit_length(K2) * g.set_orbit_length(K3));
    }
  }
}

TEST_CASE("product-set order identity (lemma route)") {
  // |G1 G2 G3| = |G1||G2||G3| / |G123|^2 whenever the one-point set is empty.
  std::mt19937 rng(17);
  for (const auto& g : {PermGroup::symmetric(5), PermGroup::symmetric(6),
                        PermGroup::pointed_symmetric(6)}) {
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
      // Build a configuration with empty one-point set: every chosen point is
      // put into at least two of the three sets.
      std::uint64_t K1 = 0, K2 = 0, K3 = 0;
      for (int i = 0; i < g.degree(); ++i) {
        switch (rng() % 5) {
          case 0: K1 |= 1ull << i; K2 |= 1ull << i; break;
          case 1: K1 |= 1ull << i; K3 |= 1ull << i; break;
          case 2: K2 |= 1ull << i; K3 |= 1ull << i; break;
          case 3: K1 |= 1ull << i; K2 |= 1ull << i; K3 |= 1ull << i; break;
          default: break;
        }
      }
      SupportConfiguration conf{K1, K2, K3};
      REQUIRE(conf.one_point_set() == 0);
      ++checked;
      BigInt lhs = g.pointwise_product_set_order(K1, K2, K3);
      BigInt p1 = g.pointwise_stabilizer_order(K1);
      BigInt p2 = g.pointwise_stabilizer_order(K2);
      BigInt p3 = g.pointwise_stabilizer_order(K3);
      BigInt pu = g.pointwise_stabilizer_order(conf.union_all());
      CHECK(lhs * pu * pu == p1 * p2 * p3);
    }
    CHECK(checked >= 5);
  }
}

TEST_CASE("support configuration derived sets") {
  SupportConfiguration c{mask({0, 1}), mask({1, 2}), mask({0, 2})};
  CHECK(c.triple_overlap() == 0);
  CHECK(c.one_point_set() == 0);
  SupportConfiguration d{mask({0}), mask({0}), mask({0})};
  CHECK(d.triple_overlap() == mask({0}));
  CHECK(d.n_t() == 1);
  SupportConfiguration e{mask({0}), mask({1}), mask({0, 1})};
  CHECK(e.triple_overlap() == 0);
  CHECK(e.one_point_set() == 0);
  SupportConfiguration f{mask({0}), mask({1}), mask({2})};
  CHECK(f.one_point_set() == mask({0, 1, 2}));
}

TEST_SUITE_END();
