#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "contextua/group_iso.hpp"
#include "contextua/permgroup.hpp"

using namespace contextua;

namespace {

// 1-based cycle notation helper
Perm cyc(int n, const std::vector<std::vector<int>>& cycles1) {
  std::vector<std::vector<int>> c0;
  for (const auto& c : cycles1) {
    std::vector<int> z;
    for (int p : c) z.push_back(p - 1);
    c0.push_back(z);
  }
  return Perm::from_cycles(n, c0);
}

// brute-force closure, independent of the BSGS machinery
std::set<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> out;
  if (gens.empty()) return out;
  out.insert(Perm(gens[0].degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(out.begin(), out.end());
    for (const Perm& x : cur)
      for (const Perm& g : gens)
        if (out.insert(x * g).second) grew = true;
  }
  return out;
}

// two transitive degree-6 pairs generating order-36 groups of rank 3
const Perm kDeg6Alpha = cyc(6, {{1, 2, 4, 5, 6, 3}});
const Perm kDeg6Beta = cyc(6, {{3, 5}, {4, 6}});
const Perm kDeg6Alpha2 = cyc(6, {{1, 2}, {3, 4, 6, 5}});
const Perm kDeg6Beta2 = cyc(6, {{2, 3}, {4, 5}});

}  // namespace

TEST_CASE("group orders") {
  PermGroup p36(6, {kDeg6Alpha, kDeg6Beta});
  CHECK(p36.order() == 36);

  PermGroup triv(5, {Perm(5)});
  CHECK(triv.order() == 1);

  std::vector<Perm> a5gens{cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})};
  PermGroup a5(5, a5gens);
  CHECK(a5.order() == 60);
  CHECK(closure(a5gens).size() == 60);  // independent enumeration

  PermGroup s6(6, {cyc(6, {{1, 2, 3, 4, 5, 6}}), cyc(6, {{1, 2}})});
  CHECK(s6.order() == 720);
}

TEST_CASE("membership is exact") {
  std::vector<Perm> a5gens{cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})};
  PermGroup a5(5, a5gens);
  for (const Perm& g : a5gens) CHECK(a5.contains(g));
  CHECK(a5.contains(cyc(5, {{1, 2}, {3, 4}})));
  CHECK_FALSE(a5.contains(cyc(5, {{1, 2}})));       // odd
  CHECK_FALSE(a5.contains(cyc(5, {{1, 2, 3, 4}})));  // odd

  auto elems = a5.elements();
  CHECK(elems.size() == 60);
  std::set<Perm> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == 60);
  CHECK(uniq == closure(a5gens));
}

TEST_CASE("rank (suborbit count) matches known actions") {
  CHECK(suborbit_count(kDeg6Alpha, kDeg6Beta) == 3);
  CHECK(suborbit_count(kDeg6Alpha2, kDeg6Beta2) == 3);

  // natural S_n is 2-transitive
  CHECK(suborbit_count(cyc(6, {{1, 2, 3, 4, 5, 6}}), cyc(6, {{1, 2}})) == 2);

  // suborbit lengths sum to the degree
  std::vector<Perm> gens{kDeg6Alpha, kDeg6Beta};
  auto stab = schreier_stabilizer_gens(6, gens, 0);
  auto subs = orbits_of(6, stab);
  std::size_t total = 0;
  for (const auto& s : subs) total += s.size();
  CHECK(total == 6);
}

TEST_CASE("point stabilizers satisfy orbit-stabilizer") {
  PermGroup s6(6, {cyc(6, {{1, 2, 3, 4, 5, 6}}), cyc(6, {{1, 2}})});
  PermGroup stab0 = point_stabilizer(s6, {0});
  CHECK(stab0.order() * 6 == s6.order());

  // iterated: |Stab(0,x)| * |orbit of x under Stab(0)| == |Stab(0)|
  for (int x = 1; x < 6; ++x) {
    PermGroup stab0x = point_stabilizer(s6, {0, x});
    auto orbs = orbits_of(6, stab0.generators());
    std::size_t orb_size = 0;
    for (const auto& o : orbs)
      if (std::find(o.begin(), o.end(), x) != o.end()) orb_size = o.size();
    CHECK(stab0x.order() * static_cast<long>(orb_size) == stab0.order());
  }

  // stabilizer of a fixed point of the trivial group is the whole group
  PermGroup triv(4, {});
  CHECK(point_stabilizer(triv, {2}).order() == 1);
}

TEST_CASE("two-point stabilizer classes") {
  auto tpc = two_point_classes(kDeg6Alpha, kDeg6Beta);
  CHECK(tpc.rank == 3);
  CHECK(tpc.s == 3);
  CHECK(tpc.exact);

  // regular action: only the trivial stabilizer appears
  Perm six = cyc(6, {{1, 2, 3, 4, 5, 6}});
  auto reg = two_point_classes(six, six * six);
  CHECK(reg.s == 1);
  CHECK(reg.classes[0].stab_order == 1);

  // relabeling invariance: conjugating both generators preserves s and the
  // multiset of class sizes
  Perm rel = cyc(6, {{1, 4}, {2, 6, 3}});
  Perm ra = rel.inverse() * kDeg6Alpha * rel;
  Perm rb = rel.inverse() * kDeg6Beta * rel;
  auto tpc2 = two_point_classes(ra, rb);
  CHECK(tpc2.s == tpc.s);
  std::multiset<long long> sizes1, sizes2;
  for (const auto& c : tpc.classes) sizes1.insert(c.ordered_pairs);
  for (const auto& c : tpc2.classes) sizes2.insert(c.ordered_pairs);
  CHECK(sizes1 == sizes2);
}

TEST_CASE("pair classes are well defined and symmetric") {
  auto tpc = two_point_classes(kDeg6Alpha, kDeg6Beta);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      if (p == q) continue;
      CHECK(tpc.pair_class(p, q) == tpc.pair_class(q, p));
    }
  // diagonal pairs form their own class (the one-point stabilizer)
  int diag = tpc.pair_class(0, 0);
  bool found = false;
  for (const auto& c : tpc.classes)
    if (c.id == diag) found = c.contains_diagonal;
  CHECK(found);
}

TEST_CASE("subgroup equality") {
  std::vector<Perm> a5gens{cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})};
  PermGroup g1(5, a5gens);
  PermGroup g2(5, {cyc(5, {{1, 2, 3}}), cyc(5, {{1, 2, 3, 4, 5}})});
  CHECK(subgroups_equal(g1, g2));

  PermGroup stab0 = point_stabilizer(g1, {0});
  PermGroup stab1 = point_stabilizer(g1, {1});
  CHECK_FALSE(subgroups_equal(stab0, stab1));  // conjugate but not equal
}

TEST_CASE("small group isomorphism") {
  // cyclic C4 regular vs klein four regular: same order, different histograms
  Perm c4 = cyc(4, {{1, 2, 3, 4}});
  PermGroup cyclic4(4, {c4});
  PermGroup klein(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  CHECK(cyclic4.order() == 4);
  CHECK(klein.order() == 4);
  CHECK_FALSE(small_group_isomorphic(cyclic4, klein));

  // two regular representations of C4 on different point sets
  PermGroup cyclic4b(8, {cyc(8, {{1, 2, 3, 4}, {5, 6, 7, 8}})});
  CHECK(small_group_isomorphic(cyclic4, cyclic4b));

  // reflexive / symmetric / transitive spot checks
  CHECK(small_group_isomorphic(klein, klein));
  CHECK(small_group_isomorphic(cyclic4b, cyclic4));
  PermGroup cyclic4c(6, {cyc(6, {{1, 2, 3, 4}})});
  CHECK(small_group_isomorphic(cyclic4b, cyclic4c));
  CHECK(small_group_isomorphic(cyclic4, cyclic4c));

  // S3 vs C6
  PermGroup s3(3, {cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2}})});
  PermGroup c6(6, {cyc(6, {{1, 2, 3, 4, 5, 6}})});
  CHECK_FALSE(small_group_isomorphic(s3, c6));

  // the bound is enforced
  PermGroup s6(6, {cyc(6, {{1, 2, 3, 4, 5, 6}}), cyc(6, {{1, 2}})});
  CHECK_THROWS_AS(small_group_isomorphic(s6, s6, 100), OrderTooLarge);
}

TEST_CASE("isomorphism across different transitive representations") {
  // A5 on 5 points vs A5 on 6 points (PSL(2,5))
  PermGroup a5(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})});
  PermGroup psl25(6, {cyc(6, {{1, 2, 3, 4, 5}}), cyc(6, {{1, 6}, {2, 5}})});
  REQUIRE(psl25.order() == 60);
  CHECK(small_group_isomorphic(a5, psl25));

  // D6 vs A4: both order 12, different structure
  PermGroup d6(6, {cyc(6, {{1, 2, 3, 4, 5, 6}}), cyc(6, {{2, 6}, {3, 5}})});
  PermGroup a4(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 2, 3}})});
  REQUIRE(d6.order() == 12);
  REQUIRE(a4.order() == 12);
  CHECK_FALSE(small_group_isomorphic(d6, a4));
}
