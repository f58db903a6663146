#include <catch2/catch_amalgamated.hpp>

#include "contextua/coset_table.hpp"
#include "contextua/permgroup.hpp"
#include "contextua/todd_coxeter.hpp"
#include "oracles.hpp"

using namespace contextua;

namespace {

Perm cyc(int n, std::vector<std::vector<int>> cs) {
  for (auto& c : cs)
    for (auto& p : c) --p;
  return Perm::from_cycles(n, cs);
}

std::vector<Word> words(const std::vector<std::string>& ws) {
  std::vector<Word> out;
  for (const auto& s : ws) out.push_back(parse_word(s));
  return out;
}

const Presentation kFree = make_presentation({});
const Presentation kB2 = make_presentation({"b^2"});
const Presentation kGamma = make_presentation({"a^2", "b^3"});
const Presentation kA5 = make_presentation({"a^2", "b^3", "(ab)^5"});

}  // namespace

TEST_CASE("todd-coxeter on the whole group") {
  CosetTable t = todd_coxeter(kGamma, words({"a", "b"}));
  CHECK(t.n == 1);
  auto reps = transversal(t);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].is_identity());
}

TEST_CASE("todd-coxeter counts match an independent permutation model") {
  // <a,b | a^2, b^3, (ab)^5> maps onto A5 via a -> (1,2)(3,4), b -> (1,3,5);
  // the brute-force closure of that model provides the expected indices.
  Perm ma = cyc(5, {{1, 2}, {3, 4}});
  Perm mb = cyc(5, {{1, 3, 5}});
  CHECK(eval_word(parse_word("a^2"), ma, mb).is_identity());
  CHECK(eval_word(parse_word("b^3"), ma, mb).is_identity());
  CHECK(eval_word(parse_word("(ab)^5"), ma, mb).is_identity());
  auto model = oracle::closure({ma, mb});
  REQUIRE(model.size() == 60);

  CosetTable whole = todd_coxeter(kA5, {});
  CHECK(whole.n == 60);

  CosetTable half = todd_coxeter(kA5, words({"a"}));
  CHECK(half.n == 30);  // 60 / |<a>| by Lagrange
  whole.validate();
  half.validate();
}

TEST_CASE("todd-coxeter agrees with the word-ball oracle") {
  struct Fixture {
    const Presentation* pres;
    std::vector<std::string> subgens;
    int radius;
  };
  std::vector<Fixture> fixtures = {
      {&kFree, {"a", "b"}, 4},
      {&kFree, {"a", "b^2", "bab^-1"}, 6},
      {&kFree, {"b", "aba^-1", "a^2ba^-2", "a^3"}, 7},
      {&kB2, {"a", "bab"}, 6},
      {&kB2, {"b", "aba^-1", "a^2"}, 6},
      {&kGamma, {"b", "aba"}, 6},
      {&kGamma, {"a", "bab^-1", "b^-1ab"}, 7},
      {&kGamma, {"a", "b"}, 5},
  };
  for (const auto& fx : fixtures) {
    CAPTURE(fx.subgens);
    CosetTable t = todd_coxeter(*fx.pres, words(fx.subgens));
    t.validate();
    oracle::WordBallCosets ball(*fx.pres, words(fx.subgens), fx.radius);
    CHECK(ball.matches_table(t));
  }
}

TEST_CASE("limit exceeded on infinite index") {
  CHECK_THROWS_AS(todd_coxeter(kFree, words({"a"}), 64), LimitExceeded);
}

TEST_CASE("transversal representatives") {
  CosetTable t = todd_coxeter(kA5, words({"a"}));
  auto reps = transversal(t);
  REQUIRE(static_cast<int>(reps.size()) == t.n);
  CHECK(reps[0].is_identity());

  // reps[i] maps coset 0 to i, and BFS discovery order has nondecreasing
  // lengths
  std::vector<char> seen(t.n, 0);
  std::vector<int> order{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (Letter x : {kLetterA, kLetterAInv, kLetterB, kLetterBInv}) {
      int d = t.act[order[k]][x];
      if (!seen[d]) {
        seen[d] = 1;
        order.push_back(d);
      }
    }
  for (int i = 0; i < t.n; ++i) CHECK(t.apply_word(0, reps[i]) == i);
  for (std::size_t k = 1; k < order.size(); ++k)
    CHECK(reps[order[k - 1]].length() <= reps[order[k]].length());
}

TEST_CASE("schreier generators fix the subgroup coset") {
  CosetTable one = todd_coxeter(kFree, words({"a", "b"}));
  auto gens1 = schreier_generator_words(one);
  REQUIRE(gens1.size() == 2);
  CHECK(gens1[0] == parse_word("a"));
  CHECK(gens1[1] == parse_word("b"));

  CosetTable two = todd_coxeter(kFree, words({"a", "b^2", "bab^-1"}));
  REQUIRE(two.n == 2);
  for (const Word& w : schreier_generator_words(two))
    CHECK(two.apply_word(0, w) == 0);

  // index 30 in the A5 presentation: every Schreier generator's permutation
  // image lies in the stabilizer of point 0
  CosetTable t30 = todd_coxeter(kA5, words({"a"}));
  Perm alpha = t30.alpha(), beta = t30.beta();
  PermGroup p(t30.n, {alpha, beta}, {0});
  PermGroup stab(t30.n, p.stabilizer_gens(1));
  for (const Word& w : schreier_generator_words(t30)) {
    Perm img = eval_word(w, alpha, beta);
    CHECK(img[0] == 0);
    CHECK(stab.contains(img));
  }
}

TEST_CASE("normal closure test") {
  // N always contains <a, b> = G
  for (const Presentation* pres : {&kFree, &kB2, &kGamma, &kA5})
    CHECK(normal_closure_is_full(*pres, words({"a", "b"})).yes());

  // the index-6 subgroup of <a,b|b^2> behind the order-36 dessin fails it
  Perm alpha = cyc(6, {{1, 2, 4, 5, 6, 3}});
  Perm beta = cyc(6, {{3, 5}, {4, 6}});
  CosetTable t = table_from_perms(alpha, beta);
  t.origin = kB2;
  auto sub = schreier_generator_words(t);
  auto res = normal_closure_is_full(kB2, sub);
  CHECK(res.kind == NormalClosureResult::Kind::No);
  CHECK(res.quotient_index > 1);

  // undetermined is a value, not an error
  auto und = normal_closure_is_full(kFree, words({"abab"}), 32);
  CHECK(und.kind == NormalClosureResult::Kind::Undetermined);
}

TEST_CASE("action generators of a known table") {
  Perm alpha = cyc(6, {{1, 2, 4, 5, 6, 3}});
  Perm beta = cyc(6, {{3, 5}, {4, 6}});
  CosetTable t = table_from_perms(alpha, beta);
  CHECK(t.alpha() == alpha);
  CHECK(t.beta() == beta);
  t.origin = kB2;
  t.validate();  // beta^2 = e, so the b^2 relator acts trivially

  // round trip: enumerate the same subgroup from its Schreier generators
  auto sub = schreier_generator_words(t);
  CosetTable again = todd_coxeter(kB2, sub);
  CHECK(again.n == 6);
}
