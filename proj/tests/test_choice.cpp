#include <doctest.h>

#include <fstream>
#include <set>

#include "gsv/choice.hpp"

using namespace gsv;

TEST_CASE("profile ranking is a bijection") {
  const Profile both_identity{{LinearOrder({0, 1, 2}), LinearOrder({0, 1, 2})}};
  CHECK(rank_of_profile(both_identity) == 0);
  CHECK(profile_count(3, 2) == 36);
  for (auto [n, N] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    for (long long r = 0; r < profile_count(n, N); ++r)
      CHECK(rank_of_profile(profile_of_rank(r, n, N)) == r);
  }
  CHECK_THROWS_AS(profile_of_rank(36, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(profile_of_rank(-1, 3, 2), std::out_of_range);
}

TEST_CASE("top and prefers") {
  CHECK(LinearOrder({2, 0, 1}).top() == 2);
  CHECK(LinearOrder({0, 1, 2}).top() == 0);
  CHECK(LinearOrder({2, 0, 1}).prefers(2, 1));
  CHECK_FALSE(LinearOrder({2, 0, 1}).prefers(1, 2));
  CHECK_THROWS_AS(LinearOrder({0, 1, 2}).prefers(1, 1), std::invalid_argument);

  int with_0_over_1 = 0;
  for (long long r = 0; r < factorial(3); ++r) {
    const LinearOrder o = order_of_rank(r, 3);
    if (o.prefers(0, 1)) ++with_0_over_1;
    for (int b = 0; b < 3; ++b)
      if (b != o.top()) CHECK(o.prefers(o.top(), b));
  }
  CHECK(with_0_over_1 == 3);
}

TEST_CASE("improvement predicate") {
  const LinearOrder o({1, 0, 2});
  CHECK(o.is_improvement_for(o, 0));
  CHECK(LinearOrder({1, 0, 2}).is_improvement_for(LinearOrder({0, 1, 2}), 0));
  CHECK_FALSE(LinearOrder({0, 1, 2}).is_improvement_for(LinearOrder({1, 0, 2}), 0));
}

TEST_CASE("push_to_top") {
  CHECK(LinearOrder({1, 0, 2}).push_to_top(2) == LinearOrder({2, 1, 0}));
  CHECK(LinearOrder({0, 1, 2}).push_to_top(0) == LinearOrder({0, 1, 2}));
  for (long long r = 0; r < factorial(4); ++r) {
    const LinearOrder o = order_of_rank(r, 4);
    for (int a = 0; a < 4; ++a) CHECK(o.is_improvement_for(o.push_to_top(a), a));
  }
}

TEST_CASE("monotonicity checker") {
  CHECK_FALSE(check_monotonic(SocialChoiceFunction::dictatorship(3, 2, 0)).has_value());
  CHECK_FALSE(check_monotonic(SocialChoiceFunction::constant(3, 2, 0)).has_value());

  const auto cex = check_monotonic(SocialChoiceFunction::plurality_lex(3, 2));
  REQUIRE(cex.has_value());
  // Lexicographically least counterexample, frozen from an exhaustive scan
  // over all 36 x 36 ordered profile pairs.
  CHECK(cex->before == Profile{{LinearOrder({1, 0, 2}), LinearOrder({2, 0, 1})}});
  CHECK(cex->after == Profile{{LinearOrder({1, 0, 2}), LinearOrder({0, 1, 2})}});
  // Revalidate.
  const auto f = SocialChoiceFunction::plurality_lex(3, 2);
  const int a = f.choose(cex->before);
  for (int l = 0; l < 2; ++l)
    CHECK(cex->before.orders[l].is_improvement_for(cex->after.orders[l], a));
  CHECK(f.choose(cex->after) != a);
}

TEST_CASE("unanimity checker") {
  for (int l = 0; l < 2; ++l)
    CHECK_FALSE(check_unanimous(SocialChoiceFunction::dictatorship(3, 2, l)).has_value());
  CHECK_FALSE(check_unanimous(SocialChoiceFunction::plurality_lex(3, 2)).has_value());
  CHECK_FALSE(check_unanimous(SocialChoiceFunction::borda_lex(3, 2)).has_value());

  const auto w = check_unanimous(SocialChoiceFunction::constant(3, 2, 0));
  REQUIRE(w.has_value());
  const int t = w->orders.front().top();
  CHECK(t != 0);
  for (const auto& o : w->orders) CHECK(o.top() == t);
}

TEST_CASE("strategy-proofness checker") {
  CHECK_FALSE(check_strategy_proof(SocialChoiceFunction::dictatorship(3, 2, 0)).has_value());
  CHECK_FALSE(check_strategy_proof(SocialChoiceFunction::constant(3, 2, 0)).has_value());

  const auto f = SocialChoiceFunction::plurality_lex(3, 2);
  const auto w = check_strategy_proof(f);
  REQUIRE(w.has_value());
  // Frozen from the exhaustive search over 36 profiles x 2 voters x 6 misreports.
  CHECK(w->profile == Profile{{LinearOrder({1, 0, 2}), LinearOrder({2, 0, 1})}});
  CHECK(w->voter == 1);
  CHECK(w->misreport == LinearOrder({0, 1, 2}));
  Profile lied = w->profile;
  lied.orders[w->voter] = w->misreport;
  CHECK(w->profile.orders[w->voter].prefers(f.choose(lied), f.choose(w->profile)));
}

TEST_CASE("surjectivity and dictator detection") {
  CHECK_FALSE(check_surjective(SocialChoiceFunction::constant(3, 2, 0)));
  CHECK(check_surjective(SocialChoiceFunction::dictatorship(3, 2, 1)));
  CHECK(check_surjective(SocialChoiceFunction::plurality_lex(3, 2)));

  for (int l = 0; l < 2; ++l)
    CHECK(dictator_of(SocialChoiceFunction::dictatorship(3, 2, l)) == l);
  CHECK_FALSE(dictator_of(SocialChoiceFunction::plurality_lex(3, 2)).has_value());
  CHECK_FALSE(dictator_of(SocialChoiceFunction::constant(3, 2, 0)).has_value());
}

TEST_CASE("axiom equivalence holds on fixtures and sampled tables") {
  CHECK(check_axiom_equivalence(SocialChoiceFunction::dictatorship(3, 2, 0)));
  CHECK(check_axiom_equivalence(SocialChoiceFunction::constant(3, 2, 0)));
  CHECK(check_axiom_equivalence(SocialChoiceFunction::plurality_lex(3, 2)));
  CHECK(check_axiom_equivalence(SocialChoiceFunction::borda_lex(3, 2)));
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    CHECK(check_axiom_equivalence(SocialChoiceFunction::random_table(3, 2, seed)));
}

TEST_CASE("scf table json round trip and validation") {
  const auto f = SocialChoiceFunction::plurality_lex(3, 2);
  const std::string path = "scf_roundtrip.json";
  {
    std::ofstream out(path);
    out << scf_table_to_json(f);
  }
  const auto g = load_scf_table_json(path);
  for (long long r = 0; r < profile_count(3, 2); ++r) CHECK(g.choose_rank(r) == f.choose_rank(r));

  {
    std::ofstream out(path);
    out << R"({"n":3,"N":2,"entries":[{"profile":[[0,1,2],[0,1,2]],"choice":0}]})";
  }
  CHECK_THROWS_WITH_AS(load_scf_table_json(path), doctest::Contains("not total"),
                       std::runtime_error);
}
