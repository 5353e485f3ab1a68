#include <gtest/gtest.h>

#include "kancat/completion.hpp"
#include "support/fixtures.hpp"

using namespace kancat;
using support::load;
using support::path;
using support::poly;

namespace {

  RewriteSystem system_of(Presentation const& p, std::initializer_list<char const*> rels) {
    RewriteSystem sys(p.order);
    for (auto r : rels) {
      sys.add(poly(p, r));
    }
    return sys;
  }

}  // namespace

TEST(FindMatches, IdempotentSelfOverlap) {
  auto p   = load("hecke.kan");
  auto sys = system_of(p, {"e1*e1 - e1"});
  auto ms  = find_matches(sys);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].kind, MatchKind::left_overlap);
  EXPECT_EQ(superposition(sys, ms[0]), path(p, "e1*e1*e1"));
  auto s = s_polynomial(sys, ms[0]);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.shape(), (HomType{ObjectId{0}, ObjectId{0}}));
}

TEST(FindMatches, CommutationAgainstIdempotent) {
  auto p   = load("hecke.kan");
  auto sys = system_of(p, {"e3*e1 - e1*e3", "e1*e1 - e1"});
  auto ms  = find_matches(sys);
  bool found = false;
  for (auto const& m : ms) {
    if (m.rule1 == 0 && m.rule2 == 1) {
      found = true;
      EXPECT_EQ(m.kind, MatchKind::left_overlap);
      EXPECT_EQ(superposition(sys, m), path(p, "e3*e1*e1"));
      auto s = s_polynomial(sys, m);
      EXPECT_EQ(s, poly(p, "e3*e1 - e1*e3*e1"));
      EXPECT_TRUE(normal_form(s, sys).is_zero());
    }
  }
  EXPECT_TRUE(found);
}

TEST(FindMatches, DisjointLeadingTerms) {
  auto p   = load("hecke.kan");
  auto sys = system_of(p, {"e2*e1 - 1", "e3 - e1"});
  EXPECT_TRUE(find_matches(sys).empty());
}

TEST(FindMatches, Containment) {
  auto p   = load("five-objects.kan");
  auto sys = p.system();
  bool found = false;
  for (auto const& m : find_matches(sys)) {
    if (m.kind == MatchKind::containment) {
      found = true;
      // fg inside efg.
      EXPECT_EQ(superposition(sys, m), path(p, "e*f*g"));
      EXPECT_EQ(normal_form(s_polynomial(sys, m), sys), poly(p, "a*b*c - e*j + d"));
    }
  }
  EXPECT_TRUE(found);
}

TEST(SPolynomial, LeadingWordCancels) {
  auto p   = load("hecke.kan");
  auto sys = p.system();
  for (auto const& m : find_matches(sys)) {
    auto s = s_polynomial(sys, m);
    EXPECT_TRUE(s.coefficient(superposition(sys, m)).is_zero());
  }
}

TEST(IsGroebner, EmptySystem) {
  auto          p = load("hecke.kan");
  RewriteSystem sys(p.order);
  EXPECT_TRUE(is_groebner(sys));
  EXPECT_TRUE(sys.is_complete());
}

TEST(IsGroebner, HeckeRelationsAreNot) {
  auto p   = load("hecke.kan");
  auto sys = p.system();
  EXPECT_FALSE(is_groebner(sys));
  EXPECT_FALSE(sys.is_complete());
}

TEST(IsGroebner, FiveObjectsRelationsAreNot) {
  auto p   = load("five-objects.kan");
  auto sys = p.system();
  EXPECT_FALSE(is_groebner(sys));
}

TEST(Buchberger, Hecke) {
  auto p = load("hecke.kan");
  auto r = buchberger(p.system());
  ASSERT_TRUE(r.is_complete()) << r.reason;
  ASSERT_EQ(r.added.size(), 1u);
  EXPECT_EQ(r.added[0].poly(),
            poly(p, "e3*e2*e1*e3 - e2*e3*e2*e1 - 2/9 e2*e1 + 2/9 e1*e3"));
  EXPECT_EQ(r.system.size(), 7u);
  EXPECT_TRUE(r.reason.empty());
  EXPECT_TRUE(check_groebner(r.system));
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.system.rules()[i].poly(), monic(p.relations[i]));
  }
}

TEST(Buchberger, FiveObjects) {
  auto p = load("five-objects.kan");
  auto r = buchberger(p.system());
  ASSERT_TRUE(r.is_complete()) << r.reason;
  ASSERT_EQ(r.added.size(), 1u);
  EXPECT_EQ(r.added[0].poly(), poly(p, "a*b*c - e*j + d"));
  // The efg rule becomes reducible by abc - ej + d and fg - j and is dropped.
  ASSERT_EQ(r.system.size(), 5u);
  EXPECT_EQ(r.system.rules()[2].poly(), poly(p, "h*g - a*c - d"));
  EXPECT_TRUE(check_groebner(r.system));
  // The dropped relation is still a consequence.
  EXPECT_TRUE(normal_form(p.relations[2], r.system).is_zero());
}

TEST(Buchberger, EmptySystem) {
  auto p = load("hecke.kan");
  auto r = buchberger(RewriteSystem(p.order));
  EXPECT_TRUE(r.is_complete());
  EXPECT_EQ(r.passes, 1u);
  EXPECT_TRUE(r.added.empty());
}

TEST(Buchberger, Deterministic) {
  auto p = load("hecke.kan");
  auto a = buchberger(p.system());
  auto b = buchberger(p.system());
  EXPECT_EQ(a.system, b.system);
  EXPECT_EQ(a.passes, b.passes);
  EXPECT_EQ(a.spolys_examined, b.spolys_examined);
}

TEST(Buchberger, RuleLimit) {
  auto p = load("runaway.kan");
  auto r = buchberger(p.system(), Limits{20, 50, 100});
  EXPECT_FALSE(r.is_complete());
  EXPECT_EQ(r.outcome, Outcome::incomplete);
  EXPECT_NE(r.reason.find("max-rules"), std::string::npos);
  EXPECT_FALSE(r.added.empty());
  EXPECT_EQ(r.system.status(), Status::candidate);
}

TEST(Buchberger, DegreeAndPassLimits) {
  auto p = load("runaway.kan");
  auto d = buchberger(p.system(), Limits{1000, 6, 100});
  EXPECT_FALSE(d.is_complete());
  EXPECT_NE(d.reason.find("max-degree"), std::string::npos);
  auto s = buchberger(p.system(), Limits{1000, 50, 3});
  EXPECT_FALSE(s.is_complete());
  EXPECT_NE(s.reason.find("max-passes"), std::string::npos);
  EXPECT_LE(s.passes, 3u);
}

TEST(Buchberger, RunawayFamily) {
  auto p = load("runaway.kan");
  auto r = buchberger(p.system(), Limits{6, 50, 100});
  // y x^n y x - x y x x^(n-1) y ... : every added rule starts with y x x.
  for (auto const& rule : r.added) {
    auto s = to_string(*p.delta, rule.lt());
    EXPECT_EQ(s.rfind("y*x*x", 0), 0u) << s;
  }
}

TEST(Interreduce, DropsConsequences) {
  auto p   = load("hecke.kan");
  auto sys = system_of(p, {"e1*e1 - e1", "e1*e1*e1 - e1"});
  EXPECT_TRUE(interreduce(sys));
  ASSERT_EQ(sys.size(), 1u);
  EXPECT_FALSE(interreduce(sys));
}

TEST(Interreduce, RewritesRemainders) {
  auto p   = load("hecke.kan");
  auto sys = system_of(p, {"e3*e3 - e1*e1", "e1*e1 - e1"});
  EXPECT_TRUE(interreduce(sys));
  EXPECT_EQ(sys.rules()[0].poly(), poly(p, "e3*e3 - e1"));
}
