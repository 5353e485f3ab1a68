#ifndef KANCAT_COMPLETION_HPP_
#define KANCAT_COMPLETION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "kancat/rewrite.hpp"

namespace kancat {

  enum class MatchKind { left_overlap, containment };

  // u1 * lt(rule1) * v1 == u2 * lt(rule2) * v2, the superposition.
  //
  // left_overlap: a proper suffix of lt(rule1) is a proper prefix of
  // lt(rule2), so u1 and v2 are identities. containment: lt(rule1) sits
  // inside lt(rule2), so u2 and v2 are identities.
  struct Match {
    std::size_t rule1;
    std::size_t rule2;
    MatchKind   kind;
    Path        u1;
    Path        v1;
    Path        u2;
    Path        v2;
  };

  // All overlaps and containments between ordered pairs of rules, including
  // a rule with itself (except the full coincidence). Ordered by rule1, then
  // rule2, containments before overlaps, then by offset.
  std::vector<Match> find_matches(RewriteSystem const& sys);

  Path superposition(RewriteSystem const& sys, Match const& m);

  // u1 * r1 * v1 - u2 * r2 * v2.
  PathPolynomial s_polynomial(RewriteSystem const& sys, Match const& m);

  // Whether every S-polynomial reduces to zero. Does not touch the status.
  bool check_groebner(RewriteSystem const& sys);

  // As check_groebner, and marks the system Complete when it succeeds.
  bool is_groebner(RewriteSystem& sys);

  struct Limits {
    std::size_t max_rules  = 1000;
    std::size_t max_degree = 50;
    std::size_t max_passes = 100;
  };

  enum class Outcome { complete, incomplete };

  template <typename System>
  struct BasicCompletionReport {
    using rule_type = typename System::rule_type;

    Outcome     outcome = Outcome::incomplete;
    System      system;
    std::string reason;  // empty when complete
    // Every rule appended during completion, in order, as first added.
    std::vector<rule_type> added;
    std::size_t            passes          = 0;
    std::size_t            spolys_examined = 0;

    bool is_complete() const noexcept {
      return outcome == Outcome::complete;
    }
  };

  using CompletionReport = BasicCompletionReport<RewriteSystem>;

  // Buchberger completion. Each pass reduces every S-polynomial of the
  // current system against the current system (rules added during a pass
  // are used at once), appends nonzero normal forms as monic rules, then
  // interreduces. Stops Complete when a pass changes nothing, Incomplete
  // when a limit trips. Never throws for a limit.
  CompletionReport buchberger(RewriteSystem sys, Limits const& limits = {});

  // Reduces each rule by the others until stable; rules that reduce to zero
  // are dropped. Returns whether anything changed.
  bool interreduce(RewriteSystem& sys);

}  // namespace kancat

#endif  // KANCAT_COMPLETION_HPP_
