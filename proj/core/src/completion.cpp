#include "kancat/completion.hpp"

#include <algorithm>

namespace kancat {

  std::vector<Match> find_matches(RewriteSystem const& sys) {
    auto const&        q     = sys.quiver();
    auto const&        rules = sys.rules();
    std::vector<Match> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Path const& a = rules[i].lt();
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Path const& b = rules[j].lt();
        std::size_t from = 0;
        while (auto pos = find_subpath(q, a, b, from)) {
          if (i != j) {
            out.push_back(Match{i,
                                j,
                                MatchKind::containment,
                                b.subpath(q, 0, *pos),
                                b.subpath(q, *pos + a.length(), b.length()),
                                Path::identity(b.src()),
                                Path::identity(b.tgt())});
          }
          from = *pos + 1;
        }
        // Overlap of k arrows: a = x·w, b = w·y with |w| = k; offset is |x|.
        auto const na = a.length();
        auto const nb = b.length();
        for (std::size_t offset = 1; offset < na; ++offset) {
          auto const k = na - offset;
          if (k >= nb) {
            continue;
          }
          if (std::equal(a.arrows().begin() + offset,
                         a.arrows().end(),
                         b.arrows().begin())) {
            out.push_back(Match{i,
                                j,
                                MatchKind::left_overlap,
                                Path::identity(a.src()),
                                b.subpath(q, k, nb),
                                a.subpath(q, 0, offset),
                                Path::identity(b.tgt())});
          }
        }
      }
    }
    return out;
  }

  Path superposition(RewriteSystem const& sys, Match const& m) {
    auto const& lt = sys.rules()[m.rule1].lt();
    return compose(compose(m.u1, lt), m.v1);
  }

  PathPolynomial s_polynomial(RewriteSystem const& sys, Match const& m) {
    auto const& r1 = sys.rules()[m.rule1].poly();
    auto const& r2 = sys.rules()[m.rule2].poly();
    return multiply(m.u1, r1, m.v1) - multiply(m.u2, r2, m.v2);
  }

  bool check_groebner(RewriteSystem const& sys) {
    for (auto const& m : find_matches(sys)) {
      if (!normal_form(s_polynomial(sys, m), sys).is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool is_groebner(RewriteSystem& sys) {
    bool ok = check_groebner(sys);
    if (ok) {
      detail::set_status(sys, Status::complete);
    }
    return ok;
  }

  bool interreduce(RewriteSystem& sys) {
    auto const& q       = sys.quiver();
    bool        changed = false;
    std::size_t rounds  = 0;
    bool        again   = true;
    while (again) {
      again = false;
      if (++rounds > detail::max_reduction_steps) {
        throw Error(ErrorKind::internal_limit, "interreduction did not terminate");
      }
      for (std::size_t i = 0; i < sys.size(); ++i) {
        auto const rules = std::span<Rule const>(sys.rules());
        auto nf = detail::reduce_fully(
            rules[i].poly(), [&](Path const& t) -> std::optional<PathPolynomial> {
              if (auto occ = first_occurrence(q, rules, t, i)) {
                return replacement(q, rules, t, *occ);
              }
              return std::nullopt;
            });
        if (nf == rules[i].poly()) {
          continue;
        }
        changed = true;
        again   = true;
        if (nf.is_zero()) {
          sys.erase(i);
        } else {
          sys.replace(i, Rule(nf));
        }
        break;
      }
    }
    return changed;
  }

  CompletionReport buchberger(RewriteSystem sys, Limits const& limits) {
    CompletionReport report{Outcome::incomplete, std::move(sys), {}, {}, 0, 0};
    auto&            work = report.system;

    auto over_limit = [&](Rule const& added) -> bool {
      if (work.size() > limits.max_rules) {
        report.reason = "rule limit exceeded: " + std::to_string(work.size())
                        + " rules > max-rules " + std::to_string(limits.max_rules);
        return true;
      }
      if (added.lt().length() > limits.max_degree) {
        report.reason = "degree limit exceeded: new leading term of length "
                        + std::to_string(added.lt().length()) + " > max-degree "
                        + std::to_string(limits.max_degree);
        return true;
      }
      return false;
    };

    if (work.size() > limits.max_rules) {
      report.reason = "rule limit exceeded by the input";
      return report;
    }
    while (true) {
      if (report.passes == limits.max_passes) {
        report.reason = "pass limit reached: max-passes "
                        + std::to_string(limits.max_passes);
        return report;
      }
      ++report.passes;
      bool added_any = false;
      for (auto const& m : find_matches(work)) {
        ++report.spolys_examined;
        auto nf = normal_form(s_polynomial(work, m), work);
        if (nf.is_zero()) {
          continue;
        }
        work.add(nf);
        report.added.push_back(work.rules().back());
        added_any = true;
        if (over_limit(work.rules().back())) {
          return report;
        }
      }
      bool changed = interreduce(work);
      if (!added_any && !changed) {
        detail::set_status(work, Status::complete);
        report.outcome = Outcome::complete;
        return report;
      }
    }
  }

}  // namespace kancat
