#include "kancat/mixed.hpp"

#include <algorithm>
#include <random>

namespace kancat {

  namespace detail {
    void set_status(MixedSystem& sys, Status s) noexcept {
      sys._status = s;
      set_status(sys._e, s);
    }
  }  // namespace detail

  MixedSystem::MixedSystem(TaggedOrderPtr order)
      : _order(std::move(order)), _e(_order->base_handle()) {}

  MixedSystem::MixedSystem(TaggedOrderPtr                       order,
                           std::vector<PathPolynomial> const&   untagged,
                           std::vector<TaggedPolynomial> const& tagged)
      : MixedSystem(std::move(order)) {
    for (auto const& f : untagged) {
      add(f);
    }
    for (auto const& f : tagged) {
      add(f);
    }
  }

  bool MixedSystem::add(PathPolynomial const& relation) {
    bool added = _e.add(relation);
    if (added) {
      _status = Status::candidate;
    }
    return added;
  }

  bool MixedSystem::add(TaggedPolynomial const& relation) {
    if (relation.is_zero()) {
      return false;
    }
    if (&relation.order() != _order.get()) {
      throw Error(ErrorKind::type_mismatch,
                  "tagged relation uses a different tagged order");
    }
    _eps.emplace_back(relation);
    _status = Status::candidate;
    return true;
  }

  namespace {

    bool is_prefix(Path const& p, Path const& of) {
      return p.length() <= of.length()
             && std::equal(p.arrows().begin(), p.arrows().end(), of.arrows().begin());
    }

    struct TaggedOccurrence {
      bool        tagged;    // which list `rule` indexes
      std::size_t rule;
      std::size_t position;  // 0 for tagged rules
    };

    std::optional<TaggedOccurrence> first_tagged_occurrence(
        MixedSystem const& sys,
        TaggedTerm const&  t,
        std::size_t        skip_e   = SIZE_MAX,
        std::size_t        skip_eps = SIZE_MAX) {
      if (auto occ
          = first_occurrence(sys.delta(), sys.e_rules().rules(), t.path, skip_e)) {
        return TaggedOccurrence{false, occ->rule, occ->position};
      }
      auto const& eps = sys.eps_rules();
      for (std::size_t j = 0; j < eps.size(); ++j) {
        if (j != skip_eps && eps[j].lt().tag == t.tag
            && is_prefix(eps[j].lt().path, t.path)) {
          return TaggedOccurrence{true, j, 0};
        }
      }
      return std::nullopt;
    }

    std::vector<TaggedOccurrence> all_tagged_occurrences(MixedSystem const& sys,
                                                         TaggedTerm const&  t) {
      std::vector<TaggedOccurrence> out;
      for (auto occ : all_occurrences(sys.delta(), sys.e_rules().rules(), t.path)) {
        out.push_back(TaggedOccurrence{false, occ.rule, occ.position});
      }
      auto const& eps = sys.eps_rules();
      for (std::size_t j = 0; j < eps.size(); ++j) {
        if (eps[j].lt().tag == t.tag && is_prefix(eps[j].lt().path, t.path)) {
          out.push_back(TaggedOccurrence{true, j, 0});
        }
      }
      return out;
    }

    // The polynomial `t` is replaced by (negated), or the whole rule times
    // its multipliers when `whole` is set.
    TaggedPolynomial apply(MixedSystem const&      sys,
                           TaggedTerm const&       t,
                           TaggedOccurrence const& occ,
                           bool                    whole) {
      auto const& q = sys.delta();
      if (occ.tagged) {
        auto const& rule = sys.eps_rules()[occ.rule];
        auto        y    = t.path.subpath(q, rule.lt().path.length(), t.path.length());
        return multiply(whole ? rule.poly() : rule.rem(), y);
      }
      auto const& rule = sys.e_rules().rules()[occ.rule];
      auto        end  = occ.position + rule.lt().length();
      return multiply(sys.order_handle(),
                      TaggedTerm{t.tag, t.path.subpath(q, 0, occ.position)},
                      whole ? rule.poly() : rule.rem(),
                      t.path.subpath(q, end, t.path.length()));
    }

    TaggedPolynomial reduce_mixed(TaggedPolynomial const& f,
                                  MixedSystem const&      sys,
                                  std::size_t             skip_e,
                                  std::size_t             skip_eps) {
      return detail::reduce_fully(
          f, [&](TaggedTerm const& t) -> std::optional<TaggedPolynomial> {
            if (auto occ = first_tagged_occurrence(sys, t, skip_e, skip_eps)) {
              return apply(sys, t, *occ, false);
            }
            return std::nullopt;
          });
    }

  }  // namespace

  std::optional<TaggedPolynomial> reduce_once(TaggedPolynomial const& f,
                                              MixedSystem const&      sys) {
    for (auto const& [t, c] : f.terms()) {
      if (auto occ = first_tagged_occurrence(sys, t)) {
        TaggedPolynomial g = f;
        g.add_multiple(-c, apply(sys, t, *occ, true));
        return g;
      }
    }
    return std::nullopt;
  }

  TaggedPolynomial normal_form(TaggedPolynomial const& f, MixedSystem const& sys) {
    return reduce_mixed(f, sys, SIZE_MAX, SIZE_MAX);
  }

  TaggedPolynomial normal_form_random(TaggedPolynomial const& f,
                                      MixedSystem const&      sys,
                                      std::uint64_t           seed) {
    std::mt19937_64  rng(seed);
    TaggedPolynomial g     = f;
    std::size_t      steps = 0;
    while (true) {
      std::vector<std::size_t> reducible;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (first_tagged_occurrence(sys, g.terms()[i].first)) {
          reducible.push_back(i);
        }
      }
      if (reducible.empty()) {
        return g;
      }
      if (++steps > detail::max_reduction_steps) {
        throw Error(ErrorKind::internal_limit, "reduction did not terminate");
      }
      auto pick = reducible[std::uniform_int_distribution<std::size_t>(
          0, reducible.size() - 1)(rng)];
      auto [t, c] = g.terms()[pick];
      auto occs   = all_tagged_occurrences(sys, t);
      auto occ    = occs[std::uniform_int_distribution<std::size_t>(
          0, occs.size() - 1)(rng)];
      g.add_multiple(-c, apply(sys, t, occ, true));
    }
  }

  bool is_irreducible(TaggedTerm const& t, MixedSystem const& sys) {
    return !first_tagged_occurrence(sys, t).has_value();
  }

  std::vector<TaggedMatch> find_tagged_matches(MixedSystem const& sys) {
    auto const&              q   = sys.delta();
    auto const&              e   = sys.e_rules().rules();
    auto const&              eps = sys.eps_rules();
    std::vector<TaggedMatch> out;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      Path const& p  = eps[i].lt().path;
      auto const  np = p.length();
      for (std::size_t j = 0; j < e.size(); ++j) {
        Path const& l  = e[j].lt();
        auto const  nl = l.length();
        std::size_t from = 0;
        while (auto pos = find_subpath(q, l, p, from)) {
          out.push_back(TaggedMatch{i,
                                    j,
                                    TaggedMatchKind::untagged_inside,
                                    Path::identity(p.tgt()),
                                    p.subpath(q, 0, *pos),
                                    p.subpath(q, *pos + nl, np)});
          from = *pos + 1;
        }
        // The last k arrows of p are the first k of l, with l sticking out.
        for (std::size_t k = 1; k <= np && k < nl; ++k) {
          if (std::equal(p.arrows().end() - static_cast<std::ptrdiff_t>(k),
                         p.arrows().end(),
                         l.arrows().begin())) {
            out.push_back(TaggedMatch{i,
                                      j,
                                      TaggedMatchKind::untagged_overlap,
                                      l.subpath(q, k, nl),
                                      p.subpath(q, 0, np - k),
                                      Path::identity(l.tgt())});
          }
        }
      }
      for (std::size_t j = 0; j < eps.size(); ++j) {
        if (i == j || eps[i].lt().tag != eps[j].lt().tag) {
          continue;
        }
        Path const& r = eps[j].lt().path;
        if (is_prefix(p, r)) {
          out.push_back(TaggedMatch{i,
                                    j,
                                    TaggedMatchKind::tagged_prefix,
                                    r.subpath(q, np, r.length()),
                                    Path::identity(p.src()),
                                    Path::identity(r.tgt())});
        }
      }
    }
    return out;
  }

  TaggedPolynomial s_polynomial(MixedSystem const& sys, TaggedMatch const& m) {
    auto const& ri   = sys.eps_rules()[m.tagged];
    auto        left = multiply(ri.poly(), m.s);
    if (m.kind == TaggedMatchKind::tagged_prefix) {
      return left - multiply(sys.eps_rules()[m.other].poly(), m.y);
    }
    return left
           - multiply(sys.order_handle(),
                      TaggedTerm{ri.lt().tag, m.x},
                      sys.e_rules().rules()[m.other].poly(),
                      m.y);
  }

  bool check_groebner(MixedSystem const& sys) {
    if (!check_groebner(sys.e_rules())) {
      return false;
    }
    for (auto const& m : find_tagged_matches(sys)) {
      if (!normal_form(s_polynomial(sys, m), sys).is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool is_groebner(MixedSystem& sys) {
    bool ok = check_groebner(sys);
    if (ok) {
      detail::set_status(sys, Status::complete);
    }
    return ok;
  }

  bool interreduce(MixedSystem& sys) {
    bool changed = interreduce(sys._e);
    bool again   = true;
    while (again) {
      again = false;
      for (std::size_t i = 0; i < sys._eps.size(); ++i) {
        auto nf = reduce_mixed(sys._eps[i].poly(), sys, SIZE_MAX, i);
        if (nf == sys._eps[i].poly()) {
          continue;
        }
        changed = again = true;
        if (nf.is_zero()) {
          sys._eps.erase(sys._eps.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          sys._eps[i] = TaggedRule(nf);
        }
        break;
      }
    }
    if (changed) {
      sys._status = Status::candidate;
    }
    return changed;
  }

  MixedCompletionReport complete_mixed(MixedSystem sys, Limits const& limits) {
    MixedCompletionReport report{Outcome::incomplete, std::move(sys), {}, {}, 0, 0};
    auto&                 work = report.system;

    auto over_limit = [&](std::size_t degree) -> bool {
      if (work.size() > limits.max_rules) {
        report.reason = "rule limit exceeded: " + std::to_string(work.size())
                        + " rules > max-rules " + std::to_string(limits.max_rules);
        return true;
      }
      if (degree > limits.max_degree) {
        report.reason = "degree limit exceeded: new leading term of length "
                        + std::to_string(degree) + " > max-degree "
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
      for (auto const& m : find_matches(work.e_rules())) {
        ++report.spolys_examined;
        auto nf = normal_form(s_polynomial(work.e_rules(), m), work.e_rules());
        if (nf.is_zero()) {
          continue;
        }
        work.add(nf);
        auto const& rule = work.e_rules().rules().back();
        report.added.emplace_back(rule);
        added_any = true;
        if (over_limit(rule.lt().length())) {
          return report;
        }
      }
      for (auto const& m : find_tagged_matches(work)) {
        ++report.spolys_examined;
        auto nf = normal_form(s_polynomial(work, m), work);
        if (nf.is_zero()) {
          continue;
        }
        work.add(nf);
        auto const& rule = work.eps_rules().back();
        report.added.emplace_back(rule);
        added_any = true;
        if (over_limit(rule.lt().path.length())) {
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
