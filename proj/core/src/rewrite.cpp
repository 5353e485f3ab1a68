#include "kancat/rewrite.hpp"

namespace kancat {

  namespace detail {
    void set_status(RewriteSystem& sys, Status s) noexcept {
      sys._status = s;
    }
  }  // namespace detail

  RewriteSystem::RewriteSystem(OrderPtr order,
                               std::vector<PathPolynomial> const& relations)
      : _order(std::move(order)) {
    for (auto const& r : relations) {
      add(r);
    }
  }

  bool RewriteSystem::add(PathPolynomial const& relation) {
    if (&relation.order().quiver() != &quiver()) {
      throw Error(ErrorKind::type_mismatch,
                  "relation is over a different quiver");
    }
    if (relation.is_zero()) {
      return false;
    }
    if (relation.order_handle() == _order) {
      _rules.emplace_back(relation);
    } else {
      _rules.emplace_back(relation.reordered(_order));
    }
    _status = Status::candidate;
    return true;
  }

  void RewriteSystem::replace(std::size_t i, Rule rule) {
    _rules.at(i) = std::move(rule);
    _status      = Status::candidate;
  }

  void RewriteSystem::erase(std::size_t i) {
    _rules.erase(_rules.begin() + static_cast<std::ptrdiff_t>(i));
    _status = Status::candidate;
  }

  std::optional<Occurrence> first_occurrence(Quiver const&         q,
                                             std::span<Rule const> rules,
                                             Path const&           term,
                                             std::size_t           skip_rule) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (i == skip_rule) {
        continue;
      }
      if (auto pos = find_subpath(q, rules[i].lt(), term)) {
        return Occurrence{i, *pos};
      }
    }
    return std::nullopt;
  }

  std::vector<Occurrence> all_occurrences(Quiver const&         q,
                                          std::span<Rule const> rules,
                                          Path const&           term) {
    std::vector<Occurrence> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::size_t from = 0;
      while (auto pos = find_subpath(q, rules[i].lt(), term, from)) {
        out.push_back(Occurrence{i, *pos});
        from = *pos + 1;
      }
    }
    return out;
  }

  PathPolynomial replacement(Quiver const&         q,
                             std::span<Rule const> rules,
                             Path const&           term,
                             Occurrence            occ) {
    auto const& rule = rules[occ.rule];
    auto const  end  = occ.position + rule.lt().length();
    return multiply(term.subpath(q, 0, occ.position),
                    rule.rem(),
                    term.subpath(q, end, term.length()));
  }

  std::optional<PathPolynomial> reduce_once(PathPolynomial const& f,
                                            RewriteSystem const&  sys) {
    auto const& q = sys.quiver();
    for (auto const& [t, c] : f.terms()) {
      if (auto occ = first_occurrence(q, sys.rules(), t)) {
        auto const& rule = sys.rules()[occ->rule];
        auto        u    = t.subpath(q, 0, occ->position);
        auto        v = t.subpath(q, occ->position + rule.lt().length(), t.length());
        PathPolynomial g = f;
        g.add_multiple(-c, multiply(u, rule.poly(), v));
        return g;
      }
    }
    return std::nullopt;
  }

  PathPolynomial normal_form(PathPolynomial const& f, RewriteSystem const& sys) {
    auto const& q     = sys.quiver();
    auto const  rules = std::span<Rule const>(sys.rules());
    return detail::reduce_fully(f, [&](Path const& t) -> std::optional<PathPolynomial> {
      if (auto occ = first_occurrence(q, rules, t)) {
        return replacement(q, rules, t, *occ);
      }
      return std::nullopt;
    });
  }

  PathPolynomial normal_form_random(PathPolynomial const& f,
                                    RewriteSystem const&  sys,
                                    std::uint64_t         seed) {
    std::mt19937_64 rng(seed);
    auto const&     q     = sys.quiver();
    auto const      rules = std::span<Rule const>(sys.rules());
    PathPolynomial  g     = f;
    std::size_t     steps = 0;
    while (true) {
      std::vector<std::size_t> reducible;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (first_occurrence(q, rules, g.terms()[i].first)) {
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
      auto occs   = all_occurrences(q, rules, t);
      auto occ    = occs[std::uniform_int_distribution<std::size_t>(
          0, occs.size() - 1)(rng)];
      auto const& rule = rules[occ.rule];
      g.add_multiple(-c,
                     multiply(t.subpath(q, 0, occ.position),
                              rule.poly(),
                              t.subpath(q, occ.position + rule.lt().length(), t.length())));
    }
  }

  bool is_congruent(PathPolynomial const& f,
                    PathPolynomial const& h,
                    RewriteSystem const&  sys,
                    bool                  semidecide) {
    if (!(f.shape() == h.shape())) {
      throw Error(ErrorKind::type_mismatch, "polynomials are not parallel");
    }
    if (!sys.is_complete() && !semidecide) {
      throw Error(ErrorKind::not_complete,
                  "congruence is only decidable with a complete system");
    }
    return normal_form(f - h, sys).is_zero();
  }

  bool is_irreducible(Path const& p, RewriteSystem const& sys) {
    return !first_occurrence(sys.quiver(), sys.rules(), p).has_value();
  }

}  // namespace kancat
