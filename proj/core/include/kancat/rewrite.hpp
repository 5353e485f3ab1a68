#ifndef KANCAT_REWRITE_HPP_
#define KANCAT_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "kancat/polynomial.hpp"

namespace kancat {

  // A monic relation oriented by its leading term: lt -> -rem.
  template <typename Traits>
  class BasicRule {
   public:
    using poly_type = LinearCombination<Traits>;
    using term_type = typename Traits::term_type;

    // Divides by the leading coefficient; throws ZeroPolynomial.
    explicit BasicRule(poly_type const& poly)
        : _poly(poly.monic()), _rem(_poly.remainder()) {}

    poly_type const& poly() const noexcept {
      return _poly;
    }
    term_type const& lt() const noexcept {
      return _poly.leading_path();
    }
    poly_type const& rem() const noexcept {
      return _rem;
    }

    friend bool operator==(BasicRule const& a, BasicRule const& b) {
      return a._poly == b._poly;
    }

   private:
    poly_type _poly;
    poly_type _rem;
  };

  using Rule = BasicRule<PathTerms>;

  enum class Status { candidate, complete };

  class RewriteSystem;
  class MixedSystem;

  namespace detail {
    void set_status(RewriteSystem& sys, Status s) noexcept;
    void set_status(MixedSystem& sys, Status s) noexcept;
  }  // namespace detail

  // Oriented monic relations over one quiver and order. The status only
  // becomes Complete through the completion routines.
  class RewriteSystem {
   public:
    using rule_type = Rule;

    explicit RewriteSystem(OrderPtr order) : _order(std::move(order)) {}

    // Zero relations are dropped; the rest are made monic.
    RewriteSystem(OrderPtr order, std::vector<PathPolynomial> const& relations);

    PathOrder const& order() const noexcept {
      return *_order;
    }
    OrderPtr const& order_handle() const noexcept {
      return _order;
    }
    Quiver const& quiver() const noexcept {
      return _order->quiver();
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }
    std::size_t size() const noexcept {
      return _rules.size();
    }
    Status status() const noexcept {
      return _status;
    }
    bool is_complete() const noexcept {
      return _status == Status::complete;
    }

    // Appends a relation (made monic, re-sorted under this system's order)
    // and resets the status. Zero relations are ignored; returns whether a
    // rule was added.
    bool add(PathPolynomial const& relation);

    void replace(std::size_t i, Rule rule);
    void erase(std::size_t i);

    friend bool operator==(RewriteSystem const& a, RewriteSystem const& b) {
      return a._rules == b._rules && a._status == b._status;
    }

   private:
    friend void detail::set_status(RewriteSystem&, Status) noexcept;

    OrderPtr          _order;
    std::vector<Rule> _rules;
    Status            _status = Status::candidate;
  };

  // Where a rule's leading term sits inside a path.
  struct Occurrence {
    std::size_t rule;
    std::size_t position;
  };

  // The deterministic choice: lowest rule index, then leftmost occurrence.
  std::optional<Occurrence> first_occurrence(Quiver const&          q,
                                             std::span<Rule const> rules,
                                             Path const&           term,
                                             std::size_t skip_rule = SIZE_MAX);

  // Every (rule, position) pair, by rule then position.
  std::vector<Occurrence> all_occurrences(Quiver const&          q,
                                          std::span<Rule const> rules,
                                          Path const&           term);

  // u * rem(r) * v for the occurrence u * lt(r) * v == term; the term is
  // congruent to the negation of this.
  PathPolynomial replacement(Quiver const&         q,
                             std::span<Rule const> rules,
                             Path const&           term,
                             Occurrence            occ);

  // One step of the reduction relation, rewriting the greatest reducible
  // term. Empty when f is irreducible.
  std::optional<PathPolynomial> reduce_once(PathPolynomial const& f,
                                            RewriteSystem const&  sys);

  // Repeated reduce_once to a fixed point.
  PathPolynomial normal_form(PathPolynomial const& f, RewriteSystem const& sys);

  // As normal_form, but each step picks a reducible term, rule and
  // occurrence uniformly at random.
  PathPolynomial normal_form_random(PathPolynomial const& f,
                                    RewriteSystem const&  sys,
                                    std::uint64_t         seed);

  // Decides f =_R h. Refuses (NotComplete) on a candidate system unless
  // `semidecide` is set, in which case `true` is still sound but `false`
  // may be wrong. Throws TypeMismatch.
  bool is_congruent(PathPolynomial const& f,
                    PathPolynomial const& h,
                    RewriteSystem const&  sys,
                    bool                  semidecide = false);

  bool is_irreducible(Path const& p, RewriteSystem const& sys);

  namespace detail {

    inline constexpr std::size_t max_reduction_steps = 50'000'000;

    // Reduces the greatest reducible term until none is left. `find` maps a
    // term to its replacement (see `replacement`) or nullopt.
    template <typename Traits, typename Find>
    LinearCombination<Traits> reduce_fully(LinearCombination<Traits> work, Find&& find) {
      using entry_type = typename LinearCombination<Traits>::entry_type;
      std::vector<entry_type> done;
      auto const              order = work.order_handle();
      auto const              shape = work.shape();
      std::size_t             steps = 0;
      while (!work.is_zero()) {
        auto [t, c] = work.leading_term();
        auto rep    = find(t);
        work        = work.remainder();
        if (!rep) {
          done.emplace_back(std::move(t), std::move(c));
          continue;
        }
        if (++steps > max_reduction_steps) {
          throw Error(ErrorKind::internal_limit, "reduction did not terminate");
        }
        work.add_multiple(-c, *rep);
      }
      return LinearCombination<Traits>::from_sorted(order, shape, std::move(done));
    }

  }  // namespace detail

}  // namespace kancat

#endif  // KANCAT_REWRITE_HPP_
