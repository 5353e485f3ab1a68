#ifndef KANCAT_MIXED_HPP_
#define KANCAT_MIXED_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "kancat/completion.hpp"
#include "kancat/rewrite.hpp"
#include "kancat/tagged.hpp"

namespace kancat {

  using TaggedRule = BasicRule<TaggedTerms>;
  using MixedRule  = std::variant<Rule, TaggedRule>;

  // Untagged rules (relations of the target category) together with tagged
  // rules (generators of a right congruence). Tagged rules only ever match a
  // prefix of a tagged term with the same tag; untagged rules match anywhere
  // in the path part. Nothing is multiplied on the left of a tag.
  class MixedSystem {
   public:
    using rule_type = MixedRule;

    explicit MixedSystem(TaggedOrderPtr order);

    // Zero polynomials are dropped, the rest made monic.
    MixedSystem(TaggedOrderPtr                       order,
                std::vector<PathPolynomial> const&   untagged,
                std::vector<TaggedPolynomial> const& tagged);

    TaggedOrder const& order() const noexcept {
      return *_order;
    }
    TaggedOrderPtr const& order_handle() const noexcept {
      return _order;
    }
    Quiver const& delta() const noexcept {
      return _order->delta();
    }

    RewriteSystem const& e_rules() const noexcept {
      return _e;
    }
    std::vector<TaggedRule> const& eps_rules() const noexcept {
      return _eps;
    }
    std::size_t size() const noexcept {
      return _e.size() + _eps.size();
    }

    Status status() const noexcept {
      return _status;
    }
    bool is_complete() const noexcept {
      return _status == Status::complete;
    }

    bool add(PathPolynomial const& relation);
    bool add(TaggedPolynomial const& relation);

    friend bool operator==(MixedSystem const& a, MixedSystem const& b) {
      return a._e.rules() == b._e.rules() && a._eps == b._eps
             && a._status == b._status;
    }

   private:
    friend void detail::set_status(MixedSystem&, Status) noexcept;
    friend bool interreduce(MixedSystem& sys);

    TaggedOrderPtr          _order;
    RewriteSystem           _e;
    std::vector<TaggedRule> _eps;
    Status                  _status = Status::candidate;
  };

  // Deterministic strategy as for untagged reduction; untagged rules come
  // before tagged rules in the rule numbering.
  std::optional<TaggedPolynomial> reduce_once(TaggedPolynomial const& f,
                                              MixedSystem const&      sys);
  TaggedPolynomial normal_form(TaggedPolynomial const& f, MixedSystem const& sys);
  TaggedPolynomial normal_form_random(TaggedPolynomial const& f,
                                      MixedSystem const&      sys,
                                      std::uint64_t           seed);

  bool is_irreducible(TaggedTerm const& t, MixedSystem const& sys);

  enum class TaggedMatchKind {
    untagged_inside,   // an untagged leading term inside the tagged path
    untagged_overlap,  // a suffix of the tagged path is a prefix of it
    tagged_prefix,     // one tagged leading term is a prefix of the other
  };

  // Superposition between tagged rule `tagged` and rule `other` (untagged
  // unless kind == tagged_prefix):
  //   tagged_rule * s - (A|x) * untagged_rule * y, or
  //   tagged_rule * s - other_tagged_rule * y.
  struct TaggedMatch {
    std::size_t     tagged;
    std::size_t     other;
    TaggedMatchKind kind;
    Path            s;
    Path            x;
    Path            y;
  };

  std::vector<TaggedMatch> find_tagged_matches(MixedSystem const& sys);

  TaggedPolynomial s_polynomial(MixedSystem const& sys, TaggedMatch const& m);

  bool check_groebner(MixedSystem const& sys);
  bool is_groebner(MixedSystem& sys);

  // Untagged rules are interreduced among themselves, tagged rules against
  // everything else.
  bool interreduce(MixedSystem& sys);

  using MixedCompletionReport = BasicCompletionReport<MixedSystem>;

  // Buchberger completion of the mixed system. Each pass handles untagged
  // matches first, then tagged ones, then interreduces.
  MixedCompletionReport complete_mixed(MixedSystem sys, Limits const& limits = {});

}  // namespace kancat

#endif  // KANCAT_MIXED_HPP_
