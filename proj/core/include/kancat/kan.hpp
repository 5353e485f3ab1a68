#ifndef KANCAT_KAN_HPP_
#define KANCAT_KAN_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "kancat/completion.hpp"
#include "kancat/mixed.hpp"
#include "kancat/nf_enum.hpp"

namespace kancat {

  // A functor F from the free category on gamma to the quotient of the free
  // K-category on delta by `relations`; the action M sends every object of
  // gamma to K[1] and every arrow to the identity.
  struct KanPresentation {
    std::shared_ptr<Quiver const> delta;
    std::shared_ptr<Quiver const> gamma;
    std::vector<PathPolynomial>   relations;
    std::vector<ObjectId>         f_obj;  // indexed by gamma object
    std::vector<PathPolynomial>   f_arr;  // indexed by gamma arrow

    // Throws InvalidPresentation.
    void validate() const;
  };

  // S_E = relations, S_eps = { src(q)|F(q) - tgt(q)|1 : q in gamma }.
  MixedSystem build_system(KanPresentation const& p, OrderPtr const& order);

  struct Fiber {
    ObjectId                object;
    std::vector<TaggedTerm> terms;  // exhaustive when finiteness.finite
    Finiteness              finiteness;
  };

  struct KanExtensionResult {
    MixedCompletionReport         report;
    std::vector<Fiber>            fibers;  // indexed by delta object
    std::vector<TaggedPolynomial> eps;     // indexed by gamma object

    MixedSystem const& mixed() const noexcept {
      return report.system;
    }
    std::size_t dimension() const;  // total, when every fiber is finite
    bool        is_finite() const;
  };

  // Throws Incomplete when completion stops at a limit. Infinite fibers are
  // listed up to len_bound.
  KanExtensionResult kan_extension(KanPresentation const& p,
                                   OrderPtr const&        order,
                                   std::size_t            len_bound,
                                   Limits const&          limits = {});

  TaggedPolynomial tagged_monomial(TaggedOrderPtr const& order,
                                   TagId                 tag,
                                   Path const&           p,
                                   Scalar const&         k = 1);

  // E(b): right multiplication followed by reduction.
  TaggedPolynomial act(KanExtensionResult const& res,
                       TaggedPolynomial const&   t,
                       PathPolynomial const&     b);
  TaggedPolynomial act(KanExtensionResult const& res,
                       TaggedTerm const&         t,
                       PathPolynomial const&     b);

  // Whether A|p and A|q have the same normal form. Without an explicit tag,
  // the first tag whose image is src(p) is used.
  bool congruent_mod_right(KanExtensionResult const& res,
                           PathPolynomial const&     p,
                           PathPolynomial const&     q,
                           std::optional<TagId>      tag = std::nullopt);

}  // namespace kancat

#endif  // KANCAT_KAN_HPP_
