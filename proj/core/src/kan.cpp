#include "kancat/kan.hpp"

#include <string>

namespace kancat {

  void KanPresentation::validate() const {
    auto fail = [](std::string const& msg) {
      throw Error(ErrorKind::invalid_presentation, msg);
    };
    if (!delta) {
      fail("missing target quiver");
    }
    if (!gamma) {
      fail("missing source quiver");
    }
    if (f_obj.size() != gamma->num_objects()) {
      fail("every source object needs an image");
    }
    if (f_arr.size() != gamma->num_arrows()) {
      fail("every source arrow needs an image");
    }
    for (auto o : f_obj) {
      if (o.value >= delta->num_objects()) {
        fail("object image out of range");
      }
    }
    for (auto const& r : relations) {
      if (&r.order().quiver() != delta.get()) {
        fail("relation over a different quiver");
      }
    }
    for (std::size_t i = 0; i < f_arr.size(); ++i) {
      auto const& q = gamma->arrow(ArrowId{static_cast<std::uint32_t>(i)});
      auto const& f = f_arr[i];
      if (&f.order().quiver() != delta.get()) {
        fail("image of '" + q.name + "' over a different quiver");
      }
      if (f.shape().src != f_obj[q.src.value] || f.shape().tgt != f_obj[q.tgt.value]) {
        fail("image of '" + q.name + "' does not match the images of its endpoints");
      }
    }
  }

  TaggedPolynomial tagged_monomial(TaggedOrderPtr const& order,
                                   TagId                 tag,
                                   Path const&           p,
                                   Scalar const&         k) {
    return TaggedPolynomial::monomial(order, make_tagged(*order, tag, p), k);
  }

  MixedSystem build_system(KanPresentation const& p, OrderPtr const& order) {
    p.validate();
    if (&order->quiver() != p.delta.get()) {
      throw Error(ErrorKind::invalid_presentation, "order over a different quiver");
    }
    auto tagged = std::make_shared<TaggedOrder const>(order, p.gamma, p.f_obj);
    MixedSystem sys(tagged);
    for (auto const& r : p.relations) {
      sys.add(r);
    }
    for (std::uint32_t i = 0; i < p.gamma->num_arrows(); ++i) {
      auto const& q   = p.gamma->arrow(ArrowId{i});
      auto        src = TagId{q.src.value};
      auto        tgt = TagId{q.tgt.value};
      auto eps = tag_polynomial(tagged, src, p.f_arr[i].reordered(order))
                 - tagged_monomial(tagged, tgt, Path::identity(p.f_obj[tgt.value]));
      sys.add(eps);
    }
    return sys;
  }

  std::size_t KanExtensionResult::dimension() const {
    std::size_t n = 0;
    for (auto const& f : fibers) {
      n += f.finiteness.count;
    }
    return n;
  }

  bool KanExtensionResult::is_finite() const {
    for (auto const& f : fibers) {
      if (!f.finiteness.finite) {
        return false;
      }
    }
    return true;
  }

  KanExtensionResult kan_extension(KanPresentation const& p,
                                   OrderPtr const&        order,
                                   std::size_t            len_bound,
                                   Limits const&          limits) {
    auto report = complete_mixed(build_system(p, order), limits);
    if (!report.is_complete()) {
      throw Error(ErrorKind::incomplete, "completion incomplete: " + report.reason);
    }
    KanExtensionResult res{std::move(report), {}, {}};
    auto const&        sys = res.mixed();
    ObstructionSet     obs(sys);
    for (std::uint32_t o = 0; o < p.delta->num_objects(); ++o) {
      Fiber f{ObjectId{o}, {}, obs.tagged_finiteness(std::nullopt, ObjectId{o})};
      std::size_t bound = len_bound;
      if (f.finiteness.finite) {
        if (f.finiteness.count > max_listed_terms) {
          throw Error(ErrorKind::internal_limit,
                      "fiber too large to list: " + std::to_string(f.finiteness.count)
                          + " terms");
        }
        bound = f.finiteness.count;
      }
      f.terms = obs.tagged_terms(std::nullopt, ObjectId{o}, bound);
      res.fibers.push_back(std::move(f));
    }
    auto const& tagged = sys.order_handle();
    for (std::uint32_t a = 0; a < p.gamma->num_objects(); ++a) {
      res.eps.push_back(normal_form(
          tagged_monomial(tagged, TagId{a}, Path::identity(p.f_obj[a])), sys));
    }
    return res;
  }

  TaggedPolynomial act(KanExtensionResult const& res,
                       TaggedPolynomial const&   t,
                       PathPolynomial const&     b) {
    auto const& sys = res.mixed();
    if (&t.order() != &sys.order()) {
      throw Error(ErrorKind::type_mismatch, "tagged polynomial over a different order");
    }
    return normal_form(t * b.reordered(sys.order().base_handle()), sys);
  }

  TaggedPolynomial act(KanExtensionResult const& res,
                       TaggedTerm const&         t,
                       PathPolynomial const&     b) {
    auto const& order = res.mixed().order_handle();
    return act(res, tagged_monomial(order, t.tag, t.path), b);
  }

  bool congruent_mod_right(KanExtensionResult const& res,
                           PathPolynomial const&     p,
                           PathPolynomial const&     q,
                           std::optional<TagId>      tag) {
    auto const& sys = res.mixed();
    if (!sys.is_complete()) {
      throw Error(ErrorKind::not_complete, "congruence needs a complete system");
    }
    if (p.shape() != q.shape()) {
      throw Error(ErrorKind::type_mismatch, "polynomials are not parallel");
    }
    auto const& order = sys.order();
    if (!tag) {
      for (std::uint32_t a = 0; a < order.num_tags(); ++a) {
        if (order.tag_object(TagId{a}) == p.shape().src) {
          tag = TagId{a};
          break;
        }
      }
      if (!tag) {
        throw Error(ErrorKind::type_mismatch, "no tag has the polynomials' source as image");
      }
    }
    auto const& handle = sys.order_handle();
    auto        base   = order.base_handle();
    return normal_form(tag_polynomial(handle, *tag, p.reordered(base)), sys)
           == normal_form(tag_polynomial(handle, *tag, q.reordered(base)), sys);
  }

}  // namespace kancat
