#include "kancat/tagged.hpp"

namespace kancat {

  TaggedOrder::TaggedOrder(OrderPtr                      base,
                           std::shared_ptr<Quiver const> gamma,
                           std::vector<ObjectId>         tag_object)
      : _base(std::move(base)),
        _gamma(std::move(gamma)),
        _tag_object(std::move(tag_object)) {
    if (_tag_object.size() != _gamma->num_objects()) {
      throw Error(ErrorKind::invalid_presentation,
                  "every source object needs an image");
    }
    for (auto o : _tag_object) {
      if (o.value >= _base->quiver().num_objects()) {
        throw Error(ErrorKind::invalid_presentation, "tag image out of range");
      }
    }
  }

  TaggedTerm make_tagged(TaggedOrder const& order, TagId tag, Path path) {
    if (tag.value >= order.num_tags()) {
      throw Error(ErrorKind::unknown_name, "tag out of range");
    }
    if (order.tag_object(tag) != path.src()) {
      throw Error(ErrorKind::type_mismatch,
                  "path does not start at the image of tag '"
                      + order.tag_name(tag) + "'");
    }
    return TaggedTerm{tag, std::move(path)};
  }

  TaggedPolynomial tag_polynomial(TaggedOrderPtr const& order,
                                  TagId                 tag,
                                  PathPolynomial const& f) {
    if (order->tag_object(tag) != f.shape().src) {
      throw Error(ErrorKind::type_mismatch,
                  "polynomial does not start at the image of tag '"
                      + order->tag_name(tag) + "'");
    }
    return f.map_monotone<TaggedTerms>(
        order, TaggedShape{f.shape().tgt}, [&](Path const& p) {
          return TaggedTerm{tag, p};
        });
  }

  TaggedPolynomial multiply(TaggedOrderPtr const& order,
                            TaggedTerm const&     prefix,
                            PathPolynomial const& f,
                            Path const&           y) {
    if (prefix.path.tgt() != f.shape().src || f.shape().tgt != y.src()) {
      throw Error(ErrorKind::not_composable,
                  "multiplier does not meet the polynomial's endpoints");
    }
    return f.map_monotone<TaggedTerms>(
        order, TaggedShape{y.tgt()}, [&](Path const& p) {
          return TaggedTerm{prefix.tag, compose(compose(prefix.path, p), y)};
        });
  }

  TaggedPolynomial multiply(TaggedPolynomial const& t, Path const& y) {
    if (t.shape().tgt != y.src()) {
      throw Error(ErrorKind::not_composable,
                  "path does not start at the tagged polynomial's target");
    }
    return t.map_monotone<TaggedTerms>(
        t.order_handle(), TaggedShape{y.tgt()}, [&](TaggedTerm const& a) {
          return TaggedTerm{a.tag, compose(a.path, y)};
        });
  }

  TaggedPolynomial operator*(TaggedPolynomial const& t, PathPolynomial const& b) {
    if (t.shape().tgt != b.shape().src) {
      throw Error(ErrorKind::not_composable,
                  "polynomial does not start at the tagged polynomial's target");
    }
    std::vector<TaggedPolynomial::entry_type> out;
    out.reserve(t.size() * b.size());
    for (auto const& [a, k] : t.terms()) {
      for (auto const& [p, l] : b.terms()) {
        out.emplace_back(TaggedTerm{a.tag, compose(a.path, p)}, k * l);
      }
    }
    return TaggedPolynomial::from_terms(
        t.order_handle(), TaggedShape{b.shape().tgt}, std::move(out));
  }

  std::string to_string(TaggedOrder const& order, TaggedTerm const& t) {
    std::string out = order.tag_name(t.tag) + "|";
    if (t.path.is_identity()) {
      return out + "1";
    }
    return out + to_string(order.delta(), t.path);
  }

  std::string to_string(TaggedPolynomial const& f) {
    if (f.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [t, k] : f.terms()) {
      append_term(out, first, k, to_string(f.order(), t));
      first = false;
    }
    return out;
  }

}  // namespace kancat
