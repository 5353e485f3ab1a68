#ifndef KANCAT_TAGGED_HPP_
#define KANCAT_TAGGED_HPP_

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "kancat/polynomial.hpp"

namespace kancat {

  // A tag names an object A of the source graph; it is written "A|".
  struct TagId {
    std::uint32_t value = 0;
    friend auto operator<=>(TagId, TagId) = default;
  };

  // A|p, where p is a path starting at the image of A.
  struct TaggedTerm {
    TagId tag;
    Path  path;
    friend bool operator==(TaggedTerm const&, TaggedTerm const&) = default;
  };

  // Extends a path order to tagged terms: compare the paths, then the tags
  // by declaration order. Tag symbols rank below every arrow, so right
  // multiplication by a path is strictly monotone.
  class TaggedOrder {
   public:
    // tag_object[i] is the image of tag i; tags are named by gamma's objects.
    TaggedOrder(OrderPtr                      base,
                std::shared_ptr<Quiver const> gamma,
                std::vector<ObjectId>         tag_object);

    PathOrder const& base() const noexcept {
      return *_base;
    }
    OrderPtr const& base_handle() const noexcept {
      return _base;
    }
    Quiver const& delta() const noexcept {
      return _base->quiver();
    }
    Quiver const& gamma() const noexcept {
      return *_gamma;
    }
    std::shared_ptr<Quiver const> const& gamma_handle() const noexcept {
      return _gamma;
    }
    std::size_t num_tags() const noexcept {
      return _tag_object.size();
    }
    ObjectId tag_object(TagId t) const {
      return _tag_object.at(t.value);
    }
    std::string const& tag_name(TagId t) const {
      return _gamma->object_name(ObjectId{t.value});
    }

    std::strong_ordering compare(TaggedTerm const& a, TaggedTerm const& b) const {
      if (auto c = _base->compare(a.path, b.path); c != 0) {
        return c;
      }
      return a.tag <=> b.tag;
    }

   private:
    OrderPtr                      _base;
    std::shared_ptr<Quiver const> _gamma;
    std::vector<ObjectId>         _tag_object;
  };

  using TaggedOrderPtr = std::shared_ptr<TaggedOrder const>;

  // Tagged polynomials only need a common target: an epsilon relation
  // A1|F(q) - A2|1 mixes tags.
  struct TaggedShape {
    ObjectId tgt;
    friend bool operator==(TaggedShape, TaggedShape) = default;
  };

  struct TaggedTerms {
    using term_type  = TaggedTerm;
    using order_type = TaggedOrder;
    using shape_type = TaggedShape;

    static shape_type shape_of(TaggedTerm const& t) noexcept {
      return {t.path.tgt()};
    }
    static std::strong_ordering compare(TaggedOrder const& o,
                                        TaggedTerm const&  a,
                                        TaggedTerm const&  b) {
      return o.compare(a, b);
    }
  };

  using TaggedPolynomial = LinearCombination<TaggedTerms>;

  // Throws TypeMismatch unless the path starts at the tag's image.
  TaggedTerm make_tagged(TaggedOrder const& order, TagId tag, Path path);

  // A|f, term by term.
  TaggedPolynomial tag_polynomial(TaggedOrderPtr const& order,
                                  TagId                 tag,
                                  PathPolynomial const& f);

  // (A|x) * f * y for an untagged polynomial f.
  TaggedPolynomial multiply(TaggedOrderPtr const& order,
                            TaggedTerm const&     prefix,
                            PathPolynomial const& f,
                            Path const&           y);

  // t * y: right multiplication by a path.
  TaggedPolynomial multiply(TaggedPolynomial const& t, Path const& y);

  // Bilinear right action of an untagged polynomial.
  TaggedPolynomial operator*(TaggedPolynomial const& t, PathPolynomial const& b);

  std::string to_string(TaggedOrder const& order, TaggedTerm const& t);
  std::string to_string(TaggedPolynomial const& f);

}  // namespace kancat

#endif  // KANCAT_TAGGED_HPP_
