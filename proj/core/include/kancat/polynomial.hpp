#ifndef KANCAT_POLYNOMIAL_HPP_
#define KANCAT_POLYNOMIAL_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "kancat/error.hpp"
#include "kancat/path_order.hpp"
#include "kancat/quiver.hpp"
#include "kancat/scalar.hpp"

namespace kancat {

  // Endpoints shared by every term of a path polynomial.
  struct HomType {
    ObjectId src;
    ObjectId tgt;
    friend bool operator==(HomType, HomType) = default;
  };

  struct PathTerms {
    using term_type  = Path;
    using order_type = PathOrder;
    using shape_type = HomType;

    static shape_type shape_of(Path const& p) noexcept {
      return {p.src(), p.tgt()};
    }
    static std::strong_ordering compare(PathOrder const& o,
                                        Path const&      p,
                                        Path const&      q) {
      return o.compare(p, q);
    }
  };

  // A finite K-linear combination of terms of one shape. Terms are stored
  // with nonzero coefficients, strictly descending under the ambient order,
  // so the leading term is the first entry and equality is structural. A
  // zero polynomial still carries its shape.
  template <typename Traits>
  class LinearCombination {
   public:
    using term_type  = typename Traits::term_type;
    using order_type = typename Traits::order_type;
    using shape_type = typename Traits::shape_type;
    using order_ptr  = std::shared_ptr<order_type const>;
    using entry_type = std::pair<term_type, Scalar>;

    LinearCombination(order_ptr order, shape_type shape)
        : _order(std::move(order)), _shape(shape) {}

    static LinearCombination monomial(order_ptr        order,
                                      term_type const& t,
                                      Scalar const&    k = Scalar(1)) {
      LinearCombination f(std::move(order), Traits::shape_of(t));
      if (!k.is_zero()) {
        f._terms.emplace_back(t, k);
      }
      return f;
    }

    // Collects like terms and sorts; throws TypeMismatch on a term of the
    // wrong shape.
    static LinearCombination from_terms(order_ptr               order,
                                        shape_type              shape,
                                        std::vector<entry_type> terms) {
      LinearCombination f(std::move(order), shape);
      for (auto const& [t, k] : terms) {
        if (!(Traits::shape_of(t) == shape)) {
          throw Error(ErrorKind::type_mismatch,
                      "term does not have the polynomial's endpoints");
        }
      }
      f._terms = std::move(terms);
      f.normalize();
      return f;
    }

    order_type const& order() const noexcept {
      return *_order;
    }
    order_ptr const& order_handle() const noexcept {
      return _order;
    }
    shape_type shape() const noexcept {
      return _shape;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }
    std::size_t size() const noexcept {
      return _terms.size();
    }
    std::span<entry_type const> terms() const noexcept {
      return _terms;
    }

    // Throws ZeroPolynomial.
    entry_type const& leading_term() const {
      if (_terms.empty()) {
        throw Error(ErrorKind::zero_polynomial,
                    "the zero polynomial has no leading term");
      }
      return _terms.front();
    }
    term_type const& leading_path() const {
      return leading_term().first;
    }
    Scalar const& leading_coefficient() const {
      return leading_term().second;
    }

    Scalar coefficient(term_type const& t) const {
      auto it = std::lower_bound(
          _terms.begin(), _terms.end(), t, [this](entry_type const& e, term_type const& x) {
            return Traits::compare(*_order, e.first, x) > 0;
          });
      if (it != _terms.end() && it->first == t) {
        return it->second;
      }
      return Scalar(0);
    }

    // Divides by the leading coefficient. Throws ZeroPolynomial.
    LinearCombination monic() const {
      auto const& lc = leading_coefficient();
      if (lc.is_one()) {
        return *this;
      }
      return lc.inverse() * *this;
    }

    // The polynomial minus its leading term.
    LinearCombination remainder() const {
      LinearCombination r(_order, _shape);
      if (!_terms.empty()) {
        r._terms.assign(_terms.begin() + 1, _terms.end());
      }
      return r;
    }

    // Same terms re-sorted under another order on the same quiver.
    LinearCombination reordered(order_ptr order) const {
      LinearCombination f(std::move(order), _shape);
      f._terms = _terms;
      f.normalize();
      return f;
    }

    // Maps every term through `fn`, which must be strictly monotone for the
    // order (true for multiplication by a path), so no re-sort is needed.
    template <typename OtherTraits, typename Fn>
    LinearCombination<OtherTraits> map_monotone(
        std::shared_ptr<typename OtherTraits::order_type const> order,
        typename OtherTraits::shape_type                         shape,
        Fn&&                                                     fn) const {
      std::vector<typename LinearCombination<OtherTraits>::entry_type> out;
      out.reserve(_terms.size());
      for (auto const& [t, k] : _terms) {
        out.emplace_back(fn(t), k);
      }
      return LinearCombination<OtherTraits>::from_sorted(
          std::move(order), shape, std::move(out));
    }

    // Trusted constructor: terms already distinct, nonzero and descending.
    static LinearCombination from_sorted(order_ptr               order,
                                         shape_type              shape,
                                         std::vector<entry_type> terms) {
      LinearCombination f(std::move(order), shape);
      f._terms = std::move(terms);
      return f;
    }

    LinearCombination& operator+=(LinearCombination const& g) {
      merge(g, Scalar(1));
      return *this;
    }
    LinearCombination& operator-=(LinearCombination const& g) {
      merge(g, Scalar(-1));
      return *this;
    }

    // this += k * g
    LinearCombination& add_multiple(Scalar const& k, LinearCombination const& g) {
      if (!k.is_zero()) {
        merge(g, k);
      }
      return *this;
    }

    friend LinearCombination operator+(LinearCombination f,
                                       LinearCombination const& g) {
      return f += g;
    }
    friend LinearCombination operator-(LinearCombination f,
                                       LinearCombination const& g) {
      return f -= g;
    }
    friend LinearCombination operator-(LinearCombination f) {
      for (auto& e : f._terms) {
        e.second = -e.second;
      }
      return f;
    }
    friend LinearCombination operator*(Scalar const& k, LinearCombination f) {
      if (k.is_zero()) {
        f._terms.clear();
        return f;
      }
      for (auto& e : f._terms) {
        e.second *= k;
      }
      return f;
    }

    friend bool operator==(LinearCombination const& f,
                           LinearCombination const& g) {
      return f._shape == g._shape && f._terms == g._terms;
    }

   private:
    template <typename>
    friend class LinearCombination;

    void check_compatible(LinearCombination const& g) const {
      if (!(_shape == g._shape)) {
        throw Error(ErrorKind::type_mismatch,
                    "polynomials have different endpoints");
      }
    }

    void merge(LinearCombination const& g, Scalar const& k) {
      check_compatible(g);
      std::vector<entry_type> out;
      out.reserve(_terms.size() + g._terms.size());
      auto i = _terms.begin();
      auto j = g._terms.begin();
      while (i != _terms.end() && j != g._terms.end()) {
        auto c = Traits::compare(*_order, i->first, j->first);
        if (c > 0) {
          out.push_back(std::move(*i++));
        } else if (c < 0) {
          out.emplace_back(j->first, k * j->second);
          ++j;
        } else {
          Scalar s = i->second + k * j->second;
          if (!s.is_zero()) {
            out.emplace_back(std::move(i->first), std::move(s));
          }
          ++i;
          ++j;
        }
      }
      for (; i != _terms.end(); ++i) {
        out.push_back(std::move(*i));
      }
      for (; j != g._terms.end(); ++j) {
        out.emplace_back(j->first, k * j->second);
      }
      _terms = std::move(out);
    }

    void normalize() {
      auto const& o = *_order;
      std::stable_sort(_terms.begin(),
                       _terms.end(),
                       [&o](entry_type const& a, entry_type const& b) {
                         return Traits::compare(o, a.first, b.first) > 0;
                       });
      std::vector<entry_type> out;
      out.reserve(_terms.size());
      for (auto& e : _terms) {
        if (!out.empty() && out.back().first == e.first) {
          out.back().second += e.second;
        } else {
          if (!out.empty() && out.back().second.is_zero()) {
            out.pop_back();
          }
          out.push_back(std::move(e));
        }
      }
      if (!out.empty() && out.back().second.is_zero()) {
        out.pop_back();
      }
      _terms = std::move(out);
    }

    order_ptr               _order;
    shape_type              _shape;
    std::vector<entry_type> _terms;
  };

  // An arrow of the free K-category: a combination of parallel paths.
  using PathPolynomial = LinearCombination<PathTerms>;

  inline PathPolynomial zero(OrderPtr order, ObjectId src, ObjectId tgt) {
    return PathPolynomial(std::move(order), HomType{src, tgt});
  }

  inline PathPolynomial monomial(OrderPtr order, Path const& p, Scalar const& k = 1) {
    return PathPolynomial::monomial(std::move(order), p, k);
  }

  // u * f * v for paths u, v. Throws NotComposable.
  PathPolynomial multiply(Path const& u, PathPolynomial const& f, Path const& v);

  // Bilinear extension of composition. Throws NotComposable.
  PathPolynomial operator*(PathPolynomial const& f, PathPolynomial const& g);

  inline PathPolynomial mul(PathPolynomial const& f, PathPolynomial const& g) {
    return f * g;
  }

  inline std::pair<Path, Scalar> leading_term(PathPolynomial const& f) {
    return f.leading_term();
  }

  inline PathPolynomial monic(PathPolynomial const& f) {
    return f.monic();
  }

  // Canonical text: terms descending, arrows joined by '*', coefficient 1
  // omitted, e.g. "e2*e1*e2 - e1*e2*e1 + 2/9 e2 - 2/9 e1".
  std::string to_string(PathPolynomial const& f);

  // Shared by the tagged printer.
  void append_term(std::string&       out,
                   bool               first,
                   Scalar const&      k,
                   std::string const& monomial);

}  // namespace kancat

#endif  // KANCAT_POLYNOMIAL_HPP_
