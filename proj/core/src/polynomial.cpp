#include "kancat/polynomial.hpp"

namespace kancat {

  PathPolynomial multiply(Path const& u, PathPolynomial const& f, Path const& v) {
    if (u.tgt() != f.shape().src || f.shape().tgt != v.src()) {
      throw Error(ErrorKind::not_composable,
                  "multiplier does not meet the polynomial's endpoints");
    }
    return f.map_monotone<PathTerms>(
        f.order_handle(), HomType{u.src(), v.tgt()}, [&](Path const& p) {
          return compose(compose(u, p), v);
        });
  }

  PathPolynomial operator*(PathPolynomial const& f, PathPolynomial const& g) {
    if (f.shape().tgt != g.shape().src) {
      throw Error(ErrorKind::not_composable,
                  "target of the left factor is not the source of the right");
    }
    std::vector<PathPolynomial::entry_type> out;
    out.reserve(f.size() * g.size());
    for (auto const& [p, k] : f.terms()) {
      for (auto const& [q, l] : g.terms()) {
        out.emplace_back(compose(p, q), k * l);
      }
    }
    return PathPolynomial::from_terms(
        f.order_handle(), HomType{f.shape().src, g.shape().tgt}, std::move(out));
  }

  void append_term(std::string&       out,
                   bool               first,
                   Scalar const&      k,
                   std::string const& monomial) {
    Scalar mag = k;
    if (k.sign() < 0) {
      out += first ? "-" : " - ";
      mag = -k;
    } else if (!first) {
      out += " + ";
    }
    if (!mag.is_one()) {
      out += mag.to_string();
      out += ' ';
    }
    out += monomial;
  }

  std::string to_string(PathPolynomial const& f) {
    if (f.is_zero()) {
      return "0";
    }
    auto const& q = f.order().quiver();
    std::string out;
    bool        first = true;
    for (auto const& [p, k] : f.terms()) {
      append_term(out, first, k, to_string(q, p));
      first = false;
    }
    return out;
  }

}  // namespace kancat
