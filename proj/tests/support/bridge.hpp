#ifndef KANCAT_TESTS_SUPPORT_BRIDGE_HPP_
#define KANCAT_TESTS_SUPPORT_BRIDGE_HPP_

// Conversions between library values and oracle values, plus random
// elements. Arrow and object ids coincide on both sides.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kancat/kan.hpp"
#include "kancat/path_order.hpp"
#include "kancat/polynomial.hpp"
#include "oracles/span_oracle.hpp"

namespace support {

  inline oracle::Rational to_rational(kancat::Scalar const& k) {
    using Integer = boost::multiprecision::cpp_int;
    return oracle::Rational(Integer(k.numerator().get_str()),
                            Integer(k.denominator().get_str()));
  }

  inline kancat::Scalar to_scalar(oracle::Rational const& r) {
    std::ostringstream out;
    out << numerator(r) << '/' << denominator(r);
    return kancat::Scalar(mpq_class(out.str()));
  }

  inline oracle::Key to_key(kancat::Path const& p, int start) {
    oracle::Key k{start, {}};
    for (auto a : p.arrows()) {
      k.word.push_back(int(a.value));
    }
    return k;
  }

  inline oracle::Key to_key(kancat::Path const& p) {
    return to_key(p, int(p.src().value));
  }

  inline oracle::Poly to_oracle(kancat::PathPolynomial const& f) {
    oracle::Poly out;
    for (auto const& [p, k] : f.terms()) {
      oracle::add_to(out, to_key(p), to_rational(k));
    }
    return out;
  }

  inline oracle::Poly to_oracle(kancat::TaggedPolynomial const& f) {
    oracle::Poly out;
    for (auto const& [t, k] : f.terms()) {
      oracle::add_to(out, to_key(t.path, int(t.tag.value)), to_rational(k));
    }
    return out;
  }

  inline kancat::Path to_path(kancat::Quiver const& q, oracle::Key const& k) {
    if (k.word.empty()) {
      return kancat::Path::identity(kancat::ObjectId{std::uint32_t(k.start)});
    }
    std::vector<kancat::ArrowId> arrows;
    for (int a : k.word) {
      arrows.push_back(kancat::ArrowId{std::uint32_t(a)});
    }
    return kancat::Path::of(q, arrows);
  }

  // Nonzero oracle polynomial whose keys are parallel paths.
  inline kancat::PathPolynomial to_library(oracle::Poly const& f, kancat::OrderPtr const& order) {
    auto const& q     = order->quiver();
    auto        first = to_path(q, f.begin()->first);
    std::vector<std::pair<kancat::Path, kancat::Scalar>> terms;
    for (auto const& [k, c] : f) {
      terms.emplace_back(to_path(q, k), to_scalar(c));
    }
    return kancat::PathPolynomial::from_terms(order, {first.src(), first.tgt()},
                                              std::move(terms));
  }

  inline kancat::Scalar random_coefficient(std::mt19937_64& rng) {
    static long const num[] = {1, -1, 2, -3, 5, 1, -7, 4};
    static long const den[] = {1, 1, 1, 2, 3, 9, 4, 1};
    auto i = std::uniform_int_distribution<int>(0, 7)(rng);
    auto j = std::uniform_int_distribution<int>(0, 7)(rng);
    return kancat::Scalar(num[i], den[j]);
  }

  template <typename T>
  T const& pick(std::mt19937_64& rng, std::vector<T> const& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  }

  // Up to `max_terms` terms drawn from the parallel paths src -> tgt of
  // length <= max_len. May be zero.
  inline kancat::PathPolynomial random_polynomial(std::mt19937_64&        rng,
                                                  kancat::OrderPtr const& order,
                                                  kancat::ObjectId        src,
                                                  kancat::ObjectId        tgt,
                                                  std::size_t             max_len,
                                                  int                     max_terms = 5) {
    auto paths = kancat::enumerate_paths(*order, src, tgt, max_len);
    auto f     = kancat::zero(order, src, tgt);
    if (paths.empty()) {
      return f;
    }
    int n = std::uniform_int_distribution<int>(1, max_terms)(rng);
    for (int i = 0; i < n; ++i) {
      f = f + kancat::monomial(order, pick(rng, paths), random_coefficient(rng));
    }
    return f;
  }

  // A random hom-set that has at least one path of length <= max_len.
  inline std::pair<kancat::ObjectId, kancat::ObjectId> random_shape(
      std::mt19937_64& rng, kancat::OrderPtr const& order, std::size_t max_len) {
    auto all = kancat::enumerate_paths(*order, std::nullopt, std::nullopt, max_len);
    auto p   = pick(rng, all);
    return {p.src(), p.tgt()};
  }

}  // namespace support

#endif  // KANCAT_TESTS_SUPPORT_BRIDGE_HPP_
