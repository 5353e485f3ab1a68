#include "kancat/scalar.hpp"

#include <cctype>

#include "kancat/error.hpp"

namespace kancat {

  Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) {
      throw Error(ErrorKind::semantic_error, "zero denominator");
    }
    _value = mpq_class(numerator, denominator);
    _value.canonicalize();
  }

  Scalar::Scalar(mpq_class value) : _value(std::move(value)) {
    _value.canonicalize();
  }

  Scalar Scalar::parse(std::string_view text) {
    std::size_t i   = 0;
    bool        neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg = text[i] == '-';
      ++i;
    }
    auto digits = [&](std::size_t from) {
      std::size_t j = from;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      return j;
    };
    std::size_t end = digits(i);
    if (end == i) {
      throw Error(ErrorKind::syntax_error,
                  "malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(text.substr(i, end - i)), 10);
    mpz_class den(1);
    if (end < text.size()) {
      if (text[end] != '/') {
        throw Error(ErrorKind::syntax_error,
                    "malformed rational '" + std::string(text) + "'");
      }
      std::size_t dend = digits(end + 1);
      if (dend == end + 1 || dend != text.size()) {
        throw Error(ErrorKind::syntax_error,
                    "malformed rational '" + std::string(text) + "'");
      }
      den = mpz_class(std::string(text.substr(end + 1, dend - end - 1)), 10);
      if (den == 0) {
        throw Error(ErrorKind::semantic_error, "zero denominator");
      }
    }
    if (neg) {
      num = -num;
    }
    return Scalar(mpq_class(num, den));
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw Error(ErrorKind::semantic_error, "inverse of zero");
    }
    return Scalar(mpq_class(1 / _value));
  }

  std::string Scalar::to_string() const {
    if (is_integer()) {
      return _value.get_num().get_str();
    }
    return _value.get_num().get_str() + "/" + _value.get_den().get_str();
  }

}  // namespace kancat
