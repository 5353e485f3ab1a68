#ifndef KANCAT_SCALAR_HPP_
#define KANCAT_SCALAR_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kancat {

  // An element of the coefficient field, here the rationals. Values are kept
  // in lowest terms with a positive denominator; zero is 0/1.
  //
  // Everything above this class only uses the field operations (+, -, *,
  // inverse, zero/one tests), so another exact field could replace it.
  class Scalar {
   public:
    Scalar() = default;
    Scalar(long value) : _value(value) {}  // NOLINT(runtime/explicit)
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    // Accepts "n" or "n/d" with optional leading sign.
    static Scalar parse(std::string_view text);

    bool is_zero() const noexcept {
      return sgn(_value) == 0;
    }
    bool is_one() const noexcept {
      return _value == 1;
    }
    bool is_integer() const {
      return _value.get_den() == 1;
    }
    int sign() const noexcept {
      return sgn(_value);
    }

    Scalar inverse() const;

    mpz_class numerator() const {
      return _value.get_num();
    }
    mpz_class denominator() const {
      return _value.get_den();
    }
    mpq_class const& value() const noexcept {
      return _value;
    }

    // "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Scalar& operator+=(Scalar const& that) {
      _value += that._value;
      return *this;
    }
    Scalar& operator-=(Scalar const& that) {
      _value -= that._value;
      return *this;
    }
    Scalar& operator*=(Scalar const& that) {
      _value *= that._value;
      return *this;
    }

    friend Scalar operator+(Scalar a, Scalar const& b) {
      return a += b;
    }
    friend Scalar operator-(Scalar a, Scalar const& b) {
      return a -= b;
    }
    friend Scalar operator*(Scalar a, Scalar const& b) {
      return a *= b;
    }
    friend Scalar operator/(Scalar const& a, Scalar const& b) {
      return a * b.inverse();
    }
    friend Scalar operator-(Scalar const& a) {
      return Scalar(mpq_class(-a._value));
    }
    friend bool operator==(Scalar const& a, Scalar const& b) {
      return a._value == b._value;
    }

   private:
    mpq_class _value;
  };

}  // namespace kancat

#endif  // KANCAT_SCALAR_HPP_
