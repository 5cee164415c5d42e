#ifndef CANCOV_LINFORM_HPP
#define CANCOV_LINFORM_HPP

#include <ostream>
#include <string>
#include <utility>

#include "cancov/rational.hpp"

namespace cancov {

/// Exact degree-1 form  slope·t + offset  in one named formal parameter.
///
/// All the parameterized invariants in the catalog are forms of this kind
/// ("24k-12", "4n-3", ...). Two forms are equal iff slope, offset and
/// parameter name all agree; forms in different parameters never mix.
class LinForm {
 public:
  /// Placeholder zero form with an anonymous parameter; combining it with a
  /// named form throws, so a default-constructed slot cannot leak into
  /// arithmetic unnoticed.
  LinForm() : slope_(0), offset_(0) {}

  LinForm(Rational slope, Rational offset, std::string param)
      : slope_(std::move(slope)), offset_(std::move(offset)), param_(std::move(param)) {}

  static LinForm constant(const Rational& c, std::string param) {
    return LinForm(Rational(0), c, std::move(param));
  }

  const Rational& slope() const { return slope_; }
  const Rational& offset() const { return offset_; }
  const std::string& param() const { return param_; }

  Rational eval(const Int& t) const { return slope_ * Rational(t) + offset_; }
  Rational eval(long t) const { return eval(Int(t)); }

  /// True iff the form takes an integer value at every integer t,
  /// equivalently iff slope and offset are both integers.
  bool integer_valued() const { return slope_.is_integer() && offset_.is_integer(); }

  /// Substitute t = factor·s: same offset, slope scaled, new parameter name.
  LinForm reparam(long factor, std::string new_param) const {
    if (factor < 1) throw Error("reparam: factor must be >= 1");
    return LinForm(Rational(factor) * slope_, offset_, std::move(new_param));
  }

  /// Display form, e.g. "24k-12", "4n-3", "k", "-2", "(1/3)k+2".
  std::string str() const;

  /// CSV form with an explicit product, e.g. "24*k-12", "0*k+5".
  std::string str_explicit() const;

  friend LinForm operator-(const LinForm& f) {
    return LinForm(-f.slope_, -f.offset_, f.param_);
  }
  friend LinForm operator+(const LinForm& f, const LinForm& g) {
    f.require_same_param(g);
    return LinForm(f.slope_ + g.slope_, f.offset_ + g.offset_, f.param_);
  }
  friend LinForm operator-(const LinForm& f, const LinForm& g) {
    f.require_same_param(g);
    return LinForm(f.slope_ - g.slope_, f.offset_ - g.offset_, f.param_);
  }
  friend LinForm operator*(const Rational& a, const LinForm& f) {
    return LinForm(a * f.slope_, a * f.offset_, f.param_);
  }

  friend bool operator==(const LinForm& f, const LinForm& g) {
    return f.slope_ == g.slope_ && f.offset_ == g.offset_ && f.param_ == g.param_;
  }

  friend std::ostream& operator<<(std::ostream& os, const LinForm& f) {
    return os << f.str();
  }

 private:
  void require_same_param(const LinForm& o) const {
    if (param_ != o.param_) throw ParameterMismatchError(param_, o.param_);
  }

  Rational slope_, offset_;
  std::string param_;
};

/// a·f + b·g, componentwise and exact. f and g must share their parameter.
inline LinForm combine(const Rational& a, const LinForm& f, const Rational& b,
                       const LinForm& g) {
  return a * f + b * g;
}

/// f/d together with a flag telling whether the result is integer-valued
/// (integer slope and offset). d must be >= 1; non-integrality is reported,
/// not fatal.
inline std::pair<LinForm, bool> divide_exact(const LinForm& f, long d) {
  if (d < 1) throw Error("divide_exact: divisor must be >= 1");
  const Rational inv(1, d);
  const LinForm q = inv * f;
  return {q, q.integer_valued()};
}

inline LinForm constant_like(long v, const LinForm& like) {
  return LinForm::constant(Rational(v), like.param());
}

/// f(t) >= 0 for every integer t >= from.
inline bool nonnegative_from(const LinForm& f, long from) {
  return f.slope().sign() >= 0 && f.eval(from).sign() >= 0;
}

/// f(t) >= g(t) for every integer t >= from.
inline bool ge_on_halfline(const LinForm& f, const LinForm& g, long from) {
  return nonnegative_from(f - g, from);
}

}  // namespace cancov

#endif
