#include "cancov/linform.hpp"

#include <sstream>

namespace cancov {

std::string LinForm::str() const {
  if (slope_.is_zero()) return offset_.str();
  std::ostringstream os;
  if (slope_ == Rational(-1)) {
    os << '-';
  } else if (slope_ != Rational(1)) {
    if (slope_.is_integer())
      os << slope_;
    else
      os << '(' << slope_ << ')';
  }
  os << param_;
  if (!offset_.is_zero()) {
    if (offset_.sign() > 0) os << '+';
    os << offset_;
  }
  return os.str();
}

std::string LinForm::str_explicit() const {
  std::ostringstream os;
  os << slope_ << '*' << param_;
  if (offset_.sign() >= 0) os << '+';
  os << offset_;
  return os.str();
}

}  // namespace cancov
