#include "qmf/real.hpp"

#include <cmath>

namespace qmf {

unsigned bits_to_digits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits_(Real::default_precision()) {
  Real::default_precision(bits_to_digits(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits_); }

}  // namespace qmf
