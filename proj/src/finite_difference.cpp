#include "contact3/finite_difference.hpp"

#include <cmath>
#include <stdexcept>

namespace contact3 {

void FDConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("FD step must be > 0");
  if (!(outer_step > 0.0) || !std::isfinite(outer_step)) {
    throw std::invalid_argument("FD outer step must be > 0");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("FD tolerance must be > 0");
}

}  // namespace contact3
