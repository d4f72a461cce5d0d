#pragma once

#include <stdexcept>

#include "bigm1/rational.hpp"

namespace bigm1 {

// The parameter triple (alpha, beta, c). Everything downstream requires
// c != 1 and c != -1, enforced at construction.
struct ParamSet {
  Rational alpha;
  Rational beta;
  Rational c;

  ParamSet(Rational alpha_, Rational beta_, Rational c_)
      : alpha(std::move(alpha_)), beta(std::move(beta_)), c(std::move(c_)) {
    if (c == 1 || c == -1)
      throw std::invalid_argument("ParamSet: c must differ from 1 and -1");
  }
};

}  // namespace bigm1
