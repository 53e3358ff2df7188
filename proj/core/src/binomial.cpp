#include "backbone/binomial.hpp"

#include <boost/math/special_functions/beta.hpp>

namespace bb {

double binomial_survival(double trials, double p, double k) {
  if (k <= 0.0) return 1.0;
  if (k > trials) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return boost::math::ibeta(k, trials - k + 1.0, p);
}

}  // namespace bb
