#pragma once

namespace bb {

/// P(X >= k) for X ~ Binomial(trials, p), evaluated through the regularized
/// incomplete beta function I_p(k, trials - k + 1). Stable for trials in the
/// 1e9 range. k <= 0 gives 1, k > trials gives 0.
double binomial_survival(double trials, double p, double k);

}  // namespace bb
