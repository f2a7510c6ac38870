#pragma once

#include "z4rm/code.hpp"

namespace z4rm {

/// Plotkin construction: {(u1 | u1+u2)} for u1 in A, u2 in B. Doubles the
/// length; gamma and delta add componentwise; the minimum distance is exactly
/// min{2*d_A, d_B}.
QuaternaryCode plotkin(const QuaternaryCode& a, const QuaternaryCode& b);

/// Quaternary Plotkin construction: {(u1 | u1+u2 | u1+2u2 | u1+3u2)}.
/// Quadruples the length; distance at least min{4*d_A, 2*d_B}.
QuaternaryCode quaternary_plotkin(const QuaternaryCode& a, const QuaternaryCode& b);

/// Double Plotkin construction over four codes:
/// {(u1 | u1+u2 | u1+2u2+u3 | u1+3u2+u3+u4)}. Distance at least
/// min{4*d_A, 2*d_B, 2*d_C, d_D}.
QuaternaryCode double_plotkin(const QuaternaryCode& a, const QuaternaryCode& b,
                              const QuaternaryCode& c, const QuaternaryCode& d);

/// Order-two rows with twos switched to ones; order-four rows unchanged.
GeneratorMatrix gen_prime(const GeneratorMatrix& g);

/// Order-two rows removed.
GeneratorMatrix gen_hat(const GeneratorMatrix& g);

/// BQ-Plotkin construction: stacks (G_A G_A G_A G_A), (0 G'_B 2G'_B 3G'_B),
/// (0 0 Ghat_B Ghat_B), (0 0 0 G_C). Resulting type has
/// gamma = gamma_A + gamma_C and delta = delta_A + gamma_B + 2*delta_B +
/// delta_C; the minimum distance is exactly min{4*d_A, 2*d_B, d_C}.
QuaternaryCode bq_plotkin(const QuaternaryCode& a, const QuaternaryCode& b, const QuaternaryCode& c);

}  // namespace z4rm
