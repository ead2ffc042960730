#pragma once

#include <string>

#include "asymean/means.hpp"

namespace asymean {

/// Which regime the inner mean N puts the resultant recursion in, decided
/// by its t-coefficient: a_1 = -1 (Case II) and a_1 = 1 (Case III) make the
/// leading term of one half-difference vanish.
enum class ResultantCase { I, II, III };

std::string caseName(ResultantCase c);
ResultantCase classifyCase(const MeanExpansion& N);

/// How integer powers P[k, n, .] of the auxiliary sequences are formed.
///  Recursive      - the power recursion, with leading zeros of a sequence
///                   factored out first (the degenerate-case redefinition).
///  Multiplicative - plain repeated products of the raw sequences; this is a
///                   polynomial in the coefficients and therefore continuous
///                   across the degenerate cases.
enum class PowerRoute { Recursive, Multiplicative };

/// Coefficients a_0 ... a_order of R(K, M, N)(x - t, x + t) where
/// R(K, M, N)(s, t) = K(M(s, N(s, t)), M(N(s, t), t)).
///
/// Expansions carrying odd powers of t are read with t > 0, and the two
/// inner half-differences are assumed positive as in the t > 0 reading.
MeanExpansion resultantExpansion(const MeanExpansion& K, const MeanExpansion& M,
                                 const MeanExpansion& N, int order,
                                 PowerRoute route = PowerRoute::Recursive);

/// R(B_p, M, B_q) to the given order.
MeanExpansion resultantPowerMeans(const Rational& p, const Rational& q,
                                  const MeanExpansion& M, int order);

} // namespace asymean
