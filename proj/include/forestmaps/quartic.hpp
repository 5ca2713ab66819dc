#pragma once

#include "forestmaps/series.hpp"

#include <stdexcept>
#include <vector>

namespace fm {

/// p = 4 with u fixed: R, A = Phi(R) and B = Phi'(R) as coefficient vectors
/// through z^order, plus F' = theta(R).
template <class C>
struct QuarticSeries {
  std::vector<C> R, A, B, Fprime;
};

/// Uses x(27x-1)Phi'' + 6Phi + 6x = 0 along x = R:
///   R(27R-1) B' = -6(A+R) R',  A' = B R',  R = z + uA.
/// Each step costs O(n), so the whole run is quadratic in the order.
/// With lead = r the series are in w = z/r, i.e. coefficient n is scaled by r^n.
template <class C>
QuarticSeries<C> solve_quartic(int order, const C& u, const C& lead = C(1)) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const int N = order;
  auto scale = [](const C& x, long num, long den) {
    C r = num == 1 ? x : ring_ops<C>::mul_int(x, num);
    return den == 1 ? r : ring_ops<C>::div_int(r, den);
  };
  std::vector<C> R(N + 1, C(0)), A(N + 1, C(0)), B(N + 1, C(0)), R2(N + 1, C(0)), P(N + 1, C(0));
  R[1] = lead;
  C inv_lead(1);
  if constexpr (requires { lead / lead; })
    inv_lead = C(1) / lead;
  else if (!(lead == C(1)))
    throw std::invalid_argument("a non-unit lead needs a field of coefficients");
  P[1] = C(0) - R[1];
  for (int n = 1; n <= N; ++n) {
    if (n >= 2) {
      C acc(0);
      for (int k = 1; k < n; ++k) acc += R[k] * R[n - k];
      R2[n] = acc;
      P[n] = scale(R2[n], 27, 1) - R[n];
    }
    C rhs(0);
    for (int j = 1; j <= n; ++j) rhs += (A[j] + R[j]) * scale(R[n - j + 1], n - j + 1, 1);
    rhs = scale(rhs, -6, 1);
    C s(0);
    for (int j = 2; j <= n; ++j) s += P[j] * scale(B[n - j + 1], n - j + 1, 1);
    B[n] = scale((s - rhs) * inv_lead, 1, n);
    if (n + 1 <= N) {
      C acc(0);
      for (int j = 1; j <= n; ++j) acc += B[j] * scale(R[n - j + 1], n - j + 1, 1);
      A[n + 1] = scale(acc, 1, n + 1);
      R[n + 1] = u * A[n + 1];
    }
  }
  // theta(R) = (2(27R-1)B - 42A + 12R)/3
  std::vector<C> Fp(N + 1, C(0));
  for (int n = 1; n <= N; ++n) {
    C rb(0);
    for (int k = 1; k < n; ++k) rb += R[k] * B[n - k];
    C v = scale(rb, 54, 1) - scale(B[n], 2, 1) - scale(A[n], 42, 1) + scale(R[n], 12, 1);
    Fp[n] = scale(v, 1, 3);
  }
  return {std::move(R), std::move(A), std::move(B), std::move(Fp)};
}

}  // namespace fm
