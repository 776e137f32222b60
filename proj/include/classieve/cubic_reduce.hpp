#pragma once
// Reduction machinery for binary cubic forms (internal, exposed for tests).
//
// disc > 0: the Hessian (P, Q, R) = (b^2 - 3ac, bc - 9ad, c^2 - 3bd) is a
// positive definite integral quadratic; "reduced" is the exact integer test
// |Q| <= P <= R.
//
// disc < 0: with theta the unique real root and phi = rho + i sigma the
// complex root of F(t, 1), the quadratic
//   J(x, y) = t2 (x - theta y)^2 + u2 [(x - rho y)^2 + sigma^2 y^2],
//   t2 = a^2 sigma^2,  u2 = a^2 |theta - phi|^2,
// is positive definite, satisfies J_{F o gamma} = J_F o gamma for
// gamma in GL2(Z) and det J = |disc|/2. Its entries A, B, C lie in Q(theta),
// so "reduced" (|B| <= A <= C) is decided exactly: elements of Q(theta) are
// quadratic polynomials in theta with rational coefficients, and signs are
// obtained by bisecting a rational isolating interval of theta (a nonzero
// polynomial of degree <= 2 cannot vanish at theta when F is irreducible,
// so every sign query terminates).
//
// Canonicalization: any GL2(Z) map between weakly reduced forms of the same
// class has matrix entries in {-1, 0, 1} (its columns are minimal vectors of
// a reduced definite quadratic), so the canonical representative is the
// lexicographically least reduced form with a > 0 among +/- F o gamma over
// the 2x2 matrices with entries in {-1, 0, 1} and determinant +/- 1.

#include <optional>

#include "classieve/cubic.hpp"

namespace classieve::detail {

struct Hessian {
  i64 P, Q, R;
};
Hessian hessian(const CubicForm& f);

// Exact weak reduction test for disc > 0.
bool hessian_reduced(const CubicForm& f);

// Floating approximation of the J covariant entries (disc < 0 only).
struct JApprox {
  double A, B, C;
  double margin;  // conservative absolute error allowance for comparisons
};
JApprox j_approx(const CubicForm& f);

// Numeric prefilter: false only when |B| <= A <= C fails beyond the margin.
bool j_reduced_maybe(const CubicForm& f);

// Exact |B| <= A <= C over Q(theta); requires disc < 0 and irreducibility
// (verified internally; throws std::invalid_argument otherwise).
bool j_reduced_exact(const CubicForm& f);

// Exact weak reduction for either sign of the discriminant.
bool cubic_reduced(const CubicForm& f);

// Lexicographically least reduced form with a > 0 in {+/- F o gamma :
// gamma with entries in {-1,0,1}, det = +/-1}; nullopt when the sweep finds
// no reduced candidate (possible only if f itself is not reduced).
std::optional<CubicForm> canonical_cubic(const CubicForm& f);

}  // namespace classieve::detail
