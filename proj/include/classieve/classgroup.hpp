#pragma once
// Binary quadratic forms and class groups of fundamental discriminants.
//
// D < 0: positive-definite Gauss reduction, one reduced form per class.
// D > 0: indefinite reduction; classes are cycles of reduced forms and the
//        group is the *narrow* class group (canonical representative = the
//        lexicographically least form on the cycle).
// Composition is the classical Gauss/Dirichlet formula with an extended-gcd
// solve. ell-torsion is counted by brute-force exponentiation; even ell over
// a real discriminant is rejected (it would need unit/genus bookkeeping the
// narrow-cycle representation does not carry).

#include <functional>
#include <vector>

#include "classieve/arith.hpp"

namespace classieve {

struct QuadForm {
  i64 a = 0, b = 0, c = 0;
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

i64 form_disc(const QuadForm& f);

// Gauss reduction. D < 0 requires a > 0. D > 0 lands anywhere on the reduced
// cycle. Throws on degenerate discriminants (0 or a perfect square).
QuadForm reduce(QuadForm f);

bool is_reduced(const QuadForm& f);

// One rho-step around the cycle of an indefinite reduced form.
QuadForm rho(const QuadForm& f);

// Full cycle of reduced forms through a reduced indefinite form.
std::vector<QuadForm> cycle_of(const QuadForm& f);

// Class-canonical representative: reduced form (D < 0) or lex-least form on
// the reduced cycle (D > 0).
QuadForm canonical_form(QuadForm f);

// Dirichlet composition of two forms of the same discriminant (canonicalized).
QuadForm compose(const QuadForm& f, const QuadForm& g);

QuadForm identity_form(i64 D);
QuadForm inverse_form(const QuadForm& f);
QuadForm form_pow(const QuadForm& f, i64 e);  // e >= 0

struct ClassGroup {
  i64 D = 0;
  std::vector<QuadForm> classes;  // canonical representatives, sorted
};

// Class group of a fundamental discriminant (narrow group when D > 0).
ClassGroup class_group(i64 D);

i64 class_number(i64 D);

// #{classes g : g^ell = identity}. ell >= 1; even ell with D > 0 throws.
i64 torsion_count(const ClassGroup& G, i64 ell);

// Bulk enumeration for imaginary discriminants: calls cb(D, classes) for every
// fundamental D with lo <= |D| <= hi (D < 0), streaming over |D| blocks so the
// whole range never sits in memory. Parallel over discriminants inside a
// block; callback order is deterministic (ascending |D|) and single-threaded.
void for_each_imaginary_class_group(
    i64 lo, i64 hi,
    const std::function<void(i64 D, const std::vector<QuadForm>&)>& cb);

}  // namespace classieve
