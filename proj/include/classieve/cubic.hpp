#pragma once
// Cubic fields via integral binary cubic forms.
//
// The Davenport–Heilbronn correspondence matches isomorphism classes of
// cubic fields with GL2(Z)-classes (up to sign) of irreducible integral
// binary cubic forms that are maximal at every prime. The census routines
// enumerate one canonical reduced representative per class with
// 0 < |disc| <= X: positive discriminants are reduced through the integral
// Hessian (definite for disc > 0), negative discriminants through a positive
// definite real covariant attached to the unique real root, with all
// boundary decisions made in exact arithmetic over Q(theta).

#include <compare>
#include <string>
#include <vector>

#include "classieve/arith.hpp"

namespace classieve {

// F(x, y) = a x^3 + b x^2 y + c x y^2 + d y^3.
struct CubicForm {
  i64 a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const CubicForm&, const CubicForm&) = default;
  friend auto operator<=>(const CubicForm&, const CubicForm&) = default;
};

// disc = 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 (throws on overflow).
i64 cubic_disc(const CubicForm& f);

i64 cubic_content(const CubicForm& f);

// Substitution F(px + qy, rx + sy).
CubicForm cubic_transform(const CubicForm& f, i64 p, i64 q, i64 r, i64 s);

// True iff F is irreducible over Q (equivalently: a != 0, d != 0 give a
// genuine cubic and F(u, v) != 0 for every rational point).
bool cubic_irreducible(const CubicForm& f);

// Maximality of the cubic ring attached to F (Davenport–Heilbronn):
// non-maximal at p iff p | content, or a finite multiple root r of F mod p
// has p^2 | F(r, 1), or a multiple root at infinity (p | a, b) has p^2 | a.
bool cubic_maximal_at(const CubicForm& f, i64 p);

// Checks every prime with p^2 | disc (the only candidates).
bool cubic_maximal(const CubicForm& f);

// Splitting of p in the cubic field of a maximal irreducible form:
// unramified (111), (12), (3); ramified (1^2 1) partial, (1^3) total.
enum class CSplit { s111, s12, s3, ram_partial, ram_total };
std::string csplit_name(CSplit s);
CSplit cubic_splitting(const CubicForm& f, i64 p);

struct CubicField {
  CubicForm f;  // canonical reduced representative
  i64 disc = 0;
  friend bool operator==(const CubicField&, const CubicField&) = default;
};

// All cubic fields with 0 < disc <= X (negative = false) or
// 0 < -disc <= X (negative = true), one canonical form per field,
// sorted by |disc| then form.
struct CubicCensus {
  i64 X = 0;
  bool negative = false;
  std::vector<CubicField> fields;
};

CubicCensus enumerate_cubic(i64 X, bool negative);         // OpenMP kernel
CubicCensus enumerate_cubic_serial(i64 X, bool negative);  // reference

// Number of fields in the census where p has the given splitting type.
i64 count_cubic_with_splitting(const CubicCensus& census, i64 p, CSplit s);

// Leading Davenport–Heilbronn term: X/(12 zeta(3)) totally real,
// X/(4 zeta(3)) complex.
double cubic_main_term(i64 X, bool negative);

// CSV: "a,b,c,d,disc" rows in census order.
std::string cubic_census_to_csv(const CubicCensus& census);

}  // namespace classieve
