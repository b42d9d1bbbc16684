#ifndef CALEX_TEXTIO_HPP
#define CALEX_TEXTIO_HPP

#include <string>

#include "calex/cgroup.hpp"
#include "calex/linalg.hpp"
#include "calex/poly.hpp"

namespace calex {

/// Polynomial text grammar over the variable t: signed monomials with
/// integer coefficients, nonnegative exponents, '*', '^', parentheses, and
/// implicit multiplication of adjacent factors ("(t-1)^2*(t+1)", "3t^2").
IntPoly parse_poly(const std::string& text);

std::string poly_to_string(const IntPoly& p);
std::string ratpoly_to_string(const RatPoly& p);
std::string laurent_to_string(const LaurentPoly& p);

/// Words print as whitespace-separated tokens "x3^-1 x1"; the identity is "".
std::string word_to_string(const Word& w);

/// Relation lines print the conjugator sandwich without free reduction, so
/// the printed form parses back to the same stored relation.
std::string relation_to_string(const ConjRelation& r);

/// Presentation text:
///   cgroup m=3
///   x3 = x1^-1 x2 x1
/// One relation per line; each right-hand side must have (or freely reduce
/// to) the shape w^-1 xj w.
std::string presentation_to_string(const CPresentation& g);
CPresentation parse_presentation(const std::string& text);

/// Square integer matrix from a whitespace/bracket/comma tolerant list:
/// either n followed by n^2 entries, or a bare perfect-square list.
IntMatrix parse_square_matrix(const std::string& text);
std::string matrix_to_string(const IntMatrix& m);

}  // namespace calex

#endif
