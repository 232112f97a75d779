#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cohera {

// Exact rational scalar. All arithmetic in the project goes through this type;
// there is no floating point anywhere in the core.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Parses "p", "-p", or "p/q" (q > 0 after normalization). Rejects everything
// else, including floats and whitespace-embedded junk.
Rational rat_parse(const std::string& text);

// Lowest terms, "p" or "p/q" with q > 1.
std::string rat_str(const Rational& r);

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// --- small dense-vector helpers used by the LP / cone layers ---

bool vec_is_zero(const Vec& v);
Rational vec_dot(const Vec& a, const Vec& b);        // sizes must match
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Vec vec_neg(const Vec& v);

// Scales v by a positive rational so entries become coprime integers.
// Zero vectors are left alone. Used to canonicalize rays and constraint rows.
void vec_canonicalize(Vec& v);

// Strict lexicographic order on vectors of equal length.
bool vec_lex_less(const Vec& a, const Vec& b);

std::string vec_str(const Vec& v, char sep = ',');
Vec vec_parse_csv(const std::string& text);  // "1,-2/3,0"

}  // namespace cohera
