#pragma once

#include <string>
#include <vector>

#include "fermat/matrix.hpp"
#include "fermat/ring.hpp"

namespace fermat {

// Recursive-descent parser for the shared expression grammar:
//   expr    := ('+'|'-')? term (('+'|'-') term)*
//   term    := primary ('*'? primary)*
//   primary := base ('^' uint)?
//   base    := 'x' uint | 'w' | 'i' | uint ('/' uint)? | '(' expr ')'
// Power binds tighter than the leading minus so that canonical output like
// "-x1^2" round-trips. Errors carry the byte offset of the failure.
RingElem parse_expression(const std::string& text, const RingSpecPtr& spec);

// Same grammar without variables; used for scalar flags and matrix entries.
CycloNum parse_coefficient(const std::string& text, const FieldPtr& field);

// Matrix text: rows separated by ';', entries by ','.
Matrix parse_matrix(const std::string& text, const FieldPtr& field);

// Ring configuration "n=<n>;m=<m1,..,mn>;field=<k>" (the field part may be omitted).
struct RingSpecText {
    unsigned n;
    std::vector<unsigned> exponents;
    unsigned conductor;
    bool conductor_given;
};
RingSpecText parse_ring_spec(const std::string& text, unsigned default_conductor);

// Derivation images "d(x1)=<expr>; ...; d(xn)=<expr>" (an optional leading
// "images:" tag is accepted).
std::vector<RingElem> parse_images(const std::string& text, const RingSpecPtr& spec);

}  // namespace fermat
