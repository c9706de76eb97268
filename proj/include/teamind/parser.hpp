#pragma once

#include <string>

#include "teamind/atom.hpp"
#include "teamind/error.hpp"

namespace teamind {

/// Parses a dependency atom:
///
///   FD    names -> names
///   EMVD  names ->> names | names
///   DEP   dep( names ; names )
///   IND   names _||_ names
///         names _||_{ names } names
///
/// Attribute names are whitespace separated; "()" writes the empty tuple in
/// any position. Unicode input is accepted for the two operators (the
/// bottom symbol for _||_ and the two-headed arrow for ->>). A "(" glued to
/// a name is rejected as unsupported term syntax. Malformed input raises
/// SyntaxError carrying the byte offset and the expected-token set.
DependencyAtom parse_atom(const std::string& text);

}  // namespace teamind
