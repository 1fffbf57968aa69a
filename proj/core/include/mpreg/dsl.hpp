#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "mpreg/bundle.hpp"

namespace mpreg {

// Text grammar (whitespace insignificant):
//   space   := "P" INT ("x" "P" INT)*
//   atom    := "O(" SINT ")" | "W" INT "(" SINT ")"        W p (t) = Omega^p(t)
//   summand := atom ("*" atom)*                            one atom per factor
//   bundle  := summand ("+" summand)* ["@(" SINT ("," SINT)* ")"]
// "O(a_1,...,a_s)" is shorthand for the line summand O(a_1)*...*O(a_s).

Space parse_space(std::string_view text);
Bundle parse_bundle(const Space& space, std::string_view text);
std::pair<Space, Bundle> parse_bundle(std::string_view space_text, std::string_view bundle_text);

std::string to_dsl(const Atom& atom);
std::string to_dsl(const BoxSummand& summand);
/// Canonical text form; parse_bundle(space, to_dsl(b)) == b.
std::string to_dsl(const Bundle& bundle);

}  // namespace mpreg
