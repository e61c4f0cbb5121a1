#pragma once

#include "aaslab/build.hpp"
#include "aaslab/signature.hpp"

#include <string_view>

namespace aaslab::cli {

/// Group grammar (whitespace is ignored):
///   spec    := factor ('x' factor)*
///   factor  := A<n> | S<n> | C<n> | D<n> | Q<2^k> | SL(2,q) | PSL(2,q)
///            | Heis(p) | MC(p,a,b,t) | EA(p,k) | Perm[gen(;gen)*]
///   gen     := '()' | cycle+        cycle := '(' n (',' n)* ')'
/// Throws ParseError with the column of the offending character; parameters
/// out of range are reported the same way, at the start of their factor.
GroupSpec parse_group_spec(std::string_view text);

/// "<h>;-" or "<h>;<m1>,<m2>,..."; the tail is sorted. Throws ParseError.
Signature parse_signature(std::string_view text);

} // namespace aaslab::cli
