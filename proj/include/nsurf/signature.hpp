#pragma once

#include <string>

#include "nsurf/triangulation.hpp"

namespace nsurf {

/// Relabelling-invariant text token: two triangulations share a signature
/// exactly when one can be carried onto the other by relabelling tetrahedra
/// and/or relabelling vertices within tetrahedra.  The token parses back to
/// a member of the isomorphism class.
std::string canonical_signature(const Triangulation& t);

Triangulation triangulation_from_signature(const std::string& sig);

}  // namespace nsurf
