#pragma once

#include "flagfold/complex.hpp"
#include "flagfold/graph.hpp"

namespace flagfold::fixtures {

// Graph fixtures reuse the Graph constructors (path, cycle, wheel,
// complete, octahedron); the complexes below are the standard small
// triangulations used throughout the test and acceptance suites.

/// Full n-simplex on vertices "0".."n" (one facet of n+1 vertices).
SimplicialComplex full_simplex(int n);
/// Boundary of the n-simplex (all n-element subsets as facets).
SimplicialComplex simplex_boundary(int n);
/// Three edges of a triangle without the 2-face; a circle.
SimplicialComplex hollow_triangle();
/// The 7-vertex Moebius-Csaszar torus: facets {i,i+1,i+3} and {i,i+2,i+3} mod 7.
SimplicialComplex torus_7();
/// The 6-vertex real projective plane (antipodal icosahedron quotient).
SimplicialComplex rp2_6();
/// An 8-vertex dunce hat: contractible but with no free face.
SimplicialComplex dunce_hat();

}  // namespace flagfold::fixtures
