#pragma once

// Independent brute-force verifiers for the test suite. These deliberately
// avoid the engine's Bil / orthogonal-complement / rho machinery and work
// straight from definitions.

#include "modcat.hpp"

namespace fc {

// Basis u_x for x in the element list, u_x u_y = twist(x,y) u_{x+y}.
struct TwistedGroupAlgebra {
    Cochain2 twist;  // domain is the algebra's grading group (closed set)
};

// Exhaustive search over 1-cochains kappa valued in (1/M)Z/Z for one with
// d2(kappa) = c. Bounds: |dom| <= 4, M <= 4.
bool brute_is_coboundary(const Cochain2& c, long long M);

// Number of central basis directions: x such that twist(x,y) = twist(y,x)
// for all y. Bound: |dom| <= 64.
long long center_dimension(const TwistedGroupAlgebra& alg);

// Simple-object count of the module category of k^phi[B] in Vect_A^omega:
// center dimension of the kernel subalgebra times |A / f(B)|, computed
// without the engine's decomposition.
long long brute_simple_count(const Subgroup& b, const GroupHom& f, const Cochain2& phi,
                             const PointedBraidedCategory& cat);

}  // namespace fc
