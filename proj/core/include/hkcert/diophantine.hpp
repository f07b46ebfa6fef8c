// Parity-constrained linear Diophantine solver:
//
//     a1*x1 + a2*x2 + a3*x3 = K,   (a1,a2,a3) coprime, exactly one even,
//
// with all x_i odd when K is even, exactly one x_i even when K is odd, and
// a3 = 0 pinning x3 = 1.  The solver returns the global minimal-norm
// solution (ties broken lexicographically), searched over a growing box
// that provably contains the minimizer before termination: once the box
// radius reaches isqrt(best_norm)+1 no smaller-norm solution can exist
// outside it.  Norm minimization is required, not cosmetic — the sharp
// root-count bounds improve monotonically as the norm shrinks.
#pragma once

#include "hkcert/errors.hpp"
#include "hkcert/ints.hpp"

#include <array>

namespace hkcert {

enum class ParityMode {
    AllOdd,   // K even
    OneEven,  // K odd
};

struct DiophantineSolution {
    std::array<Int, 3> xs;
    Int norm;       // x1^2 + x2^2 + x3^2
    Int max_abs_x;
    Int bound;      // classical existence bound for the transformed equation
};

// Classical bound max{|a1|,|a2|,|a3|,|K'|} where K' is the already
// parity-transformed right-hand side (substituting X = 2Y + 1 shifts K).
Int bfrt_bound(const std::array<Int, 3>& alphas, const Int& k_transformed);

// Minimal-norm parity-constrained solution.  Preconditions checked:
// gcd(alphas) = 1, exactly one alpha even (0 counts as even), mode matches
// the parity of K.  Throws BadParityMode / DomainError / NoSolution.
DiophantineSolution solve_parity(const std::array<Int, 3>& alphas, const Int& K, ParityMode mode);

}  // namespace hkcert
