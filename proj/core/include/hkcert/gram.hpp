// Gram matrices of even lattices and the specific rank-2/rank-3 forms the
// certifier constructs, plus discriminant-group bookkeeping.
//
// Sign convention: negative-definite twists are always stored as their
// positive-definite negations; the twist is the call site's business.
#pragma once

#include "hkcert/errors.hpp"
#include "hkcert/ints.hpp"
#include "hkcert/matrix.hpp"

#include <cstddef>
#include <vector>

namespace hkcert {

struct GramMatrix {
    std::size_t dim = 0;
    Mat entries;  // symmetric, even diagonal

    const Int& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

// Throws DomainError unless entries are square/symmetric with even diagonal.
GramMatrix make_gram(Mat entries);

struct DiscriminantGroup {
    std::vector<Int> elementary_divisors;  // invariant factors > 1, divisor chain
    Int order;                             // = |det(gram)|
};

DiscriminantGroup discriminant_group(const GramMatrix& g);

// gcd of the entries of g*v: the divisibility div(v) of v in the lattice.
Int divisibility(const std::vector<Int>& v, const GramMatrix& g);

// All leading principal minors positive (exact determinants).
bool is_positive_definite(const GramMatrix& g);

// Rank-2 polarization form for the 2n-dimensional family:
//   [[2(n-1), -2a(n-1)/gamma], [-2a(n-1)/gamma, 2t]].
// Throws DivisibilityViolation if 2a(n-1)/gamma is not integral.
GramMatrix gram_qh_k3n(const Int& n, const Int& gamma, const Int& a, const Int& t);

// Rank-3 positive-definite form for the 10-dimensional family:
//   [[2,-1,0], [-1,2,1], [0,1,2t]].
GramMatrix gram_qt_og10(const Int& t);

}  // namespace hkcert
