// The E8 root system as concrete data.
//
// Vectors live in the coordinate model whose elements have either all
// integer or all half-integer coordinates with even coordinate sum.  We
// store doubled coordinates c_i = 2x_i, so everything is machine-integer
// exact: membership is "all c_i share a parity and sum(c_i) % 4 == 0", and
// the inner product is sum(c_i d_i)/4.
//
// The 240 roots split into 112 "integral" ones (+-e_i +- e_j) and 128
// "fractional" ones (all coordinates +-1/2, even number of minus signs).
#pragma once

#include "hkcert/errors.hpp"
#include "hkcert/gram.hpp"
#include "hkcert/ints.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace hkcert {

using E8Vector = std::array<std::int64_t, 8>;  // doubled coordinates

bool is_in_e8(const E8Vector& v);
bool is_integral_vector(const E8Vector& v);  // all doubled coordinates even

// Exact inner product; throws DomainError if the doubled dot is not
// divisible by 4 (i.e. the arguments are not both in E8's rational span).
std::int64_t inner(const E8Vector& a, const E8Vector& b);

// The 240 roots, generated once and cached; integral block first.
const std::vector<E8Vector>& all_roots();

struct RootCount {
    int integral = 0;
    int fractional = 0;
    int total() const { return integral + fractional; }
    bool operator==(const RootCount&) const = default;
};

// Roots orthogonal to every v in vs; optionally returns the roots themselves.
RootCount roots_orthogonal_to(std::span<const E8Vector> vs, std::vector<E8Vector>* out = nullptr);

// True iff the sublattice generated by vs is primitively embedded: express
// each v in a fixed integral basis of E8 and require all Smith invariant
// factors of the coordinate matrix to be 1.  Throws DependentVectors if the
// vs are linearly dependent.
bool is_primitive_embedding(std::span<const E8Vector> vs);

// Integer coordinates of v in the fixed integral basis.
// Throws DomainError if v is not an integral combination (i.e. not in E8).
std::array<std::int64_t, 8> e8_basis_coordinates(const E8Vector& v);

// V- = <e1-e5, e2-e6, e3-e7, e4-e8> (= A1^4) and its opposite V+.
const std::array<E8Vector, 4>& vminus_generators();
const std::array<E8Vector, 4>& vplus_generators();
bool in_vminus(const E8Vector& v);

// Number of roots lying in V- and orthogonal to v1 (v1 must be a nonzero
// element of V-).  V- contains exactly the 8 roots +-(e_i - e_{i+4}).
int roots_in_vminus_orthogonal_to(const E8Vector& v1);

// Exact Gram matrix of a tuple of E8 vectors.
GramMatrix gram_of(std::span<const E8Vector> vs);

}  // namespace hkcert
