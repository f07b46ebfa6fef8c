// Primitive-embedding constructors into E8.
//
// Four recipes, one per divisibility regime:
//   * embed_gamma_ge3 — rank-2 forms [[M,N],[N,P]] via the six-case
//     Omega/Theta construction (divisibility >= 3);
//   * embed_gamma1    — rank-2 split forms diag(2(n-1), 2d) inside
//     V- (+) V+ (divisibility 1);
//   * embed_k32_div2  — [[2,-1],[-1,2t]] for the 4-dimensional family
//     (divisibility 2), window recipe plus the published low-t rows;
//   * embed_og10_div3 — rank-3 [[2,-1,0],[-1,2,1],[0,1,2t]] for the
//     10-dimensional family (divisibility 3), window recipe plus the
//     published low-t rows.
//
// Every constructor re-verifies its own output: exact Gram reproduction is
// asserted, primitivity is certified by Smith invariants, and root counts
// come from the exhaustive 240-root oracle, never from the recipe's
// advertised window.
#pragma once

#include "hkcert/diophantine.hpp"
#include "hkcert/e8.hpp"
#include "hkcert/errors.hpp"
#include "hkcert/gram.hpp"
#include "hkcert/ints.hpp"
#include "hkcert/squares.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hkcert {

struct Embedding {
    GramMatrix gram;
    std::vector<E8Vector> images;
    std::string construction_tag;
    bool primitive = false;
};

// Selection data recorded by embed_gamma_ge3 for the certificate.
struct OmegaThetaSelection {
    int omega = 0;
    int theta = 0;
    int xi = 0;  // 0 when unused (outside the split-tail case)
    Int S = 0;
    std::string case_label;              // "case1" .. "case6"
    std::array<Int, 3> alpha{};          // distinct coprime squares of M - 2*Omega^2
    DiophantineSolution x;               // parity solution for the cross term
    int alpha_index = 0;                 // 0 = canonical decomposition, k = k-th fallback
};

struct Ge3Embedding {
    Embedding emb;
    OmegaThetaSelection sel;
};

// M even > 8, M not in {20,24}; P even; [[M,N],[N,P]] positive definite.
// Throws HypothesisViolated with the exact failed premise name:
//   M_excluded, P_parity, not_positive_definite, S_small, S_excluded,
//   no_alpha_decomposition.
// When several alpha-decompositions exist they are tried in descending
// lexicographic order until the S-exclusions pass (index recorded).
Ge3Embedding embed_gamma_ge3(const Int& M, const Int& N, const Int& P);

struct VPlusMinus {
    std::array<E8Vector, 4> vplus;
    std::array<E8Vector, 4> vminus;
};

struct Gamma1Embedding {
    Embedding emb;
    VPlusMinus vpm;
    std::array<Int, 3> alpha;  // positive coprime squares of n-1, parity-ordered
    std::array<Int, 4> xs;     // four-squares tail of d
    bool x1_zero_mode = false; // the root-count mod 4 refinement applied
};

// Premises: n-1 > 6, n-1 = 1,2 mod 4, n-1 not in {10,13,25,37,58,85,130};
// d >= 3, d != 0 mod 4.  v1 in V-, v2 in V+.
// Throws HypothesisViolated: n_minus_1_small, n_minus_1_residue,
//   n_minus_1_excluded, d_small, d_residue, no_tail.
Gamma1Embedding embed_gamma1(const Int& n, const Int& d);

struct K32Embedding {
    Embedding emb;
    int x1 = 0;                 // unused for the half-integer row
    std::array<Int, 4> tail{};  // (x5,x6,x7,x8); unused for the half-integer row
    Int R = 0;
    bool half_integer = false;  // t = 21 row
};

// t >= 13 (window recipe; t = 21 ships the published half-integer vector).
// t in {10,12} throws LiteratureCase("GHS13 Prop. 9.2"); t = 11 and t < 10
// throw OpenCase("t_open").
K32Embedding embed_k32_div2(const Int& t);

struct OG10Embedding {
    Embedding emb;
    int x1 = 0;
    int theta = -1;                    // -1 for raw table rows without a theta
    std::array<Int, 3> tail{};         // zero-filled for raw rows
    Int R = 0;
    bool from_table = false;           // 5 <= t <= 66 published row
    bool corrected = false;            // published row repaired to satisfy its own Gram
};

// t >= 67 window recipe; 5 <= t <= 66 published rows verbatim (repaired
// where the printed coefficients fail their own Gram matrix).  t = 4 throws
// LiteratureCase("GHS11 Cor. 4.3"); t in {1,2,3} throws OpenCase("t_open").
OG10Embedding embed_og10_div3(const Int& t);

// ---- published low-t tables (exposed for the table subcommand/tests) ----

struct PublishedCounts {
    std::optional<int> integral;  // not always stated
    int fractional = 0;
};

// Published root counts for the divisibility-2 table, t in [13,33].
std::optional<PublishedCounts> k32_published_counts(int t);
// Published root counts for the rank-3 table, t in [5,66].
std::optional<PublishedCounts> og10_published_counts(int t);

// ---- proof-side classification predictions (checked against the oracle) ----

// Integral roots orthogonal to the divisibility-1 embedding, predicted from
// the coefficient pattern alone: +-(e4-e8) always; +-(e_i+e_{i+4}) iff
// x_i = 0 (i <= 3); +-(e_i-e_j), +-(e_{i+4}-e_{j+4}) iff alpha_i = alpha_j
// and x_i = x_j.
std::vector<E8Vector> gamma1_predicted_integral_roots(const std::array<Int, 3>& alpha,
                                                      const std::array<Int, 4>& xs);

// Fractional roots exist iff 2*x1+1 = +-x5 +- x6 +- x7 +- x8 is solvable.
bool k32_fractional_possible(int x1, const std::array<Int, 4>& tail);

// Fractional roots exist iff 3*x1+1 = +-theta +- theta +- x6 +- x7 +- x8.
bool og10_fractional_possible(int x1, int theta, const std::array<Int, 3>& tail);

}  // namespace hkcert
