#include "hkcert/e8.hpp"

#include "hkcert/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace hkcert {

bool is_in_e8(const E8Vector& v) {
    int parity = static_cast<int>(v[0] & 1);
    std::int64_t sum = 0;
    for (std::int64_t c : v) {
        if (static_cast<int>(c & 1) != parity) return false;
        sum += c;
    }
    return mod_floor(Int(sum), 4) == 0;
}

bool is_integral_vector(const E8Vector& v) {
    for (std::int64_t c : v)
        if (c & 1) return false;
    return true;
}

std::int64_t inner(const E8Vector& a, const E8Vector& b) {
    Int s = 0;
    for (int i = 0; i < 8; ++i) s += Int(a[i]) * b[i];
    if (s % 4 != 0)
        throw HkError(ErrorKind::DomainError, "inner_product",
                      "doubled dot product not divisible by 4");
    return to_i64(s / 4);
}

const std::vector<E8Vector>& all_roots() {
    static const std::vector<E8Vector> roots = [] {
        std::vector<E8Vector> out;
        out.reserve(240);
        // integral block: +-e_i +- e_j, i < j (doubled entries +-2)
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (std::int64_t si : {2, -2})
                    for (std::int64_t sj : {2, -2}) {
                        E8Vector c{};
                        c[i] = si;
                        c[j] = sj;
                        out.push_back(c);
                    }
        // fractional block: all +-1/2 with an even number of minus signs
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) continue;
            E8Vector c{};
            for (int i = 0; i < 8; ++i) c[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(c);
        }
        for (const E8Vector& r : out) {
            if (!is_in_e8(r) || inner(r, r) != 2) std::abort();  // construction invariant
        }
        return out;
    }();
    return roots;
}

RootCount roots_orthogonal_to(std::span<const E8Vector> vs, std::vector<E8Vector>* out) {
    RootCount rc;
    for (const E8Vector& r : all_roots()) {
        bool orth = true;
        for (const E8Vector& v : vs) {
            Int dot = 0;
            for (int i = 0; i < 8; ++i) dot += Int(r[i]) * v[i];
            if (dot != 0) {
                orth = false;
                break;
            }
        }
        if (!orth) continue;
        if (is_integral_vector(r))
            ++rc.integral;
        else
            ++rc.fractional;
        if (out) out->push_back(r);
    }
    return rc;
}

namespace {

// Fixed integral basis of E8, doubled coordinates.
constexpr std::array<E8Vector, 8> kBasis = {{
    {1, -1, -1, -1, -1, -1, -1, 1},
    {2, 2, 0, 0, 0, 0, 0, 0},
    {-2, 2, 0, 0, 0, 0, 0, 0},
    {0, -2, 2, 0, 0, 0, 0, 0},
    {0, 0, -2, 2, 0, 0, 0, 0},
    {0, 0, 0, -2, 2, 0, 0, 0},
    {0, 0, 0, 0, -2, 2, 0, 0},
    {0, 0, 0, 0, 0, -2, 2, 0},
}};

struct BasisSolver {
    Mat adj;  // adjugate of B^T (doubled): adj * v = det * coords
    Int det_bt;

    BasisSolver() {
        Mat bt(8, Row(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) bt[i][j] = kBasis[j][i];
        det_bt = det(bt);
        adj.assign(8, Row(8, 0));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                Mat minor(7, Row(7));
                for (int r = 0, rr = 0; r < 8; ++r) {
                    if (r == j) continue;
                    for (int c = 0, cc = 0; c < 8; ++c) {
                        if (c == i) continue;
                        minor[rr][cc++] = bt[r][c];
                    }
                    ++rr;
                }
                Int cof = det(minor);
                if ((i + j) % 2 != 0) cof = -cof;
                adj[i][j] = cof;
            }
    }
};

const BasisSolver& basis_solver() {
    static const BasisSolver s;
    return s;
}

}  // namespace

std::array<std::int64_t, 8> e8_basis_coordinates(const E8Vector& v) {
    const BasisSolver& s = basis_solver();
    std::array<std::int64_t, 8> out{};
    for (int i = 0; i < 8; ++i) {
        Int num = 0;
        for (int j = 0; j < 8; ++j) num += s.adj[i][j] * v[j];
        if (num % s.det_bt != 0)
            throw HkError(ErrorKind::DomainError, "basis_coordinates",
                          "vector is not an integral combination of the E8 basis");
        out[i] = to_i64(num / s.det_bt);
    }
    return out;
}

bool is_primitive_embedding(std::span<const E8Vector> vs) {
    if (vs.empty())
        throw HkError(ErrorKind::DomainError, "basis_coordinates", "empty vector tuple");
    Mat coords;
    coords.reserve(vs.size());
    for (const E8Vector& v : vs) {
        auto c = e8_basis_coordinates(v);
        Row row(8);
        for (int i = 0; i < 8; ++i) row[i] = c[i];
        coords.push_back(std::move(row));
    }
    std::vector<Int> inv = invariant_factors(coords);
    if (inv.size() != vs.size())
        throw HkError(ErrorKind::DependentVectors, "independent_vectors",
                      "vectors are linearly dependent");
    return std::all_of(inv.begin(), inv.end(), [](const Int& f) { return f == 1; });
}

const std::array<E8Vector, 4>& vminus_generators() {
    static const std::array<E8Vector, 4> gens = {{
        {2, 0, 0, 0, -2, 0, 0, 0},
        {0, 2, 0, 0, 0, -2, 0, 0},
        {0, 0, 2, 0, 0, 0, -2, 0},
        {0, 0, 0, 2, 0, 0, 0, -2},
    }};
    return gens;
}

const std::array<E8Vector, 4>& vplus_generators() {
    static const std::array<E8Vector, 4> gens = {{
        {2, 0, 0, 0, 2, 0, 0, 0},
        {0, 2, 0, 0, 0, 2, 0, 0},
        {0, 0, 2, 0, 0, 0, 2, 0},
        {0, 0, 0, 2, 0, 0, 0, 2},
    }};
    return gens;
}

bool in_vminus(const E8Vector& v) {
    for (int i = 0; i < 4; ++i)
        if (v[i] != -v[i + 4]) return false;
    return is_in_e8(v);
}

int roots_in_vminus_orthogonal_to(const E8Vector& v1) {
    bool zero = std::all_of(v1.begin(), v1.end(), [](std::int64_t c) { return c == 0; });
    if (zero) throw HkError(ErrorKind::ZeroVector, "zero_vector", "v1 must be nonzero");
    if (!in_vminus(v1))
        throw HkError(ErrorKind::NotInVminus, "in_vminus", "v1 must lie in V-");
    int count = 0;
    for (const E8Vector& r : all_roots()) {
        if (!in_vminus(r)) continue;
        Int dot = 0;
        for (int i = 0; i < 8; ++i) dot += Int(r[i]) * v1[i];
        if (dot == 0) ++count;
    }
    return count;
}

GramMatrix gram_of(std::span<const E8Vector> vs) {
    Mat g(vs.size(), Row(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            Int s = 0;
            for (int k = 0; k < 8; ++k) s += Int(vs[i][k]) * vs[j][k];
            if (s % 4 != 0)
                throw HkError(ErrorKind::DomainError, "inner_product",
                              "doubled dot product not divisible by 4");
            g[i][j] = s / 4;
        }
    return make_gram(std::move(g));
}

}  // namespace hkcert
