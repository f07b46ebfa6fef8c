#include "hkcert/gram.hpp"

#include <algorithm>

namespace hkcert {

GramMatrix make_gram(Mat entries) {
    std::size_t dim = entries.size();
    for (const auto& row : entries)
        if (row.size() != dim)
            throw HkError(ErrorKind::DomainError, "gram_shape", "gram matrix must be square");
    for (std::size_t i = 0; i < dim; ++i) {
        if (entries[i][i] % 2 != 0)
            throw HkError(ErrorKind::DomainError, "gram_odd_diagonal",
                          "even lattice requires even diagonal");
        for (std::size_t j = i + 1; j < dim; ++j)
            if (entries[i][j] != entries[j][i])
                throw HkError(ErrorKind::DomainError, "gram_asymmetric",
                              "gram matrix must be symmetric");
    }
    return GramMatrix{dim, std::move(entries)};
}

DiscriminantGroup discriminant_group(const GramMatrix& g) {
    DiscriminantGroup out;
    out.order = abs(det(g.entries));
    if (out.order == 0)
        throw HkError(ErrorKind::DomainError, "gram_degenerate",
                      "discriminant group needs a nondegenerate form");
    for (const Int& v : invariant_factors(g.entries))
        if (v > 1) out.elementary_divisors.push_back(v);
    return out;
}

Int divisibility(const std::vector<Int>& v, const GramMatrix& g) {
    if (v.size() != g.dim)
        throw HkError(ErrorKind::DomainError, "gram_shape", "vector length != gram dim");
    Int acc = 0;
    for (std::size_t i = 0; i < g.dim; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < g.dim; ++j) s += g.at(i, j) * v[j];
        acc = gcd(acc, s);
    }
    if (acc == 0)
        throw HkError(ErrorKind::ZeroVector, "zero_vector",
                      "divisibility of the zero vector is undefined");
    return acc;
}

bool is_positive_definite(const GramMatrix& g) {
    for (std::size_t k = 1; k <= g.dim; ++k) {
        Mat sub(k, Row(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = g.at(i, j);
        if (det(sub) <= 0) return false;
    }
    return true;
}

GramMatrix gram_qh_k3n(const Int& n, const Int& gamma, const Int& a, const Int& t) {
    Int m = 2 * (n - 1);
    if (gamma <= 0) throw HkError(ErrorKind::DomainError, "gamma_range", "gamma must be positive");
    Int num = 2 * a * (n - 1);
    if (num % gamma != 0)
        throw HkError(ErrorKind::DivisibilityViolation, "gamma_divides",
                      "2a(n-1) must be divisible by gamma");
    Int off = -(num / gamma);
    return make_gram({{m, off}, {off, 2 * t}});
}

GramMatrix gram_qt_og10(const Int& t) {
    return make_gram({{Int(2), Int(-1), Int(0)}, {Int(-1), Int(2), Int(1)}, {Int(0), Int(1), 2 * t}});
}

}  // namespace hkcert
