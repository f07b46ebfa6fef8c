// Top-level theorem dispatch: non-emptiness, component enumeration,
// reductions (strange duality, square stripping), hypothesis checking,
// certificate assembly and independent re-verification.
//
// certify() never throws on a type-valid query: every failure is converted
// into a named check record and a verdict.  GeneralType is emitted only
// when every recorded check passes and the emitted certificate survives
// verify_certificate (self-verification before emission).
#pragma once

#include "hkcert/embeddings.hpp"
#include "hkcert/errors.hpp"
#include "hkcert/ints.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hkcert {

enum class Family { K3N, OG10 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

struct ModuliQuery {
    Family family = Family::K3N;
    Int n = 2;          // ignored for OG10
    Int d = 1;          // degree 2d stored as d
    Int gamma = 1;
    std::optional<Int> a;  // component label; absent = all components

    bool operator==(const ModuliQuery&) const = default;
};

enum class Verdict {
    GeneralType,
    GeneralTypeLiterature,
    NonNegativeKodaira,
    OpenCase,
    Inconclusive,
    Empty,
};

std::string verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(const std::string& s);
// Preference order for "best across reductions" and the aggregate over
// components: GeneralType > GeneralTypeLiterature > NonNegativeKodaira >
// OpenCase > Inconclusive.  Lower rank = stronger.
int verdict_rank(Verdict v);

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct ReductionStep {
    std::string kind;  // strange_duality | divide_d_by_square | divide_n_by_square
                       // | gamma2_to_n2 | four_power_strip
    Int param = 0;     // r, k, or e; 0 when not applicable
    ModuliQuery from;
    ModuliQuery to;
    CheckRecord validity;
};

struct ComponentSet {
    std::vector<Int> labels;  // representatives in [0, gamma/2], coprime to gamma
};

struct CertifyOptions {
    bool exhaustive = false;        // enable the budgeted fallback search
    std::int64_t budget = 5'000'000;  // candidate vectors examined in the fallback
};

// Default budget, overridable via the HKCERT_BUDGET environment variable.
std::int64_t default_budget();

struct Certificate {
    int schema_version = 1;
    ModuliQuery query;
    CertifyOptions options;
    std::optional<Int> t;
    std::optional<int> monodromy;
    std::vector<Int> component_labels;
    std::vector<ReductionStep> reduction_chain;
    std::optional<Embedding> embedding;
    std::optional<OmegaThetaSelection> selection;  // rank-2 recipe data when used
    std::optional<RootCount> root_count;
    std::vector<CheckRecord> checks;
    Verdict verdict = Verdict::Inconclusive;
    std::string citation;  // nonempty iff verdict = GeneralTypeLiterature
    std::string witness;   // "partial" on the odd-prime path (completion is symbolic)
    std::vector<Certificate> components;  // aggregate certificates only
};

// Exact solution set of the component congruence intersected with the
// representative range.  K3N, gamma=1 always yields {0}; OG10 yields {0}
// for gamma=1 and {1} for gamma=3 iff 2d = 12 mod 18.
ComponentSet non_empty_components(Family family, const Int& n, const Int& d, const Int& gamma);

// t = (d + (n-1)a^2) / gamma^2; throws NonIntegralT.
Int t_of(const Int& n, const Int& d, const Int& gamma, const Int& a);

// 1 if n = 2 or gamma >= 3, else 2.
int monodromy_index(const Int& n, const Int& gamma);

struct StrangeDuality {
    Int n2, d2, gamma;  // dual query: (d+1, n-1, gamma)
    Int a_label;        // representative in [0, gamma/2] with a*a_label = +-1 mod gamma
    Int a_rep;          // exact inverse of a mod gamma^2 (0 for gamma = 1)
    Int z;              // (a*a_rep - 1)/gamma (-1 for gamma = 1)
    Int t_map;          // (n-1 + d*a_rep^2)/gamma^2, the Gram-map target
    // Column-convention basis map T = [[a_rep, -z], [gamma, -a]]:
    // z1 -> a_rep*z1' + gamma*z2', z2 -> -(z*z1' + a*z2'); T^t Q' T = Q.
    std::array<std::array<Int, 2>, 2> basis_map;
};

// Component-wise duality (n,d,gamma,a) -> (d+1, n-1, gamma, a').  Throws
// EmptyQuery if (n,d,gamma,a) fails the component congruence.
StrangeDuality strange_duality(const Int& n, const Int& d, const Int& gamma, const Int& a);

// Full dispatch.  Query without a label certifies every component and
// aggregates (worst verdict across components: the headline claims concern
// every component).
Certificate certify(const ModuliQuery& query, const CertifyOptions& options = {});

// Recomputes the whole certificate from its query and compares against the
// stored record; true iff they agree field-for-field.
bool verify_certificate(const Certificate& cert);

}  // namespace hkcert
