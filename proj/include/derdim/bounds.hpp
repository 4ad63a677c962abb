// Upper bounds on the derived dimension of a bound quiver algebra, with the
// side conditions of each bound certified before a value is emitted.
//
// Bound inputs (Loewy length, global dimension, projective dimensions of
// simples, syzygy-type certificates) are memoized per algebra so that a
// search over all subsets V of simples only pays for layer lengths.

#pragma once

#include <optional>
#include <string>

#include "derdim/complex.hpp"
#include "derdim/rep.hpp"
#include "derdim/torsion.hpp"

namespace derdim {

struct SyzygyTypeCertificate {
    enum class Tag { GldimFinite, Periodic, Unknown } tag = Tag::Unknown;
    int gldim = -1;       // GldimFinite
    int wit_a = -1, wit_b = -1;  // Periodic: Omega^a(top) = Omega^b(top) != 0
    int depth = 0;        // syzygies searched

    bool certified() const { return tag != Tag::Unknown; }
};

// Memoized homological data for one algebra (and its opposite).
struct AlgebraContext {
    AlgebraPtr alg;
    AlgebraPtr op;
    u64 seed = 0;
    int cutoff = 64;
    int depth = 24;

    Rep regular;                        // Lambda as a right module
    int loewy = 1;
    std::vector<PdResult> pd_simple;    // pd S(i)
    std::vector<PdResult> id_simple;    // id S(i) (= pd over the opposite)
    PdResult gldim;
    SyzygyTypeCertificate cert;         // syzygy type of Lambda/rad Lambda
    SyzygyTypeCertificate op_cert;      // cosyzygy side, over the opposite

    std::mt19937_64 fresh_rng() const { return std::mt19937_64(seed); }
};

AlgebraContext make_context(AlgebraPtr alg, u64 seed, int cutoff = 64, int depth = 24);

// Certificate that Lambda/rad Lambda has finite syzygy type: finite global
// dimension, or a certified repeat in its syzygy chain.
SyzygyTypeCertificate syzygy_type(AlgebraPtr alg, std::mt19937_64& rng, int cutoff = 64, int depth = 24);

struct BoundEntry {
    std::string name;
    std::string formula;
    enum class Applicable { Yes, No, Unknown } applicable = Applicable::Unknown;
    std::optional<int> value;
    std::string reason;  // why not applicable / unknown
};

struct BoundReport {
    std::vector<int> v;  // chosen vertices, 0-based
    int layer_len = 0;   // ll_V of the regular module
    PdResult pd_v;
    PdResult id_v;
    int loewy = 1;
    PdResult gldim;
    SyzygyTypeCertificate cert;
    SyzygyTypeCertificate op_cert;
    std::vector<BoundEntry> entries;
    std::optional<int> min_bound;  // minimum over applicable entries
};

int bound_loewy(const AlgebraContext& ctx);                 // LL - 1, always applicable
std::optional<int> bound_gldim(const AlgebraContext& ctx);  // when gldim is certified finite

BoundReport full_report(const AlgebraContext& ctx, const SimpleSet& v);

// Every report invariant that can be checked structurally: values only next
// to certified preconditions, min over applicable entries.
void validate_report(const BoundReport& r);

struct SearchRow {
    std::vector<int> v;
    int min_bound = 0;
};

// Ranked subsets V by their best applicable bound (ties broken by |V|, then
// by the subset itself). Exhaustive for vertex_count <= subset_limit, greedy
// hill climbing otherwise when allowed.
std::vector<SearchRow> best_v_search(const AlgebraContext& ctx, int subset_limit = 16,
                                     bool allow_greedy = false);

}  // namespace derdim
