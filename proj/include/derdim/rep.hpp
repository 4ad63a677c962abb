// Finite-dimensional right modules over a bound quiver algebra, presented as
// quiver representations: one GF(p) coordinate space per vertex, one matrix
// per arrow. Module elements are row vectors and an arrow a: u -> v acts by
// right multiplication M_u -> M_v, so path actions compose left to right.
//
// Everything here is immutable after construction and every constructed Rep
// is checked against the algebra relations.

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "derdim/algebra.hpp"
#include "derdim/linalg.hpp"

namespace derdim {

struct Rep {
    AlgebraPtr alg;
    std::vector<int> dims;       // per vertex
    std::vector<Mat> arrow_maps; // arrow_maps[a]: dims[src] x dims[tgt]

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    bool same_dims(const Rep& o) const { return dims == o.dims; }
};

// Per-vertex subspaces of a parent representation, closed under all arrows.
struct SubRep {
    std::vector<Subspace> at;  // ambient = parent dims

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// A homomorphism of representations; f[v] maps rows of the source at v to
// rows of the target at v, and intertwines all arrow actions.
struct ModuleMap {
    std::vector<Mat> f;
};

Rep make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> arrow_maps);
Rep zero_rep(AlgebraPtr alg);
Rep simple(AlgebraPtr alg, int vertex);

void check_rep(const Rep& m);                       // throws on relation violation
bool is_module_map(const Rep& m, const Rep& n, const ModuleMap& f);
void check_module_map(const Rep& m, const Rep& n, const ModuleMap& f);

ModuleMap zero_map(const Rep& m, const Rep& n);
ModuleMap identity_map(const Rep& m);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f then g
ModuleMap map_sum(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scaled(const ModuleMap& f, u32 c);

// Right action of a normal-form path on a row vector sitting at `vertex`.
std::vector<u32> act_path(const Rep& m, int vertex, const std::vector<u32>& row,
                          const std::vector<int>& arrows);

// ---- direct sums ----

Rep direct_sum(const Rep& m, const Rep& n);
Rep direct_sum(const std::vector<Rep>& parts);

// ---- sub / quotient machinery ----

SubRep zero_subrep(const Rep& m);
bool subrep_closed(const Rep& m, const SubRep& s);
bool subrep_contains(const SubRep& outer, const SubRep& inner);
bool subrep_equal(const SubRep& a, const SubRep& b);

// Smallest subrepresentation containing the given per-vertex row spans.
SubRep subrep_closure(const Rep& m, const std::vector<Mat>& seeds);

// The subrepresentation as a representation in its own right, with the
// inclusion map into the parent.
struct SubRepAsRep {
    Rep rep;
    ModuleMap inclusion;
};
SubRepAsRep sub_to_rep(const Rep& m, const SubRep& s);

// Quotient by an arrow-closed subrepresentation. `section` picks the
// canonical coordinate preimage of each quotient basis vector.
struct QuotientResult {
    Rep rep;
    ModuleMap projection;
    ModuleMap section;  // quotient -> parent, projection * section = id
};
QuotientResult quotient(const Rep& m, const SubRep& s);

SubRep radical(const Rep& m);
QuotientResult top(const Rep& m);
int loewy_length_module(const Rep& m);

SubRep kernel_subrep(const Rep& m, const Rep& n, const ModuleMap& f);
SubRep image_subrep(const Rep& m, const Rep& n, const ModuleMap& f);

// ---- projectives ----

// P = P(gens[0]) + P(gens[1]) + ...; rows at each vertex are grouped by
// summand, each block listing the normal-form paths from that summand's
// vertex in algebra basis order.
struct ProjSum {
    Rep rep;
    std::vector<int> gens;                          // summand vertices
    std::vector<std::vector<int>> summand_paths;    // algebra basis indices per summand
    std::vector<std::vector<std::pair<int, int>>> rows_at;  // per vertex: (summand, basis idx)
    std::vector<int> gen_row;                       // row of e_{gens[k]} at vertex gens[k]
};

ProjSum proj_sum(AlgebraPtr alg, const std::vector<int>& gens);
Rep projective(AlgebraPtr alg, int vertex);
Rep regular_rep(AlgebraPtr alg);    // Lambda as a right module over itself
Rep top_of_algebra(AlgebraPtr alg); // Lambda / rad Lambda

// The module map P -> n sending the k-th generator to gen_images[k] (a row
// of n at vertex gens[k]) and extending along path actions.
ModuleMap proj_sum_map(const ProjSum& p, const Rep& n,
                       const std::vector<std::vector<u32>>& gen_images);

struct ProjectiveCover {
    ProjSum cover;
    ModuleMap epi;  // cover.rep -> m, surjective, kernel inside rad(cover)
};
ProjectiveCover projective_cover(const Rep& m);

Rep syzygy(const Rep& m);
bool is_projective_rep(const Rep& m);

// ---- hom spaces and isomorphism testing ----

std::vector<ModuleMap> hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

struct IsoResult {
    enum class Tag { Yes, No, Unknown } tag;
    std::string reason;               // for No / Unknown
    std::optional<ModuleMap> witness; // for Yes
    bool yes() const { return tag == Tag::Yes; }
    bool no() const { return tag == Tag::No; }
};

// Randomized: necessary obstructions give No, an invertible random element
// of Hom(m, n) gives Yes, `trials` failures give Unknown.
IsoResult is_isomorphic(const Rep& m, const Rep& n, std::mt19937_64& rng, int trials = 64);

// ---- projective / injective dimension ----

struct PdResult {
    enum class Tag { Finite, InfiniteCertified, AtLeast } tag = Tag::Finite;
    int value = -1;  // Finite: the dimension; AtLeast: the cutoff reached
    int wit_a = -1, wit_b = -1;  // InfiniteCertified: Omega^a = Omega^b != 0

    bool finite() const { return tag == Tag::Finite; }
    static PdResult fin(int d) { return {Tag::Finite, d, -1, -1}; }
    static PdResult infinite(int a, int b) { return {Tag::InfiniteCertified, -1, a, b}; }
    static PdResult at_least(int cutoff) { return {Tag::AtLeast, cutoff, -1, -1}; }
};

// Iterated syzygies; infinitude is only ever claimed with a periodicity
// certificate Omega^a = Omega^b != 0 found by the randomized iso test.
PdResult proj_dimension(const Rep& m, std::mt19937_64& rng, int cutoff = 64);
PdResult global_dimension(AlgebraPtr alg, std::mt19937_64& rng, int cutoff = 64);

// Dual of m as a module over the opposite algebra (transpose every arrow map).
Rep dual_rep(const Rep& m, AlgebraPtr op_alg);
PdResult injective_dimension(const Rep& m, AlgebraPtr op_alg, std::mt19937_64& rng, int cutoff = 64);

// Combine PdResults as a supremum (used for gldim and pd of a set).
PdResult pd_sup(const std::vector<PdResult>& parts);

}  // namespace derdim
