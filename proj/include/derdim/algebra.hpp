// Bound quiver algebras Lambda = kQ/I over GF(p).
//
// A presentation is a quiver plus relations (k-linear combinations of
// parallel paths of length >= 2). build_algebra closes the relation ideal
// degree by degree, certifies that every path of some length L lies in the
// ideal (so rad^L = 0), and extracts a normal-form path basis together with
// the full multiplication table. Paths compose left to right: in "a*b" the
// arrow a is traversed first, so representations act on row vectors and
// projectives are P(i) = e_i * Lambda.

#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "derdim/linalg.hpp"

namespace derdim {

struct Arrow {
    std::string name;
    int src = 0;  // 0-based internally; the text format is 1-based
    int tgt = 0;
};

struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;
};

struct RelTerm {
    u32 coeff = 1;
    std::vector<int> arrows;  // arrow indices, composable left to right
};

struct Relation {
    std::vector<RelTerm> terms;
};

struct admissibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A normal-form basis path. Length-0 paths are the vertex idempotents.
struct BasisPath {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;
    int length() const { return static_cast<int>(arrows.size()); }
};

// Sparse element of the algebra: (basis index, coefficient) pairs, indices
// ascending.
using AlgElem = std::vector<std::pair<int, u32>>;

class Algebra {
public:
    Quiver quiver;
    u32 mod = 101;
    int rad_degree = 1;                 // least L with rad^L = 0
    std::vector<BasisPath> basis;       // length-then-lex order; first n are e_i
    std::vector<Relation> relations;    // coefficients reduced mod p
    std::vector<std::vector<int>> basis_by_source;  // basis indices per vertex
    std::vector<std::vector<int>> basis_by_target;

    int dim() const { return static_cast<int>(basis.size()); }
    int vertex_count() const { return quiver.vertices; }
    int arrow_count() const { return static_cast<int>(quiver.arrows.size()); }
    int idempotent_index(int vertex) const { return vertex; }
    // basis index of the length-1 path for an arrow
    int arrow_basis_index(int arrow) const { return arrow_basis_[arrow]; }

    // Product of two basis elements, expanded in the basis.
    const AlgElem& mult(int i, int j) const { return mult_table_[size_t(i) * basis.size() + j]; }
    AlgElem multiply(const AlgElem& x, const AlgElem& y) const;

    int loewy_length() const { return rad_degree; }

private:
    friend Algebra build_algebra(const Quiver&, const std::vector<Relation>&, u32, int);
    std::vector<AlgElem> mult_table_;
    std::vector<int> arrow_basis_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Build kQ/I. Throws admissibility_error when no L <= max_degree certifies
// rad^L = 0 (the quotient may be infinite dimensional, or max_degree is too
// small), and resource_limit_error when path enumeration explodes.
Algebra build_algebra(const Quiver& quiver, const std::vector<Relation>& relations,
                      u32 p, int max_degree = 30);

inline int loewy_length_algebra(const Algebra& a) { return a.rad_degree; }

// Reverse all arrows and all relation paths. Dimension and rad_degree are
// preserved.
Algebra opposite_algebra(const Algebra& a);

}  // namespace derdim
