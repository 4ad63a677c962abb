#include "derdim/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace derdim {

namespace {

constexpr size_t kPathCap = 200000;  // cumulative enumerated paths before giving up

int path_src(const Quiver& q, const std::vector<int>& arrows) { return q.arrows[arrows.front()].src; }
int path_tgt(const Quiver& q, const std::vector<int>& arrows) { return q.arrows[arrows.back()].tgt; }

void validate_presentation(const Quiver& quiver, std::vector<Relation>& rels, u32 p) {
    if (quiver.vertices <= 0) throw std::invalid_argument("quiver needs at least one vertex");
    if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime");
    for (const Arrow& a : quiver.arrows)
        if (a.src < 0 || a.src >= quiver.vertices || a.tgt < 0 || a.tgt >= quiver.vertices)
            throw std::invalid_argument("arrow endpoint out of range");
    for (Relation& rel : rels) {
        if (rel.terms.empty()) throw std::invalid_argument("relation with no terms");
        int src = -1, tgt = -1;
        for (RelTerm& t : rel.terms) {
            t.coeff %= p;
            if (t.coeff == 0) throw std::invalid_argument("relation coefficient vanishes mod p");
            if (t.arrows.size() < 2) throw std::invalid_argument("relation path shorter than 2");
            for (size_t k = 0; k + 1 < t.arrows.size(); ++k)
                if (quiver.arrows[t.arrows[k]].tgt != quiver.arrows[t.arrows[k + 1]].src)
                    throw std::invalid_argument("relation path is not composable");
            int s = path_src(quiver, t.arrows), e = path_tgt(quiver, t.arrows);
            if (src < 0) { src = s; tgt = e; }
            else if (s != src || e != tgt)
                throw std::invalid_argument("relation terms are not parallel");
        }
    }
}

// All composable paths of one length, lexicographic by arrow sequence.
struct DegreeLayer {
    std::vector<std::vector<int>> paths;
    std::map<std::vector<int>, int> index;
};

}  // namespace

AlgElem Algebra::multiply(const AlgElem& x, const AlgElem& y) const {
    std::vector<u32> acc(basis.size(), 0);
    for (auto [i, ci] : x)
        for (auto [j, cj] : y) {
            u32 c = fp_mul(ci, cj, mod);
            for (auto [k, ck] : mult(i, j)) acc[k] = fp_add(acc[k], fp_mul(c, ck, mod), mod);
        }
    AlgElem out;
    for (size_t k = 0; k < acc.size(); ++k)
        if (acc[k]) out.emplace_back(static_cast<int>(k), acc[k]);
    return out;
}

Algebra build_algebra(const Quiver& quiver, const std::vector<Relation>& relations,
                      u32 p, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    Algebra alg;
    alg.quiver = quiver;
    alg.mod = p;
    alg.relations = relations;
    validate_presentation(quiver, alg.relations, p);

    bool graded = true;
    for (const Relation& rel : alg.relations) {
        size_t len = rel.terms.front().arrows.size();
        for (const RelTerm& t : rel.terms)
            if (t.arrows.size() != len) graded = false;
    }

    const int n = quiver.vertices;
    const int narrows = static_cast<int>(quiver.arrows.size());

    std::vector<DegreeLayer> layers(1);  // layers[d] = paths of length d; slot 0 unused
    size_t total_paths = n;
    int L = -1;

    auto enumerate_degree = [&](int d) {
        layers.emplace_back();
        DegreeLayer& layer = layers[d];
        if (d == 1) {
            for (int a = 0; a < narrows; ++a) layer.paths.push_back({a});
        } else {
            for (const std::vector<int>& parent : layers[d - 1].paths) {
                int v = path_tgt(quiver, parent);
                for (int a = 0; a < narrows; ++a) {
                    if (quiver.arrows[a].src != v) continue;
                    std::vector<int> child = parent;
                    child.push_back(a);
                    layer.paths.push_back(std::move(child));
                }
            }
        }
        for (size_t i = 0; i < layer.paths.size(); ++i) layer.index[layer.paths[i]] = static_cast<int>(i);
        total_paths += layer.paths.size();
        if (total_paths > kPathCap)
            throw resource_limit_error("path enumeration exceeded capacity; the quiver has too many long paths");
    };

    // Per enumerated path of length in [1, L): either its basis index, or its
    // expansion over basis paths when the path is an ideal pivot. Filled by
    // one of the two branches below.
    std::vector<std::vector<int>> basis_of(1);           // [d][local] -> basis index or -1
    std::vector<std::map<int, AlgElem>> pivot_expansion; // [d][local] -> normal form

    // Stage one of basis numbering: idempotents, then (during the scans
    // below) non-pivot paths in length-then-lex order.
    alg.basis.clear();
    for (int v = 0; v < n; ++v) alg.basis.push_back(BasisPath{v, v, {}});

    if (graded) {
        // The ideal is graded by path length, so each component closes
        // independently: I_d = rel_d + (arrows * I_{d-1}) + (I_{d-1} * arrows).
        std::vector<RrefResult> ideal(1);
        for (int d = 1; d <= max_degree; ++d) {
            enumerate_degree(d);
            DegreeLayer& layer = layers[d];
            const int cols = static_cast<int>(layer.paths.size());
            Mat rows(0, cols, p);
            for (const Relation& rel : alg.relations) {
                if (static_cast<int>(rel.terms.front().arrows.size()) != d) continue;
                Mat row(1, cols, p);
                for (const RelTerm& t : rel.terms) {
                    int idx = layer.index.at(t.arrows);
                    row.at(0, idx) = fp_add(row.at(0, idx), t.coeff, p);
                }
                rows = vstack(rows, row);
            }
            if (d >= 2) {
                const DegreeLayer& prev = layers[d - 1];
                const Mat& gen = ideal[d - 1].reduced;
                for (int r = 0; r < gen.rows; ++r) {
                    for (int a = 0; a < narrows; ++a) {
                        Mat left(1, cols, p), right(1, cols, p);
                        bool has_left = false, has_right = false;
                        for (int c = 0; c < gen.cols; ++c) {
                            u32 coeff = gen.at(r, c);
                            if (coeff == 0) continue;
                            const std::vector<int>& q = prev.paths[c];
                            if (quiver.arrows[a].tgt == path_src(quiver, q)) {
                                std::vector<int> w;
                                w.reserve(q.size() + 1);
                                w.push_back(a);
                                w.insert(w.end(), q.begin(), q.end());
                                int idx = layer.index.at(w);
                                left.at(0, idx) = fp_add(left.at(0, idx), coeff, p);
                                has_left = true;
                            }
                            if (path_tgt(quiver, q) == quiver.arrows[a].src) {
                                std::vector<int> w = q;
                                w.push_back(a);
                                int idx = layer.index.at(w);
                                right.at(0, idx) = fp_add(right.at(0, idx), coeff, p);
                                has_right = true;
                            }
                        }
                        if (has_left) rows = vstack(rows, left);
                        if (has_right) rows = vstack(rows, right);
                    }
                }
            }
            ideal.push_back(rref(rows));
            if (ideal[d].rank == cols) { L = d; break; }
        }
        if (L < 0)
            throw admissibility_error("no L <= max_degree with rad^L = 0 certified; "
                                      "raise max_degree or check that the quotient is finite dimensional");

        basis_of.resize(L);
        pivot_expansion.resize(L);
        for (int d = 1; d < L; ++d) {
            const DegreeLayer& layer = layers[d];
            std::vector<int> pivot_row(layer.paths.size(), -1);
            for (int r = 0; r < ideal[d].rank; ++r) pivot_row[ideal[d].pivots[r]] = r;
            basis_of[d].assign(layer.paths.size(), -1);
            for (size_t c = 0; c < layer.paths.size(); ++c) {
                if (pivot_row[c] >= 0) continue;
                const std::vector<int>& q = layer.paths[c];
                basis_of[d][c] = static_cast<int>(alg.basis.size());
                alg.basis.push_back(BasisPath{path_src(quiver, q), path_tgt(quiver, q), q});
            }
            for (size_t c = 0; c < layer.paths.size(); ++c) {
                int r = pivot_row[c];
                if (r < 0) continue;
                AlgElem nf;
                for (size_t c2 = 0; c2 < layer.paths.size(); ++c2) {
                    if (pivot_row[c2] >= 0) continue;
                    u32 coeff = ideal[d].reduced.at(r, static_cast<int>(c2));
                    if (coeff) nf.emplace_back(basis_of[d][c2], fp_neg(coeff, p));
                }
                std::sort(nf.begin(), nf.end());
                pivot_expansion[d][static_cast<int>(c)] = std::move(nf);
            }
        }
    } else {
        // Mixed path lengths within a relation: the ideal is not graded, so
        // close it inside the length-truncated path algebra kQ / R^{max_degree+1}
        // and row-reduce over all path coordinates at once.
        for (int d = 1; d <= max_degree; ++d) enumerate_degree(d);
        std::vector<int> offset(max_degree + 2, 0);
        for (int d = 1; d <= max_degree; ++d)
            offset[d + 1] = offset[d] + static_cast<int>(layers[d].paths.size());
        const int cols = offset[max_degree + 1];
        auto col_of = [&](int d, int local) { return offset[d] + local; };
        std::vector<int> col_degree(cols);
        for (int d = 1; d <= max_degree; ++d)
            for (int c = offset[d]; c < offset[d + 1]; ++c) col_degree[c] = d;

        std::vector<std::vector<u32>> red_rows;
        std::vector<int> red_pivot;
        auto reduce_vec = [&](std::vector<u32>& v) {
            for (size_t r = 0; r < red_rows.size(); ++r) {
                u32 f = v[red_pivot[r]];
                if (f == 0) continue;
                const std::vector<u32>& row = red_rows[r];
                for (int c = red_pivot[r]; c < cols; ++c)
                    if (row[c]) v[c] = fp_sub(v[c], fp_mul(f, row[c], p), p);
            }
        };
        auto add_vec = [&](std::vector<u32> v) -> bool {
            reduce_vec(v);
            int piv = -1;
            for (int c = 0; c < cols; ++c)
                if (v[c]) { piv = c; break; }
            if (piv < 0) return false;
            u32 inv = fp_inv(v[piv], p);
            for (int c = piv; c < cols; ++c) v[c] = fp_mul(v[c], inv, p);
            for (size_t r = 0; r < red_rows.size(); ++r) {
                u32 f = red_rows[r][piv];
                if (f == 0) continue;
                for (int c = piv; c < cols; ++c)
                    red_rows[r][c] = fp_sub(red_rows[r][c], fp_mul(f, v[c], p), p);
            }
            red_rows.push_back(std::move(v));
            red_pivot.push_back(piv);
            return true;
        };

        std::vector<std::vector<u32>> worklist;
        for (const Relation& rel : alg.relations) {
            std::vector<u32> v(cols, 0);
            for (const RelTerm& t : rel.terms) {
                int d = static_cast<int>(t.arrows.size());
                if (d > max_degree) continue;  // truncated away
                int c = col_of(d, layers[d].index.at(t.arrows));
                v[c] = fp_add(v[c], t.coeff, p);
            }
            if (add_vec(v)) worklist.push_back(red_rows.back());
        }
        while (!worklist.empty()) {
            std::vector<u32> v = std::move(worklist.back());
            worklist.pop_back();
            for (int a = 0; a < narrows; ++a) {
                std::vector<u32> left(cols, 0), right(cols, 0);
                bool has_left = false, has_right = false;
                for (int c = 0; c < cols; ++c) {
                    if (v[c] == 0) continue;
                    int d = col_degree[c];
                    if (d + 1 > max_degree) continue;
                    const std::vector<int>& q = layers[d].paths[c - offset[d]];
                    if (quiver.arrows[a].tgt == path_src(quiver, q)) {
                        std::vector<int> w;
                        w.push_back(a);
                        w.insert(w.end(), q.begin(), q.end());
                        int idx = col_of(d + 1, layers[d + 1].index.at(w));
                        left[idx] = fp_add(left[idx], v[c], p);
                        has_left = true;
                    }
                    if (path_tgt(quiver, q) == quiver.arrows[a].src) {
                        std::vector<int> w = q;
                        w.push_back(a);
                        int idx = col_of(d + 1, layers[d + 1].index.at(w));
                        right[idx] = fp_add(right[idx], v[c], p);
                        has_right = true;
                    }
                }
                if (has_left && add_vec(left)) worklist.push_back(red_rows.back());
                if (has_right && add_vec(right)) worklist.push_back(red_rows.back());
            }
        }

        auto unit_in_span = [&](int c) {
            std::vector<u32> v(cols, 0);
            v[c] = 1;
            reduce_vec(v);
            return std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
        };
        for (int d = 1; d <= max_degree && L < 0; ++d) {
            bool all_in = true;
            for (int c = offset[d]; c < offset[d + 1] && all_in; ++c) all_in = unit_in_span(c);
            if (all_in) L = d;
        }
        if (L < 0)
            throw admissibility_error("no L <= max_degree with rad^L = 0 certified; "
                                      "raise max_degree or check that the quotient is finite dimensional");

        // Final ideal = closure + every path of length >= L.
        Mat final_rows(static_cast<int>(red_rows.size()), cols, p);
        for (size_t r = 0; r < red_rows.size(); ++r) final_rows.set_row(static_cast<int>(r), red_rows[r]);
        for (int c = offset[L]; c < cols; ++c) {
            Mat row(1, cols, p);
            row.at(0, c) = 1;
            final_rows = vstack(final_rows, row);
        }
        RrefResult full = rref(final_rows);
        std::vector<int> pivot_row(cols, -1);
        for (int r = 0; r < full.rank; ++r) pivot_row[full.pivots[r]] = r;

        basis_of.resize(L);
        pivot_expansion.resize(L);
        std::vector<int> basis_of_global(cols, -1);
        for (int d = 1; d < L; ++d) {
            basis_of[d].assign(layers[d].paths.size(), -1);
            for (int c = offset[d]; c < offset[d + 1]; ++c) {
                if (pivot_row[c] >= 0) continue;
                const std::vector<int>& q = layers[d].paths[c - offset[d]];
                int b = static_cast<int>(alg.basis.size());
                basis_of[d][c - offset[d]] = b;
                basis_of_global[c] = b;
                alg.basis.push_back(BasisPath{path_src(quiver, q), path_tgt(quiver, q), q});
            }
        }
        for (int d = 1; d < L; ++d) {
            for (int c = offset[d]; c < offset[d + 1]; ++c) {
                int r = pivot_row[c];
                if (r < 0) continue;
                AlgElem nf;
                for (int c2 = c + 1; c2 < cols; ++c2) {
                    u32 coeff = full.reduced.at(r, c2);
                    if (coeff == 0) continue;
                    // columns of length >= L are pivots, so their RREF
                    // entries vanish; anything left is a basis path
                    if (basis_of_global[c2] < 0)
                        throw std::logic_error("normal form references a non-basis path");
                    nf.emplace_back(basis_of_global[c2], fp_neg(coeff, p));
                }
                std::sort(nf.begin(), nf.end());
                pivot_expansion[d][c - offset[d]] = std::move(nf);
            }
        }
    }

    alg.rad_degree = L;

    alg.arrow_basis_.assign(narrows, -1);
    if (L > 1)
        for (int a = 0; a < narrows; ++a) alg.arrow_basis_[a] = basis_of[1][a];

    alg.basis_by_source.assign(n, {});
    alg.basis_by_target.assign(n, {});
    for (size_t i = 0; i < alg.basis.size(); ++i) {
        alg.basis_by_source[alg.basis[i].src].push_back(static_cast<int>(i));
        alg.basis_by_target[alg.basis[i].tgt].push_back(static_cast<int>(i));
    }

    auto normal_form = [&](const std::vector<int>& arrows) -> AlgElem {
        int d = static_cast<int>(arrows.size());
        if (d >= L) return {};
        int c = layers[d].index.at(arrows);
        if (basis_of[d][c] >= 0) return {{basis_of[d][c], 1}};
        return pivot_expansion[d].at(c);
    };

    const int dim = alg.dim();
    alg.mult_table_.assign(size_t(dim) * dim, {});
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const BasisPath& u = alg.basis[i];
            const BasisPath& v = alg.basis[j];
            if (u.tgt != v.src) continue;
            AlgElem& cell = alg.mult_table_[size_t(i) * dim + j];
            if (u.length() == 0) { cell = {{j, 1}}; continue; }
            if (v.length() == 0) { cell = {{i, 1}}; continue; }
            std::vector<int> w = u.arrows;
            w.insert(w.end(), v.arrows.begin(), v.arrows.end());
            cell = normal_form(w);
        }
    }
    return alg;
}

Algebra opposite_algebra(const Algebra& a) {
    Quiver q;
    q.vertices = a.quiver.vertices;
    for (const Arrow& ar : a.quiver.arrows) q.arrows.push_back(Arrow{ar.name, ar.tgt, ar.src});
    std::vector<Relation> rels = a.relations;
    for (Relation& rel : rels)
        for (RelTerm& t : rel.terms) std::reverse(t.arrows.begin(), t.arrows.end());
    return build_algebra(q, rels, a.mod, std::max(a.rad_degree, 1));
}

}  // namespace derdim
