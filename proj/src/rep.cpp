#include "derdim/rep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace derdim {

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int SubRep::total_dim() const {
    int t = 0;
    for (const Subspace& s : at) t += s.dim();
    return t;
}

namespace {

Mat path_product(const Rep& m, const std::vector<int>& arrows) {
    const Quiver& q = m.alg->quiver;
    Mat prod = m.arrow_maps[arrows.front()];
    for (size_t k = 1; k < arrows.size(); ++k) prod = prod * m.arrow_maps[arrows[k]];
    (void)q;
    return prod;
}

}  // namespace

void check_rep(const Rep& m) {
    const Quiver& q = m.alg->quiver;
    if (static_cast<int>(m.dims.size()) != q.vertices)
        throw std::invalid_argument("rep: dims size != vertex count");
    if (m.arrow_maps.size() != q.arrows.size())
        throw std::invalid_argument("rep: arrow map count != arrow count");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Mat& f = m.arrow_maps[a];
        if (f.rows != m.dims[q.arrows[a].src] || f.cols != m.dims[q.arrows[a].tgt])
            throw std::invalid_argument("rep: arrow map shape mismatch");
    }
    for (const Relation& rel : m.alg->relations) {
        int src = q.arrows[rel.terms.front().arrows.front()].src;
        int tgt = q.arrows[rel.terms.front().arrows.back()].tgt;
        Mat acc(m.dims[src], m.dims[tgt], m.alg->mod);
        for (const RelTerm& t : rel.terms)
            acc = acc + path_product(m, t.arrows).scaled(t.coeff);
        if (!acc.is_zero()) throw std::invalid_argument("rep: relation not satisfied");
    }
}

Rep make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> arrow_maps) {
    Rep m{std::move(alg), std::move(dims), std::move(arrow_maps)};
    check_rep(m);
    return m;
}

Rep zero_rep(AlgebraPtr alg) {
    std::vector<int> dims(alg->vertex_count(), 0);
    std::vector<Mat> maps;
    for (const Arrow& a : alg->quiver.arrows) {
        (void)a;
        maps.emplace_back(0, 0, alg->mod);
    }
    return Rep{std::move(alg), std::move(dims), std::move(maps)};
}

Rep simple(AlgebraPtr alg, int vertex) {
    if (vertex < 0 || vertex >= alg->vertex_count()) throw std::invalid_argument("simple: vertex out of range");
    std::vector<int> dims(alg->vertex_count(), 0);
    dims[vertex] = 1;
    std::vector<Mat> maps;
    for (const Arrow& a : alg->quiver.arrows) maps.emplace_back(dims[a.src], dims[a.tgt], alg->mod);
    return Rep{std::move(alg), std::move(dims), std::move(maps)};
}

bool is_module_map(const Rep& m, const Rep& n, const ModuleMap& f) {
    const Quiver& q = m.alg->quiver;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int u = q.arrows[a].src, v = q.arrows[a].tgt;
        // x (A^m f_v) must equal x (f_u A^n) for rows x at u
        Mat lhs = m.arrow_maps[a] * f.f[v];
        Mat rhs = f.f[u] * n.arrow_maps[a];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

void check_module_map(const Rep& m, const Rep& n, const ModuleMap& f) {
    if (f.f.size() != m.dims.size()) throw std::invalid_argument("module map: wrong vertex count");
    for (size_t v = 0; v < m.dims.size(); ++v)
        if (f.f[v].rows != m.dims[v] || f.f[v].cols != n.dims[v])
            throw std::invalid_argument("module map: shape mismatch");
    if (!is_module_map(m, n, f)) throw std::invalid_argument("module map: does not intertwine arrows");
}

ModuleMap zero_map(const Rep& m, const Rep& n) {
    ModuleMap f;
    for (size_t v = 0; v < m.dims.size(); ++v) f.f.emplace_back(m.dims[v], n.dims[v], m.alg->mod);
    return f;
}

ModuleMap identity_map(const Rep& m) {
    ModuleMap f;
    for (size_t v = 0; v < m.dims.size(); ++v) f.f.push_back(Mat::identity(m.dims[v], m.alg->mod));
    return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(f.f[v] * g.f[v]);
    return h;
}

ModuleMap map_sum(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(f.f[v] + g.f[v]);
    return h;
}

ModuleMap map_scaled(const ModuleMap& f, u32 c) {
    ModuleMap h;
    for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(f.f[v].scaled(c));
    return h;
}

std::vector<u32> act_path(const Rep& m, int vertex, const std::vector<u32>& row,
                          const std::vector<int>& arrows) {
    std::vector<u32> cur = row;
    int v = vertex;
    for (int a : arrows) {
        Mat r(1, m.dims[v], m.alg->mod);
        r.set_row(0, cur);
        Mat next = r * m.arrow_maps[a];
        cur = next.row(0);
        v = m.alg->quiver.arrows[a].tgt;
    }
    return cur;
}

Rep direct_sum(const Rep& m, const Rep& n) {
    std::vector<int> dims(m.dims.size());
    for (size_t v = 0; v < dims.size(); ++v) dims[v] = m.dims[v] + n.dims[v];
    std::vector<Mat> maps;
    for (size_t a = 0; a < m.arrow_maps.size(); ++a)
        maps.push_back(block_diag(m.arrow_maps[a], n.arrow_maps[a]));
    return Rep{m.alg, std::move(dims), std::move(maps)};
}

Rep direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
    Rep acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
    return acc;
}

SubRep zero_subrep(const Rep& m) {
    SubRep s;
    for (size_t v = 0; v < m.dims.size(); ++v) s.at.emplace_back(m.dims[v], m.alg->mod);
    return s;
}

bool subrep_closed(const Rep& m, const SubRep& s) {
    const Quiver& q = m.alg->quiver;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        Mat img = s.at[q.arrows[a].src].basis * m.arrow_maps[a];
        if (!subspace_contains_all(s.at[q.arrows[a].tgt], img)) return false;
    }
    return true;
}

bool subrep_contains(const SubRep& outer, const SubRep& inner) {
    for (size_t v = 0; v < outer.at.size(); ++v)
        if (!subspace_contains_all(outer.at[v], inner.at[v].basis)) return false;
    return true;
}

bool subrep_equal(const SubRep& a, const SubRep& b) {
    for (size_t v = 0; v < a.at.size(); ++v)
        if (!(a.at[v] == b.at[v])) return false;
    return true;
}

SubRep subrep_closure(const Rep& m, const std::vector<Mat>& seeds) {
    SubRep s;
    for (size_t v = 0; v < m.dims.size(); ++v) s.at.push_back(row_space(seeds[v]));
    const Quiver& q = m.alg->quiver;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            int u = q.arrows[a].src, v = q.arrows[a].tgt;
            if (s.at[u].dim() == 0) continue;
            Mat img = s.at[u].basis * m.arrow_maps[a];
            if (!subspace_contains_all(s.at[v], img)) {
                s.at[v] = subspace_sum(s.at[v], row_space(img));
                changed = true;
            }
        }
    }
    return s;
}

SubRepAsRep sub_to_rep(const Rep& m, const SubRep& s) {
    if (!subrep_closed(m, s)) throw std::invalid_argument("sub_to_rep: subspace not arrow-closed");
    const Quiver& q = m.alg->quiver;
    std::vector<int> dims(m.dims.size());
    for (size_t v = 0; v < m.dims.size(); ++v) dims[v] = s.at[v].dim();
    std::vector<Mat> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int u = q.arrows[a].src, v = q.arrows[a].tgt;
        Mat img = s.at[u].basis * m.arrow_maps[a];
        auto coords = solve_left(s.at[v].basis, img);
        if (!coords) throw std::logic_error("sub_to_rep: image escaped the subspace");
        maps.push_back(*coords);
    }
    Rep rep{m.alg, std::move(dims), std::move(maps)};
    check_rep(rep);
    ModuleMap incl;
    for (size_t v = 0; v < m.dims.size(); ++v) incl.f.push_back(s.at[v].basis);
    return {std::move(rep), std::move(incl)};
}

QuotientResult quotient(const Rep& m, const SubRep& s) {
    if (!subrep_closed(m, s)) throw std::invalid_argument("quotient: subspace not arrow-closed");
    const u32 p = m.alg->mod;
    const size_t nv = m.dims.size();
    std::vector<Mat> proj(nv), sect(nv);
    std::vector<int> qdims(nv);
    for (size_t v = 0; v < nv; ++v) {
        const Mat& basis = s.at[v].basis;  // RREF rows
        RrefResult rr = rref(basis);
        std::vector<char> is_pivot(m.dims[v], 0);
        for (int c : rr.pivots) is_pivot[c] = 1;
        std::vector<int> free_cols;
        for (int c = 0; c < m.dims[v]; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        qdims[v] = static_cast<int>(free_cols.size());
        // projection: reduce each unit vector mod the subspace, read off the
        // free coordinates
        Mat pr(m.dims[v], qdims[v], p);
        for (int r = 0; r < m.dims[v]; ++r) {
            std::vector<u32> vec(m.dims[v], 0);
            vec[r] = 1;
            for (int i = 0; i < rr.rank; ++i) {
                u32 f = vec[rr.pivots[i]];
                if (f == 0) continue;
                for (int c = 0; c < m.dims[v]; ++c)
                    vec[c] = fp_sub(vec[c], fp_mul(f, rr.reduced.at(i, c), p), p);
            }
            for (size_t j = 0; j < free_cols.size(); ++j) pr.at(r, static_cast<int>(j)) = vec[free_cols[j]];
        }
        proj[v] = pr;
        Mat sc(qdims[v], m.dims[v], p);
        for (size_t j = 0; j < free_cols.size(); ++j) sc.at(static_cast<int>(j), free_cols[j]) = 1;
        sect[v] = sc;
    }
    const Quiver& q = m.alg->quiver;
    std::vector<Mat> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int u = q.arrows[a].src, v = q.arrows[a].tgt;
        maps.push_back(sect[u] * m.arrow_maps[a] * proj[v]);
    }
    Rep rep{m.alg, std::move(qdims), std::move(maps)};
    check_rep(rep);
    QuotientResult out;
    out.rep = std::move(rep);
    out.projection = ModuleMap{std::move(proj)};
    out.section = ModuleMap{std::move(sect)};
    return out;
}

SubRep radical(const Rep& m) {
    const Quiver& q = m.alg->quiver;
    SubRep s = zero_subrep(m);
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int v = q.arrows[a].tgt;
        s.at[v] = subspace_sum(s.at[v], row_space(m.arrow_maps[a]));
    }
    return s;  // sum of arrow images is already arrow-closed
}

QuotientResult top(const Rep& m) { return quotient(m, radical(m)); }

int loewy_length_module(const Rep& m) {
    Rep cur = m;
    int count = 0;
    while (!cur.is_zero()) {
        cur = sub_to_rep(cur, radical(cur)).rep;
        ++count;
    }
    return count;
}

SubRep kernel_subrep(const Rep& m, const Rep& n, const ModuleMap& f) {
    (void)n;
    SubRep s;
    for (size_t v = 0; v < m.dims.size(); ++v) s.at.push_back(row_space(left_kernel(f.f[v])));
    if (!subrep_closed(m, s)) throw std::logic_error("kernel of a module map must be arrow-closed");
    return s;
}

SubRep image_subrep(const Rep& m, const Rep& n, const ModuleMap& f) {
    (void)m;
    SubRep s;
    for (size_t v = 0; v < n.dims.size(); ++v) s.at.push_back(row_space(f.f[v]));
    if (!subrep_closed(n, s)) throw std::logic_error("image of a module map must be arrow-closed");
    return s;
}

ProjSum proj_sum(AlgebraPtr alg, const std::vector<int>& gens) {
    const Algebra& A = *alg;
    const int nv = A.vertex_count();
    ProjSum P;
    P.gens = gens;
    P.rows_at.assign(nv, {});
    P.summand_paths.resize(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        P.summand_paths[k] = A.basis_by_source[gens[k]];
        for (int b : P.summand_paths[k])
            P.rows_at[A.basis[b].tgt].emplace_back(static_cast<int>(k), b);
    }
    std::vector<std::map<std::pair<int, int>, int>> pos(nv);
    std::vector<int> dims(nv);
    for (int v = 0; v < nv; ++v) {
        dims[v] = static_cast<int>(P.rows_at[v].size());
        for (int r = 0; r < dims[v]; ++r) pos[v][P.rows_at[v][r]] = r;
    }
    std::vector<Mat> maps;
    for (int a = 0; a < A.arrow_count(); ++a) {
        int u = A.quiver.arrows[a].src, v = A.quiver.arrows[a].tgt;
        Mat f(dims[u], dims[v], A.mod);
        int ab = A.arrow_basis_index(a);
        for (int r = 0; r < dims[u]; ++r) {
            auto [k, b] = P.rows_at[u][r];
            if (ab < 0) continue;  // the arrow already acts as zero
            for (auto [b2, coeff] : A.mult(b, ab)) f.at(r, pos[v].at({k, b2})) = coeff;
        }
        maps.push_back(std::move(f));
    }
    P.rep = Rep{alg, std::move(dims), std::move(maps)};
    check_rep(P.rep);
    P.gen_row.resize(gens.size());
    for (size_t k = 0; k < gens.size(); ++k)
        P.gen_row[k] = pos[gens[k]].at({static_cast<int>(k), A.idempotent_index(gens[k])});
    return P;
}

Rep projective(AlgebraPtr alg, int vertex) {
    if (vertex < 0 || vertex >= alg->vertex_count()) throw std::invalid_argument("projective: vertex out of range");
    return proj_sum(alg, {vertex}).rep;
}

Rep regular_rep(AlgebraPtr alg) {
    std::vector<int> gens(alg->vertex_count());
    std::iota(gens.begin(), gens.end(), 0);
    return proj_sum(alg, gens).rep;
}

Rep top_of_algebra(AlgebraPtr alg) {
    std::vector<Rep> simples;
    for (int i = 0; i < alg->vertex_count(); ++i) simples.push_back(simple(alg, i));
    return direct_sum(simples);
}

ModuleMap proj_sum_map(const ProjSum& p, const Rep& n,
                       const std::vector<std::vector<u32>>& gen_images) {
    const Algebra& A = *p.rep.alg;
    ModuleMap f = zero_map(p.rep, n);
    for (size_t v = 0; v < p.rows_at.size(); ++v) {
        for (size_t r = 0; r < p.rows_at[v].size(); ++r) {
            auto [k, b] = p.rows_at[v][r];
            std::vector<u32> img = act_path(n, p.gens[k], gen_images[k], A.basis[b].arrows);
            for (size_t c = 0; c < img.size(); ++c) f.f[v].at(static_cast<int>(r), static_cast<int>(c)) = img[c];
        }
    }
    check_module_map(p.rep, n, f);
    return f;
}

ProjectiveCover projective_cover(const Rep& m) {
    QuotientResult t = top(m);
    const int nv = static_cast<int>(m.dims.size());
    std::vector<int> gens;
    std::vector<std::vector<u32>> gen_images;
    for (int v = 0; v < nv; ++v) {
        for (int j = 0; j < t.rep.dims[v]; ++j) {
            gens.push_back(v);
            gen_images.push_back(t.section.f[v].row(j));
        }
    }
    ProjSum P = proj_sum(m.alg, gens);
    ModuleMap epi = proj_sum_map(P, m, gen_images);
    for (int v = 0; v < nv; ++v)
        if (rank(epi.f[v]) != m.dims[v])
            throw std::logic_error("projective cover is not surjective");
    return {std::move(P), std::move(epi)};
}

Rep syzygy(const Rep& m) {
    ProjectiveCover pc = projective_cover(m);
    SubRep k = kernel_subrep(pc.cover.rep, m, pc.epi);
    return sub_to_rep(pc.cover.rep, k).rep;
}

bool is_projective_rep(const Rep& m) { return syzygy(m).is_zero(); }

std::vector<ModuleMap> hom_basis(const Rep& m, const Rep& n) {
    const Quiver& q = m.alg->quiver;
    const u32 p = m.alg->mod;
    const int nv = static_cast<int>(m.dims.size());
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dims[v] * n.dims[v];
    const int unknowns = off[nv];
    int equations = 0;
    for (const Arrow& a : q.arrows) equations += m.dims[a.src] * n.dims[a.tgt];
    Mat C(equations, unknowns, p);
    int eq = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int u = q.arrows[a].src, v = q.arrows[a].tgt;
        const Mat& Am = m.arrow_maps[a];
        const Mat& An = n.arrow_maps[a];
        for (int i = 0; i < m.dims[u]; ++i) {
            for (int l = 0; l < n.dims[v]; ++l) {
                // sum_k Am[i,k] F_v[k,l] - sum_j F_u[i,j] An[j,l] = 0
                for (int k = 0; k < m.dims[v]; ++k)
                    C.at(eq, off[v] + k * n.dims[v] + l) =
                        fp_add(C.at(eq, off[v] + k * n.dims[v] + l), Am.at(i, k), p);
                for (int j = 0; j < n.dims[u]; ++j)
                    C.at(eq, off[u] + i * n.dims[u] + j) =
                        fp_sub(C.at(eq, off[u] + i * n.dims[u] + j), An.at(j, l), p);
                ++eq;
            }
        }
    }
    Mat K = kernel_basis(C);
    std::vector<ModuleMap> basis;
    for (int r = 0; r < K.rows; ++r) {
        ModuleMap f = zero_map(m, n);
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < m.dims[v]; ++i)
                for (int j = 0; j < n.dims[v]; ++j)
                    f.f[v].at(i, j) = K.at(r, off[v] + i * n.dims[v] + j);
        basis.push_back(std::move(f));
    }
    return basis;
}

int hom_dim(const Rep& m, const Rep& n) { return static_cast<int>(hom_basis(m, n).size()); }

IsoResult is_isomorphic(const Rep& m, const Rep& n, std::mt19937_64& rng, int trials) {
    if (m.alg->mod != n.alg->mod || m.dims.size() != n.dims.size())
        throw std::invalid_argument("is_isomorphic: representations over different algebras");
    if (m.dims != n.dims) return {IsoResult::Tag::No, "dimension vectors differ", std::nullopt};
    if (m.total_dim() == 0) return {IsoResult::Tag::Yes, "", identity_map(m)};
    std::vector<ModuleMap> h_mn = hom_basis(m, n);
    std::vector<ModuleMap> h_nm = hom_basis(n, m);
    if (h_mn.size() != h_nm.size())
        return {IsoResult::Tag::No, "hom dimensions are asymmetric", std::nullopt};
    if (h_mn.empty()) return {IsoResult::Tag::No, "no nonzero homomorphisms", std::nullopt};
    if (hom_dim(m, m) != hom_dim(n, n))
        return {IsoResult::Tag::No, "endomorphism dimensions differ", std::nullopt};
    const u32 p = m.alg->mod;
    std::uniform_int_distribution<u32> dist(0, p - 1);
    for (int t = 0; t < trials; ++t) {
        ModuleMap f = zero_map(m, n);
        for (const ModuleMap& b : h_mn) f = map_sum(f, map_scaled(b, dist(rng)));
        bool invertible = true;
        for (const Mat& fv : f.f)
            if (!is_invertible(fv)) { invertible = false; break; }
        if (invertible) return {IsoResult::Tag::Yes, "", std::move(f)};
    }
    return {IsoResult::Tag::Unknown, "no invertible hom element found", std::nullopt};
}

PdResult proj_dimension(const Rep& m, std::mt19937_64& rng, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("proj_dimension: cutoff must be >= 1");
    std::vector<Rep> chain;
    chain.push_back(m);
    for (int k = 0;; ++k) {
        const Rep& cur = chain.back();
        if (cur.is_zero()) return PdResult::fin(k - 1);
        for (int a = 0; a + 1 < static_cast<int>(chain.size()); ++a) {
            if (!chain[a].same_dims(cur)) continue;
            IsoResult iso = is_isomorphic(chain[a], cur, rng);
            if (iso.yes()) return PdResult::infinite(a, k);
        }
        if (k == cutoff) return PdResult::at_least(cutoff);
        chain.push_back(syzygy(cur));
    }
}

PdResult pd_sup(const std::vector<PdResult>& parts) {
    int best = -1;
    bool unknown = false;
    int cutoff = 0;
    for (const PdResult& r : parts) {
        switch (r.tag) {
            case PdResult::Tag::InfiniteCertified: return r;
            case PdResult::Tag::AtLeast:
                unknown = true;
                cutoff = std::max(cutoff, r.value);
                break;
            case PdResult::Tag::Finite: best = std::max(best, r.value); break;
        }
    }
    if (unknown) return PdResult::at_least(cutoff);
    return PdResult::fin(best);
}

PdResult global_dimension(AlgebraPtr alg, std::mt19937_64& rng, int cutoff) {
    std::vector<PdResult> parts;
    for (int i = 0; i < alg->vertex_count(); ++i)
        parts.push_back(proj_dimension(simple(alg, i), rng, cutoff));
    return pd_sup(parts);
}

Rep dual_rep(const Rep& m, AlgebraPtr op_alg) {
    std::vector<Mat> maps;
    for (const Mat& f : m.arrow_maps) maps.push_back(f.transpose());
    Rep d{op_alg, m.dims, std::move(maps)};
    check_rep(d);
    return d;
}

PdResult injective_dimension(const Rep& m, AlgebraPtr op_alg, std::mt19937_64& rng, int cutoff) {
    return proj_dimension(dual_rep(m, op_alg), rng, cutoff);
}

}  // namespace derdim
