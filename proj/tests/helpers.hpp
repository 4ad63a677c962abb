// Shared test utilities: fixture loading, random representations built as
// quotients of projectives (so arbitrary relation sets stay satisfied), and
// random bounded complexes with differentials sampled from hom spaces.

#pragma once

#include <functional>
#include <random>
#include <string>

#include "derdim/cli.hpp"
#include "derdim/complex.hpp"
#include "derdim/parse.hpp"

namespace derdim::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name + ".alg";
}

inline AlgebraPtr load_fixture(const std::string& name, int max_degree = 30) {
    AlgebraFile f = parse_algebra_path(fixture_path(name));
    return std::make_shared<const Algebra>(build_algebra(f.quiver, f.relations, f.mod, max_degree));
}

inline Mat random_mat(int rows, int cols, u32 p, std::mt19937_64& rng) {
    Mat m(rows, cols, p);
    std::uniform_int_distribution<u32> dist(0, p - 1);
    for (auto& x : m.a) x = dist(rng);
    return m;
}

// Random module of total dimension <= max_dim: a quotient of a random sum of
// projectives by a submodule generated by random radical elements, adding
// generators only until the quotient fits under the cap.
inline Rep random_module(AlgebraPtr alg, int max_dim, std::mt19937_64& rng) {
    const int n = alg->vertex_count();
    const u32 p_mod = alg->mod;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<u32> coeff(0, p_mod - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> gens;
        int c = count(rng);
        for (int k = 0; k < c; ++k) gens.push_back(pick(rng));
        Rep p = proj_sum(alg, gens).rep;
        SubRep rad = radical(p);
        std::vector<Mat> seeds;
        for (int v = 0; v < n; ++v) seeds.emplace_back(0, p.dims[v], p_mod);
        auto add_random_radical_element = [&] {
            std::vector<int> carriers;
            for (int v = 0; v < n; ++v)
                if (rad.at[v].dim() > 0) carriers.push_back(v);
            if (carriers.empty()) return;
            int v = carriers[rng() % carriers.size()];
            Mat row(1, p.dims[v], p_mod);
            for (int j = 0; j < rad.at[v].dim(); ++j) {
                u32 cf = coeff(rng);
                for (int cc = 0; cc < p.dims[v]; ++cc)
                    row.at(0, cc) = fp_add(row.at(0, cc),
                                           fp_mul(cf, rad.at[v].basis.at(j, cc), p_mod), p_mod);
            }
            seeds[v] = vstack(seeds[v], row);
        };
        int extra = static_cast<int>(rng() % 2);
        Rep q = quotient(p, subrep_closure(p, seeds)).rep;
        int steps = 0;
        while ((q.total_dim() > max_dim || extra-- > 0) && steps++ < 40) {
            add_random_radical_element();
            q = quotient(p, subrep_closure(p, seeds)).rep;
        }
        if (q.total_dim() > 0 && q.total_dim() <= max_dim) return q;
    }
    return simple(alg, pick(rng));
}

// Random module map sampled from the hom space.
inline ModuleMap random_hom(const Rep& m, const Rep& n, std::mt19937_64& rng) {
    std::vector<ModuleMap> basis = hom_basis(m, n);
    ModuleMap f = zero_map(m, n);
    std::uniform_int_distribution<u32> coeff(0, m.alg->mod - 1);
    for (const ModuleMap& b : basis) f = map_sum(f, map_scaled(b, coeff(rng)));
    return f;
}

// Random bounded complex with `len` terms ending at degree `lo`. Terms are
// random modules; each differential is sampled from the subspace of homs
// that compose to zero with the previous one.
inline Complex random_complex(AlgebraPtr alg, int lo, int len, int max_term_dim,
                              std::mt19937_64& rng) {
    std::vector<Rep> terms;
    for (int k = 0; k < len; ++k) terms.push_back(random_module(alg, max_term_dim, rng));
    std::vector<ModuleMap> diffs;
    for (int k = 1; k < len; ++k) {
        const Rep& src = terms[k];
        const Rep& tgt = terms[k - 1];
        std::vector<ModuleMap> basis = hom_basis(src, tgt);
        if (k == 1) {
            diffs.push_back(random_hom(src, tgt, rng));
            continue;
        }
        // need d_{k-1} . d_k = 0: solve for combinations of the hom basis
        const ModuleMap& prev = diffs[k - 2];  // terms[k-1] -> terms[k-2]
        const u32 p = alg->mod;
        int cols = 0;
        for (size_t v = 0; v < src.dims.size(); ++v) cols += src.dims[v] * terms[k - 2].dims[v];
        Mat constraint(static_cast<int>(basis.size()), cols, p);
        for (size_t b = 0; b < basis.size(); ++b) {
            ModuleMap comp = compose(basis[b], prev);
            int off = 0;
            for (size_t v = 0; v < comp.f.size(); ++v)
                for (u32 x : comp.f[v].a) constraint.at(static_cast<int>(b), off++) = x;
        }
        Mat combos = left_kernel(constraint);
        ModuleMap d = zero_map(src, tgt);
        std::uniform_int_distribution<u32> coeff(0, p - 1);
        for (int r = 0; r < combos.rows; ++r) {
            u32 c = coeff(rng);
            if (c == 0) continue;
            for (int b = 0; b < combos.cols; ++b)
                if (combos.at(r, b))
                    d = map_sum(d, map_scaled(basis[b], fp_mul(c, combos.at(r, b), p)));
        }
        diffs.push_back(std::move(d));
    }
    return Complex(alg, lo, std::move(terms), std::move(diffs));
}

// Random representation with arbitrary matrices; only sound for relation-free
// supports (a2 / a3, or restricted supports where relations vanish).
inline Rep random_free_rep(AlgebraPtr alg, const std::vector<int>& dims, std::mt19937_64& rng) {
    std::vector<Mat> maps;
    for (const Arrow& a : alg->quiver.arrows)
        maps.push_back(random_mat(dims[a.src], dims[a.tgt], alg->mod, rng));
    return make_rep(alg, dims, std::move(maps));
}

// Random small bound quiver algebra: an acyclic quiver (arrows only go up)
// with a sprinkling of length-2 monomial relations, so the ideal is always
// admissible. Occasionally adds a nilpotent loop.
inline AlgebraPtr random_algebra(std::mt19937_64& rng, u32 p = 101) {
    std::uniform_int_distribution<int> nv(2, 4);
    const int n = nv(rng);
    Quiver q;
    q.vertices = n;
    std::uniform_int_distribution<int> narrows(1, 5);
    std::uniform_int_distribution<int> vpick(0, n - 1);
    int count = narrows(rng);
    for (int k = 0; k < count; ++k) {
        int u = vpick(rng), v = vpick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        q.arrows.push_back(Arrow{"a" + std::to_string(k), u, v});
    }
    bool loop = (rng() % 4) == 0;
    if (loop) {
        int v = vpick(rng);
        q.arrows.push_back(Arrow{"l", v, v});
    }
    std::vector<Relation> rels;
    if (loop) {
        Relation r;
        r.terms.push_back(RelTerm{1, {static_cast<int>(q.arrows.size()) - 1,
                                      static_cast<int>(q.arrows.size()) - 1}});
        rels.push_back(std::move(r));
    }
    // random composable length-2 monomials
    for (size_t i = 0; i < q.arrows.size(); ++i)
        for (size_t j = 0; j < q.arrows.size(); ++j) {
            if (q.arrows[i].tgt != q.arrows[j].src) continue;
            if (i == j) continue;  // loop square handled above
            if ((rng() % 3) == 0) {
                Relation r;
                r.terms.push_back(RelTerm{1, {static_cast<int>(i), static_cast<int>(j)}});
                rels.push_back(std::move(r));
            }
        }
    return std::make_shared<const Algebra>(build_algebra(q, rels, p, 24));
}

// Every subspace of GF(p)^dim, one canonical RREF basis each. Counts grow
// like p^(d^2/4), so keep dim or p small.
inline std::vector<Subspace> all_subspaces(int dim, u32 p) {
    std::vector<Subspace> out;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        std::vector<int> pivots;
        for (int c = 0; c < dim; ++c)
            if (mask & (1 << c)) pivots.push_back(c);
        int r = static_cast<int>(pivots.size());
        // free entries: (row i, col c) with c > pivots[i] and c not a pivot
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < r; ++i)
            for (int c = pivots[i] + 1; c < dim; ++c)
                if (!(mask & (1 << c))) free_pos.emplace_back(i, c);
        std::vector<u32> vals(free_pos.size(), 0);
        for (;;) {
            Mat b(r, dim, p);
            for (int i = 0; i < r; ++i) b.at(i, pivots[i]) = 1;
            for (size_t k = 0; k < free_pos.size(); ++k) b.at(free_pos[k].first, free_pos[k].second) = vals[k];
            Subspace s(dim, p);
            s.basis = b;
            out.push_back(std::move(s));
            size_t k = 0;
            while (k < vals.size() && ++vals[k] == p) vals[k++] = 0;
            if (k == vals.size()) break;
        }
    }
    return out;
}

// Exhaustive list of arrow-closed subrepresentations. Vertices are filled in
// index order and forward arrows prune the candidates; any remaining arrows
// are checked at the end.
inline std::vector<SubRep> all_subreps(const Rep& m) {
    const int n = static_cast<int>(m.dims.size());
    std::vector<std::vector<Subspace>> choices(n);
    for (int v = 0; v < n; ++v) choices[v] = all_subspaces(m.dims[v], m.alg->mod);
    std::vector<SubRep> out;
    SubRep cur = zero_subrep(m);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            if (subrep_closed(m, cur)) out.push_back(cur);
            return;
        }
        for (const Subspace& s : choices[v]) {
            bool ok = true;
            for (size_t a = 0; a < m.alg->quiver.arrows.size() && ok; ++a) {
                const Arrow& ar = m.alg->quiver.arrows[a];
                if (ar.tgt != v || ar.src > v) continue;
                Mat img = cur.at[ar.src].basis * m.arrow_maps[a];
                if (ar.src == v) img = s.basis * m.arrow_maps[a];
                ok = subspace_contains_all(s, img);
            }
            if (!ok) continue;
            cur.at[v] = s;
            rec(v + 1);
            cur.at[v] = Subspace(m.dims[v], m.alg->mod);
        }
    };
    rec(0);
    return out;
}

}  // namespace derdim::testing
