#include "derdim/complex.hpp"

#include <algorithm>

namespace derdim {

Complex::Complex(AlgebraPtr a, int lo, std::vector<Rep> terms, std::vector<ModuleMap> diffs)
    : alg(std::move(a)), lo_(lo), hi_(lo + static_cast<int>(terms.size()) - 1),
      terms_(std::move(terms)), diffs_(std::move(diffs)) {
    zero_ = zero_rep(alg);
    validate();
}

Complex Complex::zero(AlgebraPtr a) {
    Complex c;
    c.alg = std::move(a);
    c.lo_ = 0;
    c.hi_ = -1;
    c.zero_ = zero_rep(c.alg);
    return c;
}

Complex Complex::from_module(const Rep& m, int degree) {
    return Complex(m.alg, degree, {m}, {});
}

void Complex::validate() const {
    if (terms_.empty()) throw std::invalid_argument("complex: use Complex::zero for the zero complex");
    if (diffs_.size() + 1 != terms_.size())
        throw std::invalid_argument("complex: need one differential between consecutive terms");
    for (size_t k = 0; k < diffs_.size(); ++k) {
        // diffs_[k] : terms_[k+1] -> terms_[k]
        check_module_map(terms_[k + 1], terms_[k], diffs_[k]);
    }
    for (size_t k = 0; k + 1 < diffs_.size(); ++k) {
        ModuleMap dd = compose(diffs_[k + 1], diffs_[k]);
        for (const Mat& f : dd.f)
            if (!f.is_zero()) throw std::invalid_argument("complex: d . d != 0");
    }
}

const Rep& Complex::term(int i) const {
    if (i < lo_ || i > hi_) return zero_;
    return terms_[i - lo_];
}

ModuleMap Complex::diff(int i) const {
    // d_i : X_i -> X_{i-1}
    if (i <= lo_ || i > hi_) return zero_map(term(i), term(i - 1));
    return diffs_[i - lo_ - 1];
}

Complex Complex::trimmed() const {
    int a = lo_, b = hi_;
    while (a <= b && term(a).is_zero()) ++a;
    while (b >= a && term(b).is_zero()) --b;
    if (a > b) return Complex::zero(alg);
    std::vector<Rep> terms;
    std::vector<ModuleMap> diffs;
    for (int i = a; i <= b; ++i) terms.push_back(term(i));
    for (int i = a + 1; i <= b; ++i) diffs.push_back(diff(i));
    return Complex(alg, a, std::move(terms), std::move(diffs));
}

std::vector<int> homology_dims(const Complex& x, int i) {
    const Rep& xi = x.term(i);
    ModuleMap din = x.diff(i + 1);   // X_{i+1} -> X_i
    ModuleMap dout = x.diff(i);      // X_i -> X_{i-1}
    std::vector<int> h(xi.dims.size());
    for (size_t v = 0; v < xi.dims.size(); ++v)
        h[v] = xi.dims[v] - rank(dout.f[v]) - rank(din.f[v]);
    return h;
}

Rep homology(const Complex& x, int i) {
    const Rep& xi = x.term(i);
    SubRep cycles = kernel_subrep(xi, x.term(i - 1), x.diff(i));
    SubRep boundaries = image_subrep(x.term(i + 1), xi, x.diff(i + 1));
    if (!subrep_contains(cycles, boundaries))
        throw std::logic_error("homology: boundaries escape cycles");
    SubRepAsRep z = sub_to_rep(xi, cycles);
    // express boundaries in cycle coordinates
    SubRep b_in_z;
    for (size_t v = 0; v < xi.dims.size(); ++v) {
        auto coords = solve_left(cycles.at[v].basis, boundaries.at[v].basis);
        if (!coords) throw std::logic_error("homology: coordinate solve failed");
        b_in_z.at.push_back(row_space(*coords));
    }
    return quotient(z.rep, b_in_z).rep;
}

bool is_zero_in_derived(const Complex& x) {
    for (int i = x.lo(); i <= x.hi(); ++i) {
        std::vector<int> h = homology_dims(x, i);
        for (int d : h)
            if (d != 0) return false;
    }
    return true;
}

Complex shift(const Complex& x, int k) {
    if (x.is_zero_complex()) return x;
    std::vector<Rep> terms;
    std::vector<ModuleMap> diffs;
    for (int i = x.lo(); i <= x.hi(); ++i) terms.push_back(x.term(i));
    u32 p = x.alg->mod;
    u32 sign = (k % 2 == 0) ? 1 : p - 1;
    for (int i = x.lo() + 1; i <= x.hi(); ++i) diffs.push_back(map_scaled(x.diff(i), sign));
    return Complex(x.alg, x.lo() + k, std::move(terms), std::move(diffs));
}

Complex direct_sum(const Complex& x, const Complex& y) {
    if (x.is_zero_complex()) return y;
    if (y.is_zero_complex()) return x;
    int lo = std::min(x.lo(), y.lo());
    int hi = std::max(x.hi(), y.hi());
    std::vector<Rep> terms;
    std::vector<ModuleMap> diffs;
    for (int i = lo; i <= hi; ++i) terms.push_back(direct_sum(x.term(i), y.term(i)));
    for (int i = lo + 1; i <= hi; ++i) {
        ModuleMap dx = x.diff(i), dy = y.diff(i);
        ModuleMap d;
        for (size_t v = 0; v < dx.f.size(); ++v) d.f.push_back(block_diag(dx.f[v], dy.f[v]));
        diffs.push_back(std::move(d));
    }
    return Complex(x.alg, lo, std::move(terms), std::move(diffs));
}

Complex brutal_truncate(const Complex& x, int from) {
    if (x.is_zero_complex() || from <= x.lo()) return x;
    if (from > x.hi()) return Complex::zero(x.alg);
    std::vector<Rep> terms;
    std::vector<ModuleMap> diffs;
    for (int i = from; i <= x.hi(); ++i) terms.push_back(x.term(i));
    for (int i = from + 1; i <= x.hi(); ++i) diffs.push_back(x.diff(i));
    return Complex(x.alg, from, std::move(terms), std::move(diffs));
}

namespace {

// One degree of a degreewise functor: the new term plus enough data to carry
// maps across. Sub functors remember the inclusion rows, quotient functors
// the projection and its section.
struct FunctorTerm {
    Rep rep;
    bool is_sub = true;
    ModuleMap inclusion;   // sub: F(M) -> M
    ModuleMap projection;  // quot: M -> F(M)
    ModuleMap section;     // quot: F(M) -> M
};

FunctorTerm apply_functor(const Rep& m, DegreewiseFunctor fn, const SimpleSet* v) {
    FunctorTerm out;
    switch (fn) {
        case DegreewiseFunctor::Rad: {
            SubRepAsRep s = sub_to_rep(m, radical(m));
            out.rep = s.rep;
            out.inclusion = s.inclusion;
            return out;
        }
        case DegreewiseFunctor::Top: {
            QuotientResult q = top(m);
            out.rep = q.rep;
            out.is_sub = false;
            out.projection = q.projection;
            out.section = q.section;
            return out;
        }
        case DegreewiseFunctor::TorsionRadical: {
            SubRepAsRep s = sub_to_rep(m, torsion_radical(m, *v));
            out.rep = s.rep;
            out.inclusion = s.inclusion;
            return out;
        }
        case DegreewiseFunctor::QT: {
            QuotientResult q = quotient(m, torsion_radical(m, *v));
            out.rep = q.rep;
            out.is_sub = false;
            out.projection = q.projection;
            out.section = q.section;
            return out;
        }
        case DegreewiseFunctor::FStep: {
            SubRep t = torsion_radical(m, *v);
            SubRepAsRep tr = sub_to_rep(m, t);
            SubRepAsRep r = sub_to_rep(tr.rep, radical(tr.rep));
            out.rep = r.rep;
            out.inclusion = compose(r.inclusion, tr.inclusion);
            return out;
        }
    }
    throw std::logic_error("apply_functor: unknown functor");
}

ModuleMap induce(const FunctorTerm& src, const FunctorTerm& tgt, const ModuleMap& f) {
    if (src.is_sub) {
        // restriction: rows of F(M) pushed through f, re-expressed in F(N)
        ModuleMap pushed = compose(src.inclusion, f);
        ModuleMap out;
        for (size_t vv = 0; vv < pushed.f.size(); ++vv) {
            auto coords = solve_left(tgt.inclusion.f[vv], pushed.f[vv]);
            if (!coords) throw std::logic_error("degreewise functor: image left the subobject");
            out.f.push_back(*coords);
        }
        return out;
    }
    return compose(compose(src.section, f), tgt.projection);
}

}  // namespace

Complex apply_degreewise(const Complex& x, DegreewiseFunctor fn, const SimpleSet* v) {
    bool needs_v = fn == DegreewiseFunctor::TorsionRadical || fn == DegreewiseFunctor::QT ||
                   fn == DegreewiseFunctor::FStep;
    if (needs_v && v == nullptr) throw std::invalid_argument("apply_degreewise: functor needs a simple set");
    if (x.is_zero_complex()) return x;
    std::vector<FunctorTerm> ft;
    for (int i = x.lo(); i <= x.hi(); ++i) ft.push_back(apply_functor(x.term(i), fn, v));
    std::vector<Rep> terms;
    std::vector<ModuleMap> diffs;
    for (size_t k = 0; k < ft.size(); ++k) terms.push_back(ft[k].rep);
    for (size_t k = 1; k < ft.size(); ++k)
        diffs.push_back(induce(ft[k], ft[k - 1], x.diff(x.lo() + static_cast<int>(k))));
    return Complex(x.alg, x.lo(), std::move(terms), std::move(diffs));
}

Rep Resolution::term(int j) const {
    if (j < lo || j > top) return zero_rep(x.alg);
    return terms[j - lo];
}

Complex Resolution::as_complex() const {
    if (terms.empty()) return Complex::zero(x.alg);
    std::vector<Rep> t = terms;
    std::vector<ModuleMap> d = diffs;
    return Complex(x.alg, lo, std::move(t), std::move(d)).trimmed();
}

Resolution proj_resolution(const Complex& x_in, int depth) {
    if (depth < 0) throw std::invalid_argument("proj_resolution: depth must be >= 0");
    Complex x = x_in.trimmed();
    Resolution res;
    res.x = x;
    if (x.is_zero_complex()) {
        res.lo = 0;
        res.top = -1;
        res.complete = true;
        return res;
    }
    AlgebraPtr alg = x.alg;
    const int nv = alg->vertex_count();
    const u32 p = alg->mod;
    res.lo = x.lo();
    const int target = x.hi() + depth;

    Rep zero = zero_rep(alg);
    Rep p_prev = zero, p_prev2 = zero;  // P_{j-1}, P_{j-2}
    ModuleMap phi_prev = zero_map(zero, zero);  // Phi_{j-1}: P_{j-1} -> X_{j-1}
    ModuleMap delta_prev = zero_map(zero, zero);  // Delta_{j-1}: P_{j-1} -> P_{j-2}

    for (int j = x.lo(); j <= target; ++j) {
        const Rep& xj = x.term(j);
        ModuleMap dj = x.diff(j);

        // cycles to hit: pairs (x, q) in X_j + P_{j-1} with
        // x d_j + q Phi_{j-1} = 0 and q Delta_{j-1} = 0
        Rep w = direct_sum(xj, p_prev);
        SubRep z;
        for (int v = 0; v < nv; ++v) {
            Mat n_left = vstack(dj.f[v], phi_prev.f[v]);     // -> X_{j-1}
            Mat zero_top(xj.dims[v], p_prev2.dims[v], p);
            Mat n_right = vstack(zero_top, delta_prev.f[v]); // -> P_{j-2}
            Mat constraints = hstack(n_left, n_right);
            z.at.push_back(row_space(left_kernel(constraints)));
        }
        if (!subrep_closed(w, z)) throw std::logic_error("proj_resolution: cycle space not arrow-closed");
        SubRepAsRep z_rep = sub_to_rep(w, z);

        // boundaries arriving from X_{j+1}: (x' d_{j+1}, 0)
        ModuleMap djp1 = x.diff(j + 1);
        SubRep b_in_z;
        for (int v = 0; v < nv; ++v) {
            Mat img = hstack(djp1.f[v], Mat(x.term(j + 1).dims[v], p_prev.dims[v], p));
            auto coords = solve_left(z.at[v].basis, img);
            if (!coords) throw std::logic_error("proj_resolution: boundary outside cycle space");
            b_in_z.at.push_back(row_space(*coords));
        }
        QuotientResult zbar = quotient(z_rep.rep, b_in_z);

        if (zbar.rep.is_zero()) {
            res.terms.push_back(zero);
            if (j > res.lo) res.diffs.push_back(zero_map(zero, p_prev));
            res.compare.push_back(zero_map(zero, xj));
            res.top = j;
            p_prev2 = p_prev;
            p_prev = zero;
            delta_prev = zero_map(zero, p_prev2);
            phi_prev = zero_map(zero, xj);
            if (j >= x.hi()) { res.complete = true; break; }
            continue;
        }

        ProjectiveCover cover = projective_cover(zbar.rep);
        // lift the cover through Z -> Zbar: send each generator to the
        // canonical section of its image and extend along path actions (the
        // section alone is linear but not a module map)
        std::vector<std::vector<u32>> lifted_gens;
        for (size_t k = 0; k < cover.cover.gens.size(); ++k) {
            int gv = cover.cover.gens[k];
            std::vector<u32> img = cover.epi.f[gv].row(cover.cover.gen_row[k]);
            Mat img_row(1, static_cast<int>(img.size()), p);
            img_row.set_row(0, img);
            lifted_gens.push_back((img_row * zbar.section.f[gv]).row(0));
        }
        ModuleMap lift_to_z = proj_sum_map(cover.cover, z_rep.rep, lifted_gens);
        ModuleMap into_w = compose(lift_to_z, z_rep.inclusion);
        const Rep& pj = cover.cover.rep;
        ModuleMap phi_j, delta_j;
        for (int v = 0; v < nv; ++v) {
            const Mat& whole = into_w.f[v];
            Mat fx(pj.dims[v], xj.dims[v], p);
            Mat fp(pj.dims[v], p_prev.dims[v], p);
            for (int r = 0; r < whole.rows; ++r) {
                for (int c = 0; c < xj.dims[v]; ++c) fx.at(r, c) = whole.at(r, c);
                for (int c = 0; c < p_prev.dims[v]; ++c)
                    fp.at(r, c) = fp_neg(whole.at(r, xj.dims[v] + c), p);
            }
            phi_j.f.push_back(std::move(fx));
            delta_j.f.push_back(std::move(fp));
        }
        check_module_map(pj, xj, phi_j);
        if (j > res.lo) {
            check_module_map(pj, p_prev, delta_j);
            // minimality: the new differential lands in the radical
            SubRep rad_prev = radical(p_prev);
            for (int v = 0; v < nv; ++v)
                if (!subspace_contains_all(rad_prev.at[v], delta_j.f[v]))
                    throw std::logic_error("proj_resolution: differential escapes the radical");
            res.diffs.push_back(delta_j);
        }
        res.compare.push_back(phi_j);
        res.terms.push_back(pj);
        res.top = j;

        p_prev2 = p_prev;
        p_prev = pj;
        delta_prev = delta_j;
        phi_prev = phi_j;
    }
    return res;
}

Complex derived_syzygy(const Resolution& r, int n) {
    if (n < 0) throw std::invalid_argument("derived_syzygy: n must be >= 0");
    Complex p = r.as_complex();
    if (p.is_zero_complex()) return p;
    Complex tr = brutal_truncate(p, n);
    if (tr.is_zero_complex()) return tr;
    return shift(tr, -n).trimmed();
}

Complex derived_syzygy(const Complex& x, int n, int extra) {
    Complex t = x.trimmed();
    if (t.is_zero_complex()) return t;
    int depth = std::max(n - t.hi(), 0) + extra;
    Resolution r = proj_resolution(t, depth);
    return derived_syzygy(r, n);
}

}  // namespace derdim
