#include "derdim/bounds.hpp"

#include <algorithm>

namespace derdim {

SyzygyTypeCertificate syzygy_type(AlgebraPtr alg, std::mt19937_64& rng, int cutoff, int depth) {
    if (depth < 1) throw std::invalid_argument("syzygy_type: depth must be >= 1");
    SyzygyTypeCertificate cert;
    cert.depth = depth;
    PdResult g = global_dimension(alg, rng, cutoff);
    if (g.finite()) {
        cert.tag = SyzygyTypeCertificate::Tag::GldimFinite;
        cert.gldim = g.value;
        return cert;
    }
    // look for a repeat in the syzygy chain of Lambda/rad Lambda as one module
    std::vector<Rep> chain;
    chain.push_back(top_of_algebra(alg));
    for (int k = 1; k <= depth; ++k) {
        chain.push_back(syzygy(chain.back()));
        const Rep& cur = chain.back();
        if (cur.is_zero()) {
            // the whole top has finite pd after all
            cert.tag = SyzygyTypeCertificate::Tag::GldimFinite;
            cert.gldim = k - 1;
            return cert;
        }
        for (int a = 0; a < k; ++a) {
            if (!chain[a].same_dims(cur)) continue;
            IsoResult iso = is_isomorphic(chain[a], cur, rng);
            if (iso.yes()) {
                cert.tag = SyzygyTypeCertificate::Tag::Periodic;
                cert.wit_a = a;
                cert.wit_b = k;
                return cert;
            }
        }
    }
    cert.tag = SyzygyTypeCertificate::Tag::Unknown;
    return cert;
}

AlgebraContext make_context(AlgebraPtr alg, u64 seed, int cutoff, int depth) {
    AlgebraContext ctx;
    ctx.alg = alg;
    ctx.op = std::make_shared<const Algebra>(opposite_algebra(*alg));
    ctx.seed = seed;
    ctx.cutoff = cutoff;
    ctx.depth = depth;
    ctx.regular = regular_rep(alg);
    ctx.loewy = alg->rad_degree;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < alg->vertex_count(); ++i)
        ctx.pd_simple.push_back(proj_dimension(simple(alg, i), rng, cutoff));
    for (int i = 0; i < alg->vertex_count(); ++i)
        ctx.id_simple.push_back(injective_dimension(simple(alg, i), ctx.op, rng, cutoff));
    ctx.gldim = pd_sup(ctx.pd_simple);
    ctx.cert = syzygy_type(alg, rng, cutoff, depth);
    ctx.op_cert = syzygy_type(ctx.op, rng, cutoff, depth);
    return ctx;
}

int bound_loewy(const AlgebraContext& ctx) { return ctx.loewy - 1; }

std::optional<int> bound_gldim(const AlgebraContext& ctx) {
    if (ctx.gldim.finite()) return ctx.gldim.value;
    return std::nullopt;
}

namespace {

PdResult pd_of_set(const std::vector<PdResult>& per_simple, const SimpleSet& v) {
    std::vector<PdResult> parts;
    for (int i : v.members()) parts.push_back(per_simple[i]);
    if (parts.empty()) return PdResult::fin(-1);  // pd of the empty class
    return pd_sup(parts);
}

std::string pd_blocker(const PdResult& r, const char* what) {
    if (r.tag == PdResult::Tag::InfiniteCertified)
        return std::string(what) + " infinite (syzygies repeat)";
    return std::string(what) + " not resolved within cutoff";
}

}  // namespace

BoundReport full_report(const AlgebraContext& ctx, const SimpleSet& v) {
    BoundReport rep;
    rep.v = v.members();
    rep.layer_len = layer_length(ctx.regular, v);
    rep.pd_v = pd_of_set(ctx.pd_simple, v);
    rep.id_v = pd_of_set(ctx.id_simple, v);
    rep.loewy = ctx.loewy;
    rep.gldim = ctx.gldim;
    rep.cert = ctx.cert;
    rep.op_cert = ctx.op_cert;

    const int ll = rep.layer_len;
    auto yes = [](BoundEntry e, int value) {
        e.applicable = BoundEntry::Applicable::Yes;
        e.value = value;
        return e;
    };
    auto no = [](BoundEntry e, std::string why) {
        e.applicable = BoundEntry::Applicable::No;
        e.reason = std::move(why);
        return e;
    };
    auto unknown = [](BoundEntry e, std::string why) {
        e.applicable = BoundEntry::Applicable::Unknown;
        e.reason = std::move(why);
        return e;
    };

    rep.entries.push_back(yes({"loewy", "LL(A) - 1", {}, {}, {}}, ctx.loewy - 1));

    {
        BoundEntry e{"gldim", "gldim A", {}, {}, {}};
        if (ctx.gldim.finite()) rep.entries.push_back(yes(e, ctx.gldim.value));
        else if (ctx.gldim.tag == PdResult::Tag::InfiniteCertified)
            rep.entries.push_back(no(e, pd_blocker(ctx.gldim, "gldim")));
        else rep.entries.push_back(unknown(e, pd_blocker(ctx.gldim, "gldim")));
    }

    const bool pd_fin = rep.pd_v.finite();
    const bool pd_inf = rep.pd_v.tag == PdResult::Tag::InfiniteCertified;
    const int m = pd_fin ? rep.pd_v.value : 0;

    {
        BoundEntry e{"layer_product", "(pd V + 2)(ll_V(A) + 1) - 2", {}, {}, {}};
        if (pd_fin) rep.entries.push_back(yes(e, (m + 2) * (ll + 1) - 2));
        else if (pd_inf) rep.entries.push_back(no(e, pd_blocker(rep.pd_v, "pd V")));
        else rep.entries.push_back(unknown(e, pd_blocker(rep.pd_v, "pd V")));
    }
    {
        BoundEntry e{"layer_double", "2(pd V + ll_V(A)) + 1", {}, {}, {}};
        if (pd_fin) rep.entries.push_back(yes(e, 2 * (m + ll) + 1));
        else if (pd_inf) rep.entries.push_back(no(e, pd_blocker(rep.pd_v, "pd V")));
        else rep.entries.push_back(unknown(e, pd_blocker(rep.pd_v, "pd V")));
    }
    {
        BoundEntry e{"layer_le2", "pd V + 3  (needs ll_V(A) <= 2)", {}, {}, {}};
        if (ll > 2) rep.entries.push_back(no(e, "ll_V(A) > 2"));
        else if (pd_fin) rep.entries.push_back(yes(e, m + 3));
        else if (pd_inf) rep.entries.push_back(no(e, pd_blocker(rep.pd_v, "pd V")));
        else rep.entries.push_back(unknown(e, pd_blocker(rep.pd_v, "pd V")));
    }
    {
        BoundEntry e{"layer_ge2", "2 ll_V(A) + pd V - 1  (needs ll_V(A) >= 2)", {}, {}, {}};
        if (ll < 2) rep.entries.push_back(no(e, "ll_V(A) < 2"));
        else if (pd_fin) rep.entries.push_back(yes(e, 2 * ll + m - 1));
        else if (pd_inf) rep.entries.push_back(no(e, pd_blocker(rep.pd_v, "pd V")));
        else rep.entries.push_back(unknown(e, pd_blocker(rep.pd_v, "pd V")));
    }
    {
        // ll_V <= 2 certifies finite syzygy type on its own
        BoundEntry e{"syzygy_main", "ll_V(A) + pd V  (needs top A of finite syzygy type)", {}, {}, {}};
        bool type_ok = ctx.cert.certified() || ll <= 2;
        if (pd_inf) rep.entries.push_back(no(e, pd_blocker(rep.pd_v, "pd V")));
        else if (!pd_fin) rep.entries.push_back(unknown(e, pd_blocker(rep.pd_v, "pd V")));
        else if (!type_ok) rep.entries.push_back(unknown(e, "syzygy type of top A not certified"));
        else rep.entries.push_back(yes(e, ll + m));
    }
    {
        BoundEntry e{"cosyzygy_main", "ll_V(A) + id V  (needs top A of finite cosyzygy type)", {}, {}, {}};
        const bool id_fin = rep.id_v.finite();
        const bool id_inf = rep.id_v.tag == PdResult::Tag::InfiniteCertified;
        if (id_inf) rep.entries.push_back(no(e, pd_blocker(rep.id_v, "id V")));
        else if (!id_fin) rep.entries.push_back(unknown(e, pd_blocker(rep.id_v, "id V")));
        else if (!ctx.op_cert.certified())
            rep.entries.push_back(unknown(e, "cosyzygy type of top A not certified"));
        else rep.entries.push_back(yes(e, ll + rep.id_v.value));
    }

    for (const BoundEntry& e : rep.entries)
        if (e.applicable == BoundEntry::Applicable::Yes)
            rep.min_bound = rep.min_bound ? std::min(*rep.min_bound, *e.value) : *e.value;
    validate_report(rep);
    return rep;
}

void validate_report(const BoundReport& r) {
    std::optional<int> min;
    for (const BoundEntry& e : r.entries) {
        if (e.applicable == BoundEntry::Applicable::Yes) {
            if (!e.value) throw std::logic_error("report: applicable bound without value");
            min = min ? std::min(*min, *e.value) : *e.value;
        } else if (e.value) {
            throw std::logic_error("report: value emitted with uncertified precondition");
        }
    }
    if (min != r.min_bound) throw std::logic_error("report: min_bound mismatch");
}

namespace {

SearchRow evaluate_subset(const AlgebraContext& ctx, const std::vector<int>& members) {
    SimpleSet v(ctx.alg->vertex_count(), members);
    BoundReport rep = full_report(ctx, v);
    // bound (1) is always applicable, so min_bound exists
    return SearchRow{members, *rep.min_bound};
}

}  // namespace

std::vector<SearchRow> best_v_search(const AlgebraContext& ctx, int subset_limit, bool allow_greedy) {
    const int n = ctx.alg->vertex_count();
    std::vector<SearchRow> rows;
    if (n <= subset_limit) {
        for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (mask & (u64(1) << i)) members.push_back(i);
            rows.push_back(evaluate_subset(ctx, members));
        }
    } else if (allow_greedy) {
        // hill climb by single-vertex flips from the empty and full sets;
        // not guaranteed optimal
        auto climb = [&](std::vector<char> in) {
            auto members_of = [&](const std::vector<char>& ind) {
                std::vector<int> m;
                for (int i = 0; i < n; ++i)
                    if (ind[i]) m.push_back(i);
                return m;
            };
            SearchRow best = evaluate_subset(ctx, members_of(in));
            bool improved = true;
            while (improved) {
                improved = false;
                for (int i = 0; i < n; ++i) {
                    std::vector<char> flip = in;
                    flip[i] = !flip[i];
                    SearchRow cand = evaluate_subset(ctx, members_of(flip));
                    if (cand.min_bound < best.min_bound) {
                        best = cand;
                        in = flip;
                        improved = true;
                    }
                }
            }
            return best;
        };
        rows.push_back(climb(std::vector<char>(n, 0)));
        rows.push_back(climb(std::vector<char>(n, 1)));
    } else {
        throw resource_limit_error("exhaustive search over 2^" + std::to_string(n) +
                                   " subsets exceeds the limit; pass a larger subset limit or allow greedy search");
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.min_bound != b.min_bound) return a.min_bound < b.min_bound;
        if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
        return a.v < b.v;
    });
    return rows;
}

}  // namespace derdim
