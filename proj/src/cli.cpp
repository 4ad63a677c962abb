#include "derdim/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace derdim {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pd_json(const PdResult& r) {
    ordered_json j;
    switch (r.tag) {
        case PdResult::Tag::Finite:
            j["tag"] = "finite";
            j["value"] = r.value;
            break;
        case PdResult::Tag::InfiniteCertified:
            j["tag"] = "infinite";
            j["value"] = nullptr;
            break;
        case PdResult::Tag::AtLeast:
            j["tag"] = "at_least";
            j["value"] = r.value;
            break;
    }
    return j;
}

std::string pd_text(const PdResult& r) {
    switch (r.tag) {
        case PdResult::Tag::Finite: return std::to_string(r.value);
        case PdResult::Tag::InfiniteCertified:
            return "infinite (syzygy " + std::to_string(r.wit_a) + " = syzygy " +
                   std::to_string(r.wit_b) + ")";
        case PdResult::Tag::AtLeast: return ">= " + std::to_string(r.value) + " (cutoff)";
    }
    return "?";
}

ordered_json cert_json(const SyzygyTypeCertificate& c) {
    ordered_json j;
    switch (c.tag) {
        case SyzygyTypeCertificate::Tag::GldimFinite: j["tag"] = "gldim_finite"; break;
        case SyzygyTypeCertificate::Tag::Periodic: j["tag"] = "periodic"; break;
        case SyzygyTypeCertificate::Tag::Unknown: j["tag"] = "unknown"; break;
    }
    if (c.tag == SyzygyTypeCertificate::Tag::Periodic) {
        j["a"] = c.wit_a;
        j["b"] = c.wit_b;
    } else {
        j["a"] = nullptr;
        j["b"] = nullptr;
    }
    j["depth"] = c.depth;
    return j;
}

std::string cert_text(const SyzygyTypeCertificate& c) {
    switch (c.tag) {
        case SyzygyTypeCertificate::Tag::GldimFinite:
            return "finite syzygy type (gldim = " + std::to_string(c.gldim) + ")";
        case SyzygyTypeCertificate::Tag::Periodic:
            return "finite syzygy type (syzygy " + std::to_string(c.wit_a) + " = syzygy " +
                   std::to_string(c.wit_b) + " of the top)";
        case SyzygyTypeCertificate::Tag::Unknown:
            return "unknown (searched " + std::to_string(c.depth) + " syzygies)";
    }
    return "?";
}

ordered_json algebra_json(const AlgebraContext& ctx) {
    ordered_json j;
    j["dim"] = ctx.alg->dim();
    j["loewy_length"] = ctx.loewy;
    j["gldim"] = pd_json(ctx.gldim);
    return j;
}

ordered_json report_json(const BoundReport& rep) {
    ordered_json j;
    ordered_json vset = ordered_json::array();
    for (int v : rep.v) vset.push_back(v + 1);
    j["v_set"] = vset;
    j["pd_v"] = pd_json(rep.pd_v);
    j["layer_length"] = rep.layer_len;
    j["syzygy_certificate"] = cert_json(rep.cert);
    ordered_json bounds = ordered_json::array();
    for (const BoundEntry& e : rep.entries) {
        ordered_json b;
        b["name"] = e.name;
        b["applicable"] = e.applicable == BoundEntry::Applicable::Yes ? "yes"
                        : e.applicable == BoundEntry::Applicable::No ? "no" : "unknown";
        if (e.value) b["value"] = *e.value; else b["value"] = nullptr;
        if (e.reason.empty()) b["reason"] = nullptr; else b["reason"] = e.reason;
        bounds.push_back(b);
    }
    j["bounds"] = bounds;
    if (rep.min_bound) j["min_bound"] = *rep.min_bound; else j["min_bound"] = nullptr;
    return j;
}

int run_guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const admissibility_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

AlgebraContext load_context(const std::string& path, const CliOptions& opt) {
    AlgebraFile f = parse_algebra_path(path);
    auto alg = std::make_shared<const Algebra>(
        build_algebra(f.quiver, f.relations, f.mod, opt.max_degree));
    return make_context(alg, opt.seed, opt.cutoff, opt.depth);
}

}  // namespace

std::vector<int> parse_simples_arg(const std::string& arg, int vertex_count) {
    std::vector<int> out;
    if (arg == "none") return out;
    if (arg == "all") {
        for (int i = 0; i < vertex_count; ++i) out.push_back(i);
        return out;
    }
    std::istringstream ss(arg);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(piece, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad vertex '" + piece + "' in --simples");
        }
        if (pos != piece.size() || v < 1 || v > vertex_count)
            throw std::invalid_argument("vertex '" + piece + "' out of range in --simples");
        out.push_back(v - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int cmd_analyze(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        AlgebraContext ctx = load_context(path, opt);
        if (opt.json) {
            ordered_json j;
            j["algebra"] = algebra_json(ctx);
            ordered_json simples = ordered_json::array();
            for (int i = 0; i < ctx.alg->vertex_count(); ++i) {
                ordered_json s;
                s["vertex"] = i + 1;
                s["pd"] = pd_json(ctx.pd_simple[i]);
                simples.push_back(s);
            }
            j["simples"] = simples;
            out << j.dump(2) << "\n";
            return;
        }
        out << "algebra           " << path << "\n";
        out << "dim               " << ctx.alg->dim() << "\n";
        out << "loewy length      " << ctx.loewy << "\n";
        out << "gldim             " << pd_text(ctx.gldim) << "\n";
        out << "syzygy type       " << cert_text(ctx.cert) << "\n";
        out << "pd of simples\n";
        for (int i = 0; i < ctx.alg->vertex_count(); ++i)
            out << "  S" << std::left << std::setw(6) << i + 1 << " " << pd_text(ctx.pd_simple[i]) << "\n";
    });
}

int cmd_bounds(const std::string& path, const std::string& simples, const CliOptions& opt,
               std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        AlgebraContext ctx = load_context(path, opt);
        SimpleSet v(ctx.alg->vertex_count(), parse_simples_arg(simples, ctx.alg->vertex_count()));
        BoundReport rep = full_report(ctx, v);
        if (opt.json) {
            ordered_json j;
            j["algebra"] = algebra_json(ctx);
            ordered_json body = report_json(rep);
            for (auto& [k, val] : body.items()) j[k] = val;
            out << j.dump(2) << "\n";
            return;
        }
        out << "algebra           " << path << "\n";
        out << "dim               " << ctx.alg->dim() << "\n";
        out << "loewy length      " << rep.loewy << "\n";
        out << "gldim             " << pd_text(rep.gldim) << "\n";
        out << "V                 {";
        for (size_t i = 0; i < rep.v.size(); ++i) out << (i ? "," : "") << rep.v[i] + 1;
        out << "}\n";
        out << "pd V              " << pd_text(rep.pd_v) << "\n";
        out << "id V              " << pd_text(rep.id_v) << "\n";
        out << "ll_V(A)           " << rep.layer_len << "\n";
        out << "syzygy type       " << cert_text(rep.cert) << "\n";
        out << "cosyzygy type     " << cert_text(rep.op_cert) << "\n";
        out << "\nbounds on the derived dimension\n";
        out << "  " << std::left << std::setw(16) << "name" << std::setw(54) << "formula"
            << std::setw(11) << "applicable" << "value\n";
        for (const BoundEntry& e : rep.entries) {
            out << "  " << std::left << std::setw(16) << e.name << std::setw(54) << e.formula;
            switch (e.applicable) {
                case BoundEntry::Applicable::Yes:
                    out << std::setw(11) << "yes" << *e.value << "\n";
                    break;
                case BoundEntry::Applicable::No:
                    out << std::setw(11) << "no" << "- (" << e.reason << ")\n";
                    break;
                case BoundEntry::Applicable::Unknown:
                    out << std::setw(11) << "unknown" << "- (" << e.reason << ")\n";
                    break;
            }
        }
        out << "\nmin bound         ";
        if (rep.min_bound) out << *rep.min_bound << "\n";
        else out << "none applicable\n";
    });
}

int cmd_search(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        AlgebraContext ctx = load_context(path, opt);
        std::vector<SearchRow> rows = best_v_search(ctx, opt.subset_limit, opt.greedy);
        size_t show = opt.show_all ? rows.size() : std::min<size_t>(rows.size(), 10);
        if (opt.json) {
            ordered_json j;
            j["algebra"] = algebra_json(ctx);
            j["mode"] = ctx.alg->vertex_count() <= opt.subset_limit ? "exhaustive" : "greedy";
            ordered_json rws = ordered_json::array();
            for (size_t i = 0; i < show; ++i) {
                ordered_json r;
                ordered_json vset = ordered_json::array();
                for (int v : rows[i].v) vset.push_back(v + 1);
                r["v_set"] = vset;
                r["min_bound"] = rows[i].min_bound;
                rws.push_back(r);
            }
            j["rows"] = rws;
            out << j.dump(2) << "\n";
            return;
        }
        out << "algebra           " << path << "\n";
        out << "subsets ranked by their best applicable bound\n";
        out << "  " << std::left << std::setw(10) << "bound" << "V\n";
        for (size_t i = 0; i < show; ++i) {
            out << "  " << std::left << std::setw(10) << rows[i].min_bound << "{";
            for (size_t k = 0; k < rows[i].v.size(); ++k) out << (k ? "," : "") << rows[i].v[k] + 1;
            out << "}\n";
        }
        if (show < rows.size()) out << "  ... " << rows.size() - show << " more (use --all)\n";
    });
}

int cmd_resolve(const std::string& path, const std::string& module_token, const CliOptions& opt,
                std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        AlgebraContext ctx = load_context(path, opt);
        if (module_token.size() < 2 || (module_token[0] != 'S' && module_token[0] != 'P'))
            throw std::invalid_argument("--module wants S<i> or P<i>");
        int vertex = 0;
        try {
            vertex = std::stoi(module_token.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("--module wants S<i> or P<i>");
        }
        if (vertex < 1 || vertex > ctx.alg->vertex_count())
            throw std::invalid_argument("--module vertex out of range");
        Rep m = module_token[0] == 'S' ? simple(ctx.alg, vertex - 1) : projective(ctx.alg, vertex - 1);

        std::mt19937_64 rng = ctx.fresh_rng();
        PdResult pd = proj_dimension(m, rng, opt.cutoff);
        std::vector<std::vector<int>> cover_dims;
        Rep cur = m;
        for (int k = 0; k <= opt.depth && !cur.is_zero(); ++k) {
            ProjectiveCover pc = projective_cover(cur);
            cover_dims.push_back(pc.cover.rep.dims);
            cur = sub_to_rep(pc.cover.rep, kernel_subrep(pc.cover.rep, cur, pc.epi)).rep;
        }
        if (opt.json) {
            ordered_json j;
            j["algebra"] = algebra_json(ctx);
            j["module"] = module_token;
            ordered_json terms = ordered_json::array();
            for (const auto& dims : cover_dims) {
                ordered_json t = ordered_json::array();
                for (int d : dims) t.push_back(d);
                terms.push_back(t);
            }
            j["terms"] = terms;
            j["pd"] = pd_json(pd);
            out << j.dump(2) << "\n";
            return;
        }
        out << "minimal projective resolution of " << module_token << " over " << path << "\n";
        for (size_t k = 0; k < cover_dims.size(); ++k) {
            out << "  P" << std::left << std::setw(4) << k << "dims (";
            for (size_t v = 0; v < cover_dims[k].size(); ++v)
                out << (v ? "," : "") << cover_dims[k][v];
            out << ")\n";
        }
        out << "pd " << pd_text(pd) << "\n";
    });
}

int cmd_syzygy_type(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        AlgebraContext ctx = load_context(path, opt);
        if (opt.json) {
            ordered_json j;
            j["algebra"] = algebra_json(ctx);
            j["syzygy_certificate"] = cert_json(ctx.cert);
            j["cosyzygy_certificate"] = cert_json(ctx.op_cert);
            out << j.dump(2) << "\n";
            return;
        }
        out << "algebra           " << path << "\n";
        out << "syzygy type       " << cert_text(ctx.cert) << "\n";
        out << "cosyzygy type     " << cert_text(ctx.op_cert) << "\n";
    });
}

}  // namespace derdim
