#include "derdim/torsion.hpp"

namespace derdim {

bool in_F_of_V(const Rep& m, const SimpleSet& v) {
    for (size_t i = 0; i < m.dims.size(); ++i)
        if (!v.contains(static_cast<int>(i)) && m.dims[i] > 0) return false;
    return true;
}

SubRep torsion_radical(const Rep& m, const SimpleSet& v) {
    std::vector<Mat> seeds;
    for (size_t i = 0; i < m.dims.size(); ++i) {
        if (v.contains(static_cast<int>(i)))
            seeds.emplace_back(0, m.dims[i], m.alg->mod);
        else
            seeds.push_back(Mat::identity(m.dims[i], m.alg->mod));
    }
    return subrep_closure(m, seeds);
}

Rep torsion_radical_rep(const Rep& m, const SimpleSet& v) {
    return sub_to_rep(m, torsion_radical(m, v)).rep;
}

Rep q_t(const Rep& m, const SimpleSet& v) {
    return quotient(m, torsion_radical(m, v)).rep;
}

Rep F_step(const Rep& m, const SimpleSet& v) {
    Rep t = torsion_radical_rep(m, v);
    return sub_to_rep(t, radical(t)).rep;
}

int layer_length(const Rep& m, const SimpleSet& v) {
    Rep cur = m;
    int i = 0;
    for (;;) {
        Rep t = torsion_radical_rep(cur, v);
        if (t.is_zero()) return i;
        cur = sub_to_rep(t, radical(t)).rep;  // F step reuses the torsion part
        ++i;
    }
}

LayerProfile layer_profile(const Rep& m, const SimpleSet& v) {
    LayerProfile out;
    out.v = v;
    out.layers.push_back(m);
    for (;;) {
        Rep t = torsion_radical_rep(out.layers.back(), v);
        if (t.is_zero()) break;
        out.layers.push_back(sub_to_rep(t, radical(t)).rep);
        ++out.value;
    }
    return out;
}

}  // namespace derdim
