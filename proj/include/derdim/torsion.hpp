// The torsion pair attached to a set V of simple modules.
//
// F(V) is the class of modules whose composition factors all lie in V; over
// a basic algebra that is a support condition on the dimension vector. The
// torsion radical t_V(M) is the smallest submodule with quotient in F(V),
// computed by closing the coordinate subspaces at non-V vertices under the
// arrow action. Layer length iterates F = rad . t_V until t_V vanishes.

#pragma once

#include <set>
#include <vector>

#include "derdim/rep.hpp"

namespace derdim {

struct SimpleSet {
    int vertex_count = 0;
    std::vector<char> in;  // indicator over vertices

    SimpleSet() = default;
    SimpleSet(int n, const std::vector<int>& vertices) : vertex_count(n), in(n, 0) {
        for (int v : vertices) {
            if (v < 0 || v >= n) throw std::invalid_argument("SimpleSet: vertex out of range");
            in[v] = 1;
        }
    }
    static SimpleSet none(int n) { return SimpleSet(n, {}); }
    static SimpleSet all(int n) {
        SimpleSet s(n, {});
        std::fill(s.in.begin(), s.in.end(), 1);
        return s;
    }
    bool contains(int v) const { return in[v] != 0; }
    std::vector<int> members() const {
        std::vector<int> m;
        for (int v = 0; v < vertex_count; ++v)
            if (in[v]) m.push_back(v);
        return m;
    }
    int size() const { return static_cast<int>(members().size()); }
};

// M lies in F(V) iff its support is contained in V.
bool in_F_of_V(const Rep& m, const SimpleSet& v);

// Largest submodule whose top avoids V; equivalently the smallest submodule
// with quotient in F(V).
SubRep torsion_radical(const Rep& m, const SimpleSet& v);

Rep torsion_radical_rep(const Rep& m, const SimpleSet& v);

// M / t_V(M); always in F(V).
Rep q_t(const Rep& m, const SimpleSet& v);

// rad(t_V(M)) as a representation.
Rep F_step(const Rep& m, const SimpleSet& v);

// Least i >= 0 with t_V(F^i(M)) = 0.
int layer_length(const Rep& m, const SimpleSet& v);

// The whole descent M, F(M), F^2(M), ... until the torsion part dies. Total
// dimensions strictly decrease along the sequence and the value never
// exceeds the Loewy length.
struct LayerProfile {
    SimpleSet v;
    std::vector<Rep> layers;  // layers[i] = F^i(M), starting at M itself
    int value = 0;            // = layer_length(M, V)
};

LayerProfile layer_profile(const Rep& m, const SimpleSet& v);

}  // namespace derdim
