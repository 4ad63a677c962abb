// Bounded chain complexes of representations, with differentials lowering
// the degree: d_i : X_i -> X_{i-1} and d composed with d equal to zero.
//
// A projective resolution of a complex is computed degree by degree from the
// bottom of the support upward: at each degree the next term is the
// projective cover of the cycles still to be hit, pulled back against the
// comparison data built so far. The construction keeps every differential
// image inside the radical, so restricting to a module in degree 0
// reproduces the classical minimal projective resolution and the n-th
// derived syzygy is the brutal truncation at n shifted back by n.

#pragma once

#include "derdim/rep.hpp"
#include "derdim/torsion.hpp"

namespace derdim {

class Complex {
public:
    AlgebraPtr alg;

    Complex() = default;
    // terms[k] is the degree lo+k term; diffs[k-1] is d_{lo+k}: X_{lo+k} -> X_{lo+k-1}
    Complex(AlgebraPtr a, int lo, std::vector<Rep> terms, std::vector<ModuleMap> diffs);

    static Complex zero(AlgebraPtr a);
    static Complex from_module(const Rep& m, int degree = 0);

    bool is_zero_complex() const { return hi_ < lo_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    const Rep& term(int i) const;       // zero rep outside the support
    ModuleMap diff(int i) const;        // d_i, zero map outside
    bool has_term(int i) const { return i >= lo_ && i <= hi_; }

    // drop zero terms at either end of the support
    Complex trimmed() const;

private:
    int lo_ = 0, hi_ = -1;
    std::vector<Rep> terms_;
    std::vector<ModuleMap> diffs_;  // diffs_[k] = d at degree lo_+k+1
    mutable Rep zero_;              // shared zero term

    void validate() const;
};

std::vector<int> homology_dims(const Complex& x, int i);
Rep homology(const Complex& x, int i);
bool is_zero_in_derived(const Complex& x);  // all homology vanishes

Complex shift(const Complex& x, int k);     // (X[k])_i = X_{i-k}, d scaled by (-1)^k
Complex direct_sum(const Complex& x, const Complex& y);
Complex brutal_truncate(const Complex& x, int from);  // zero out degrees < from

enum class DegreewiseFunctor { Rad, Top, TorsionRadical, QT, FStep };

// Apply rad / top / t_V / q_t / (rad . t_V) in every degree, with the maps
// induced on sub- or quotient objects.
Complex apply_degreewise(const Complex& x, DegreewiseFunctor fn, const SimpleSet* v = nullptr);

struct Resolution {
    Complex x;     // what was resolved
    int lo = 0;
    int top = -1;  // highest computed degree
    bool complete = false;  // every term above `top` vanishes

    std::vector<Rep> terms;          // P_lo .. P_top
    std::vector<ModuleMap> diffs;    // delta_j: P_j -> P_{j-1}, for j in (lo, top]
    std::vector<ModuleMap> compare;  // Phi_j: P_j -> X_j

    Rep term(int j) const;
    Complex as_complex() const;
};

// Minimal projective resolution, computed through degree x.hi() + depth (or
// until it terminates). Every differential image lies in the radical of its
// target and the comparison map is a quasi-isomorphism on the computed range.
Resolution proj_resolution(const Complex& x, int depth);

// (sigma_{[n, +inf)} P)[-n] for the given resolution.
Complex derived_syzygy(const Resolution& r, int n);
// Convenience: resolve x deep enough and truncate. `extra` adds headroom
// above degree n so the top of the returned complex is meaningful.
Complex derived_syzygy(const Complex& x, int n, int extra = 6);

}  // namespace derdim
