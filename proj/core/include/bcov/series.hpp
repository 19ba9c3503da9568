#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bcov/errors.hpp"
#include "bcov/model.hpp"

namespace bcov {

// Laurent polynomial in t with Scalar coefficients (pairing values).
struct LaurentScalar {
    std::map<int, Scalar> c;
    void add(int k, const Scalar& v) {
        if (v.is_zero()) return;
        auto it = c.find(k);
        if (it == c.end())
            c.emplace(k, v);
        else {
            it->second += v;
            if (it->second.is_zero()) c.erase(it);
        }
    }
    Scalar coeff(int k) const {
        auto it = c.find(k);
        return it == c.end() ? Scalar() : it->second;
    }
    bool is_zero() const { return c.empty(); }
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.c == b.c; }
};

// Laurent polynomial in t with model-element coefficients; finite window.
struct TLaurent {
    std::map<int, GradedElement> c;

    bool is_zero() const { return c.empty(); }
    void add(int k, const GradedElement& e) {
        if (e.is_zero()) return;
        auto it = c.find(k);
        if (it == c.end())
            c.emplace(k, e);
        else {
            it->second += e;
            if (it->second.is_zero()) c.erase(it);
        }
    }
    TLaurent& operator+=(const TLaurent& o) {
        for (const auto& [k, e] : o.c) add(k, e);
        return *this;
    }
    TLaurent& operator-=(const TLaurent& o) {
        for (const auto& [k, e] : o.c) add(k, e.scaled(Scalar(-1)));
        return *this;
    }
    TLaurent scaled(const Scalar& s) const {
        TLaurent out;
        if (s.is_zero()) return out;
        for (const auto& [k, e] : c) out.c.emplace(k, e.scaled(s));
        return out;
    }
    TLaurent shifted(int dk) const {
        TLaurent out;
        for (const auto& [k, e] : c) out.c.emplace(k + dk, e);
        return out;
    }
    int k_min() const { return c.empty() ? 0 : c.begin()->first; }
    int k_max() const { return c.empty() ? 0 : c.rbegin()->first; }
    friend bool operator==(const TLaurent& a, const TLaurent& b) { return a.c == b.c; }
};

TLaurent tl_of(const GradedElement& e, int k = 0);
TLaurent tl_multiply(const DGBVModel& m, const TLaurent& a, const TLaurent& b);
TLaurent tl_apply(const DGBVModel& m, const Mat& op, const TLaurent& a);
// <f(t) a, g(t) b> = f(t) g(-t) Tr(ab), extended bilinearly.
LaurentScalar loop_pairing(const DGBVModel& m, const TLaurent& a, const TLaurent& b);
Scalar t_residue(const LaurentScalar& l);
Scalar symplectic_form(const DGBVModel& m, const TLaurent& a, const TLaurent& b);

// ---------------------------------------------------------------------------
// Coordinates and supercommutative series
// ---------------------------------------------------------------------------

// A coordinate tau^{a,k}: dual to frame element a at t-power k. Parity is the
// parity of the frame element (the degree-2 shift does not change it); odd
// coordinates square to zero.
struct Coordinate {
    int frame = 0;
    int tpow = 0;
    int parity = 0;
    std::string name;
};

// The coordinate universe over a frame of model elements (the full basis for
// action functionals, the harmonic basis for potentials). Canonical coordinate
// order is (frame index, t-power) lexicographic; monomials are kept sorted in
// this order with Koszul signs normalized at insertion.
class CoordUniverse {
public:
    CoordUniverse() = default;
    CoordUniverse(const DGBVModel& model, std::vector<GradedElement> frame,
                  std::vector<std::string> frame_names, int t_max);

    const DGBVModel& model() const { return *model_; }
    int t_max() const { return t_max_; }
    int coord_count() const { return static_cast<int>(coords_.size()); }
    const Coordinate& coord(int id) const { return coords_[id]; }
    int coord_id(int frame, int tpow) const;
    int frame_count() const { return static_cast<int>(frame_.size()); }
    const GradedElement& frame_element(int a) const { return frame_[a]; }
    const std::string& frame_name(int a) const { return frame_names_[a]; }
    int frame_parity(int a) const { return frame_parity_[a]; }
    // Field element E_c = frame_a t^k for the coordinate c.
    TLaurent field_element(int c) const;
    bool same(const CoordUniverse& o) const { return this == &o; }

private:
    const DGBVModel* model_ = nullptr;
    std::vector<GradedElement> frame_;
    std::vector<std::string> frame_names_;
    std::vector<int> frame_parity_;
    int t_max_ = 0;
    std::vector<Coordinate> coords_;
};

using Monomial = std::vector<uint16_t>;  // sorted coordinate ids

std::string monomial_name(const CoordUniverse& u, const Monomial& m);
int monomial_parity(const CoordUniverse& u, const Monomial& m);

// Merge two sorted monomials; returns the Koszul sign (+1/-1) or 0 when an odd
// coordinate repeats. Fills `out` with the sorted union.
int merge_monomials(const CoordUniverse& u, const Monomial& a, const Monomial& b, Monomial& out);

// Truncated supercommutative series with values in V. V must provide
// is_zero(), operator+=, and scaled(Scalar). Terms of order > cap are dropped.
template <class V>
class Series {
public:
    Series() = default;
    Series(const CoordUniverse& u, int order_cap) : u_(&u), cap_(order_cap) {}

    const CoordUniverse& universe() const { return *u_; }
    int order_cap() const { return cap_; }
    const std::map<Monomial, V>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Monomial& m, const V& v) {
        if (static_cast<int>(m.size()) > cap_ || v.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Series& operator+=(const Series& o) {
        check(o);
        for (const auto& [m, v] : o.t_) add_term(m, v);
        return *this;
    }
    Series& operator-=(const Series& o) {
        check(o);
        for (const auto& [m, v] : o.t_) add_term(m, v.scaled(Scalar(-1)));
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series scaled(const Scalar& s) const {
        Series out(*u_, cap_);
        if (s.is_zero()) return out;
        for (const auto& [m, v] : t_) out.t_.emplace(m, v.scaled(s));
        return out;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.t_ == b.t_; }

    // Part of homogeneous tau-order n.
    Series order_part(int n) const {
        Series out(*u_, cap_);
        for (const auto& [m, v] : t_)
            if (static_cast<int>(m.size()) == n) out.t_.emplace(m, v);
        return out;
    }
    Series truncated(int new_cap) const {
        Series out(*u_, new_cap);
        for (const auto& [m, v] : t_)
            if (static_cast<int>(m.size()) <= new_cap) out.t_.emplace(m, v);
        return out;
    }
    int max_order() const {
        int n = 0;
        for (const auto& [m, v] : t_) n = std::max<int>(n, static_cast<int>(m.size()));
        return n;
    }

    // Left graded derivative with respect to coordinate c.
    Series derivative(int c) const {
        Series out(*u_, cap_);
        const int cp = u_->coord(c).parity;
        for (const auto& [m, v] : t_) {
            int odd_before = 0;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == c) {
                    Monomial rest;
                    rest.reserve(m.size() - 1);
                    for (size_t j = 0; j < m.size(); ++j)
                        if (j != i) rest.push_back(m[j]);
                    bool neg = (cp & odd_before & 1) != 0;
                    out.add_term(rest, neg ? v.scaled(Scalar(-1)) : v);
                }
                odd_before += u_->coord(m[i]).parity;
            }
        }
        return out;
    }

    // tau^c * this (coordinate multiplied from the left).
    Series coord_multiplied(int c) const {
        Series out(*u_, cap_);
        Monomial single{static_cast<uint16_t>(c)};
        for (const auto& [m, v] : t_) {
            Monomial merged;
            int sg = merge_monomials(*u_, single, m, merged);
            if (sg == 0) continue;
            out.add_term(merged, sg > 0 ? v : v.scaled(Scalar(-1)));
        }
        return out;
    }

private:
    void check(const Series& o) const {
        if (u_ != o.u_ || cap_ != o.cap_)
            throw TruncationMismatch("series universes or truncation orders differ");
    }
    const CoordUniverse* u_ = nullptr;
    int cap_ = 0;
    std::map<Monomial, V> t_;
};

using SuperSeries = Series<Scalar>;
using ElementSeries = Series<GradedElement>;
using TLaurentSeries = Series<TLaurent>;

// Graded-commutative product of scalar series (Koszul signs from monomials).
SuperSeries super_mul(const SuperSeries& a, const SuperSeries& b);

// Product of element-valued series: (m1 (x) a1)(m2 (x) a2) =
// (-1)^{|a1||m2|} (m1 m2) (x) (a1 a2) with |a1| = |m1| for admissible series.
ElementSeries mul_elements(const ElementSeries& a, const ElementSeries& b);
TLaurentSeries mul_tlaurent(const TLaurentSeries& a, const TLaurentSeries& b);

// Trace pairing of two element-valued series into a scalar series.
SuperSeries pair_elements(const ElementSeries& a, const ElementSeries& b);

// Componentwise operator application; op_parity = parity of the degree shift.
ElementSeries apply_op(const Mat& op, int op_parity, const ElementSeries& s);
TLaurentSeries apply_op(const Mat& op, int op_parity, const TLaurentSeries& s);

ElementSeries tl_coefficient(const TLaurentSeries& s, int tpow);
TLaurentSeries tl_from_element_series(const ElementSeries& s, int tpow);
TLaurentSeries tl_shifted(const TLaurentSeries& s, int dk);

// The generic even field mu = sum_c tau^c E_c over the universe.
TLaurentSeries generic_field(const CoordUniverse& u, int order_cap);

// Euler reconstruction: F with dF/dtau^c = g[c] and no constant term. Checks
// graded symmetry of the mixed second derivatives (NonIntegrableGradient).
SuperSeries integrate_gradient(const CoordUniverse& u, int order_cap,
                               const std::vector<SuperSeries>& g);

std::string series_to_string(const SuperSeries& s);

}  // namespace bcov
