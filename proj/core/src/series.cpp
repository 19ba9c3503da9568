#include "bcov/series.hpp"

#include <sstream>

namespace bcov {

TLaurent tl_of(const GradedElement& e, int k) {
    TLaurent out;
    out.add(k, e);
    return out;
}

TLaurent tl_multiply(const DGBVModel& m, const TLaurent& a, const TLaurent& b) {
    TLaurent out;
    for (const auto& [j, x] : a.c)
        for (const auto& [k, y] : b.c) out.add(j + k, m.multiply(x, y));
    return out;
}

TLaurent tl_apply(const DGBVModel& m, const Mat& op, const TLaurent& a) {
    TLaurent out;
    for (const auto& [k, x] : a.c) out.add(k, m.apply(op, x));
    return out;
}

LaurentScalar loop_pairing(const DGBVModel& m, const TLaurent& a, const TLaurent& b) {
    LaurentScalar out;
    for (const auto& [j, x] : a.c)
        for (const auto& [k, y] : b.c) {
            Scalar tr = m.trace(m.multiply(x, y));
            if (k % 2 != 0) tr = -tr;  // g(t) -> g(-t)
            out.add(j + k, tr);
        }
    return out;
}

Scalar t_residue(const LaurentScalar& l) { return l.coeff(-1); }

Scalar symplectic_form(const DGBVModel& m, const TLaurent& a, const TLaurent& b) {
    return t_residue(loop_pairing(m, a, b));
}

CoordUniverse::CoordUniverse(const DGBVModel& model, std::vector<GradedElement> frame,
                             std::vector<std::string> frame_names, int t_max)
    : model_(&model), frame_(std::move(frame)), frame_names_(std::move(frame_names)),
      t_max_(t_max) {
    frame_parity_.reserve(frame_.size());
    for (const auto& e : frame_) {
        int p = model.parity_of(e);
        if (p < 0) throw ParamError("coordinate frame element of mixed parity");
        frame_parity_.push_back(p);
    }
    for (int a = 0; a < static_cast<int>(frame_.size()); ++a)
        for (int k = 0; k <= t_max_; ++k) {
            Coordinate c;
            c.frame = a;
            c.tpow = k;
            c.parity = frame_parity_[a];
            c.name = frame_names_[a] + (k > 0 ? "@t" + std::to_string(k) : "");
            coords_.push_back(c);
        }
    if (coords_.size() > 60000) throw ParamError("coordinate universe too large");
}

int CoordUniverse::coord_id(int frame, int tpow) const {
    if (frame < 0 || frame >= frame_count() || tpow < 0 || tpow > t_max_)
        throw ParamError("coordinate out of range");
    return frame * (t_max_ + 1) + tpow;
}

TLaurent CoordUniverse::field_element(int c) const {
    const Coordinate& co = coords_[c];
    return tl_of(frame_[co.frame], co.tpow);
}

std::string monomial_name(const CoordUniverse& u, const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out += "*";
        out += u.coord(m[i]).name;
    }
    return out;
}

int monomial_parity(const CoordUniverse& u, const Monomial& m) {
    int p = 0;
    for (auto c : m) p ^= (u.coord(c).parity & 1);
    return p;
}

int merge_monomials(const CoordUniverse& u, const Monomial& a, const Monomial& b, Monomial& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    // number of odd coordinates remaining in a[i:]
    int odd_rest = 0;
    for (auto c : a) odd_rest += u.coord(c).parity;
    int sign = 1;
    while (i < a.size() || j < b.size()) {
        bool take_a;
        if (i >= a.size())
            take_a = false;
        else if (j >= b.size())
            take_a = true;
        else
            take_a = a[i] <= b[j];
        if (take_a) {
            out.push_back(a[i]);
            odd_rest -= u.coord(a[i]).parity;
            ++i;
        } else {
            int p = u.coord(b[j]).parity;
            if (p && (odd_rest & 1)) sign = -sign;
            out.push_back(b[j]);
            ++j;
        }
    }
    // odd squares vanish
    for (size_t k = 1; k < out.size(); ++k)
        if (out[k] == out[k - 1] && u.coord(out[k]).parity) return 0;
    return sign;
}

namespace {

template <class V, class Mult>
Series<V> generic_mul(const Series<V>& a, const Series<V>& b, Mult&& mult, bool cross_sign) {
    if (!a.universe().same(b.universe()) || a.order_cap() != b.order_cap())
        throw TruncationMismatch("product of series over different universes/truncations");
    const CoordUniverse& u = a.universe();
    Series<V> out(u, a.order_cap());
    Monomial merged;
    for (const auto& [m1, v1] : a.terms()) {
        for (const auto& [m2, v2] : b.terms()) {
            if (static_cast<int>(m1.size() + m2.size()) > a.order_cap()) continue;
            int sg = merge_monomials(u, m1, m2, merged);
            if (sg == 0) continue;
            if (cross_sign && (monomial_parity(u, m1) & monomial_parity(u, m2) & 1)) sg = -sg;
            V prod = mult(v1, v2);
            out.add_term(merged, sg > 0 ? prod : prod.scaled(Scalar(-1)));
        }
    }
    return out;
}

struct ScalarV {
    // adapter so Scalar satisfies the Series value interface
};

}  // namespace

SuperSeries super_mul(const SuperSeries& a, const SuperSeries& b) {
    return generic_mul(a, b, [](const Scalar& x, const Scalar& y) { return x * y; }, false);
}

ElementSeries mul_elements(const ElementSeries& a, const ElementSeries& b) {
    const DGBVModel& m = a.universe().model();
    return generic_mul(
        a, b, [&m](const GradedElement& x, const GradedElement& y) { return m.multiply(x, y); },
        true);
}

TLaurentSeries mul_tlaurent(const TLaurentSeries& a, const TLaurentSeries& b) {
    const DGBVModel& m = a.universe().model();
    return generic_mul(
        a, b, [&m](const TLaurent& x, const TLaurent& y) { return tl_multiply(m, x, y); }, true);
}

SuperSeries pair_elements(const ElementSeries& a, const ElementSeries& b) {
    if (!a.universe().same(b.universe()) || a.order_cap() != b.order_cap())
        throw TruncationMismatch("pairing of series over different universes");
    const CoordUniverse& u = a.universe();
    const DGBVModel& model = u.model();
    SuperSeries out(u, a.order_cap());
    Monomial merged;
    for (const auto& [m1, v1] : a.terms())
        for (const auto& [m2, v2] : b.terms()) {
            if (static_cast<int>(m1.size() + m2.size()) > a.order_cap()) continue;
            int sg = merge_monomials(u, m1, m2, merged);
            if (sg == 0) continue;
            if (monomial_parity(u, m1) & monomial_parity(u, m2) & 1) sg = -sg;
            Scalar tr = model.trace(model.multiply(v1, v2));
            if (tr.is_zero()) continue;
            out.add_term(merged, sg > 0 ? tr : -tr);
        }
    return out;
}

ElementSeries apply_op(const Mat& op, int op_parity, const ElementSeries& s) {
    const CoordUniverse& u = s.universe();
    const DGBVModel& m = u.model();
    ElementSeries out(u, s.order_cap());
    for (const auto& [mono, v] : s.terms()) {
        GradedElement w = m.apply(op, v);
        if (w.is_zero()) continue;
        if (op_parity && (monomial_parity(u, mono) & 1)) w = w.scaled(Scalar(-1));
        out.add_term(mono, w);
    }
    return out;
}

TLaurentSeries apply_op(const Mat& op, int op_parity, const TLaurentSeries& s) {
    const CoordUniverse& u = s.universe();
    const DGBVModel& m = u.model();
    TLaurentSeries out(u, s.order_cap());
    for (const auto& [mono, v] : s.terms()) {
        TLaurent w = tl_apply(m, op, v);
        if (w.is_zero()) continue;
        if (op_parity && (monomial_parity(u, mono) & 1)) w = w.scaled(Scalar(-1));
        out.add_term(mono, w);
    }
    return out;
}

ElementSeries tl_coefficient(const TLaurentSeries& s, int tpow) {
    ElementSeries out(s.universe(), s.order_cap());
    for (const auto& [m, v] : s.terms()) {
        auto it = v.c.find(tpow);
        if (it != v.c.end()) out.add_term(m, it->second);
    }
    return out;
}

TLaurentSeries tl_from_element_series(const ElementSeries& s, int tpow) {
    TLaurentSeries out(s.universe(), s.order_cap());
    for (const auto& [m, v] : s.terms()) out.add_term(m, tl_of(v, tpow));
    return out;
}

TLaurentSeries tl_shifted(const TLaurentSeries& s, int dk) {
    TLaurentSeries out(s.universe(), s.order_cap());
    for (const auto& [m, v] : s.terms()) out.add_term(m, v.shifted(dk));
    return out;
}

TLaurentSeries generic_field(const CoordUniverse& u, int order_cap) {
    TLaurentSeries out(u, order_cap);
    for (int c = 0; c < u.coord_count(); ++c)
        out.add_term(Monomial{static_cast<uint16_t>(c)}, u.field_element(c));
    return out;
}

SuperSeries integrate_gradient(const CoordUniverse& u, int order_cap,
                               const std::vector<SuperSeries>& g) {
    // integrability: d_c' g_c = (-1)^{|c||c'|} d_c g_c'
    for (int c = 0; c < u.coord_count(); ++c)
        for (int c2 = c; c2 < u.coord_count(); ++c2) {
            SuperSeries lhs = g[c].derivative(c2);
            SuperSeries rhs = g[c2].derivative(c);
            if (u.coord(c).parity & u.coord(c2).parity & 1) rhs = rhs.scaled(Scalar(-1));
            if (!(lhs == rhs))
                throw NonIntegrableGradient("second derivatives differ at (" + u.coord(c).name +
                                            "," + u.coord(c2).name + ")");
        }
    SuperSeries f(u, order_cap);
    for (int c = 0; c < u.coord_count(); ++c) {
        SuperSeries t = g[c].coord_multiplied(c);
        for (const auto& [m, v] : t.terms()) {
            int n = static_cast<int>(m.size());
            if (n == 0) continue;
            f.add_term(m, v / Scalar(n));
        }
    }
    return f;
}

std::string series_to_string(const SuperSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : s.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v) << ")*" << monomial_name(s.universe(), m);
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace bcov
