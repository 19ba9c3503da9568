#include "bcov/action.hpp"

#include "bcov/errors.hpp"

namespace bcov {

Rational multinomial(int total, const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) return Rational(0);
        sum += p;
    }
    if (sum != total || total < 0) return Rational(0);
    Rational out(1);
    // total! / prod parts!
    boost::multiprecision::cpp_int num(1);
    for (int i = 2; i <= total; ++i) num *= i;
    boost::multiprecision::cpp_int den(1);
    for (int p : parts)
        for (int i = 2; i <= p; ++i) den *= i;
    return Rational(num, den);
}

Scalar vertex(const DGBVModel& m, const std::vector<std::pair<GradedElement, int>>& legs) {
    const int n = static_cast<int>(legs.size());
    if (n < 3) throw TooFewLegs("vertex needs at least 3 legs, got " + std::to_string(n));
    std::vector<int> ks;
    ks.reserve(n);
    for (const auto& [e, k] : legs) ks.push_back(k);
    Rational mult = multinomial(n - 3, ks);
    if (mult == 0) return Scalar();
    GradedElement prod = legs[0].first;
    for (int i = 1; i < n; ++i) prod = m.multiply(prod, legs[i].first);
    return Scalar(mult) * m.trace(prod);
}

CoordUniverse full_universe(const DGBVModel& m, int k_max) {
    std::vector<GradedElement> frame;
    std::vector<std::string> names;
    for (int i = 0; i < m.size(); ++i) {
        GradedElement e;
        e.add(i, Scalar(1));
        frame.push_back(e);
        names.push_back(m.basis()[i].id);
    }
    return CoordUniverse(m, std::move(frame), std::move(names), k_max);
}

namespace {

Rational factorial(int n) {
    boost::multiprecision::cpp_int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// The field with each t^k coordinate scaled by 1/k!, so the psi-class
// multinomial becomes plain t-degree selection on powers.
TLaurentSeries psi_scaled_field(const TLaurentSeries& mu) {
    TLaurentSeries out(mu.universe(), mu.order_cap());
    for (const auto& [m, v] : mu.terms()) {
        TLaurent w;
        for (const auto& [k, e] : v.c) {
            if (k < 0) throw ParamError("action field has negative t-powers");
            w.add(k, e.scaled(Scalar(Rational(1) / factorial(k))));
        }
        out.add_term(m, w);
    }
    return out;
}

}  // namespace

ActionFunctional build_action(const DGBVModel& m, const CoordUniverse& u, int n_max) {
    if (n_max < 3) throw ParamError("n_max must be >= 3");
    ActionFunctional S;
    S.universe = &u;
    S.n_max = n_max;
    S.k_max = u.t_max();
    S.series = SuperSeries(u, n_max);

    TLaurentSeries nu = psi_scaled_field(generic_field(u, n_max));
    TLaurentSeries pow = nu;
    for (int n = 2; n <= n_max; ++n) {
        pow = mul_tlaurent(pow, nu);
        if (n < 3) continue;
        // S_n = (n-3)!/n! * Tr([nu^n]_{t^{n-3}})
        ElementSeries coeff = tl_coefficient(pow, n - 3);
        SuperSeries tn = trace_series(coeff);
        S.series += tn.scaled(Scalar(factorial(n - 3) / factorial(n)));
    }
    return S;
}

SuperSeries trace_series(const ElementSeries& s) {
    SuperSeries out(s.universe(), s.order_cap());
    const DGBVModel& m = s.universe().model();
    for (const auto& [mono, v] : s.terms()) {
        Scalar tr = m.trace(v);
        if (!tr.is_zero()) out.add_term(mono, tr);
    }
    return out;
}

TLaurentSeries action_gradient(const ActionFunctional& S, const TLaurentSeries& mu) {
    const CoordUniverse& u = mu.universe();
    const int cap = mu.order_cap();
    TLaurentSeries nu = psi_scaled_field(mu);
    TLaurentSeries grad(u, cap);
    TLaurentSeries pow = nu;  // nu^{n-1} for n = 2 start
    for (int n = 3; n <= S.n_max; ++n) {
        if (n > 3) pow = mul_tlaurent(pow, nu);
        // contribution of W_n: t^j slot gets (n-3)!/((n-1)! j!) [nu^{n-1}]_{t^{n-3-j}}
        for (int j = 0; j <= std::min(S.k_max, n - 3); ++j) {
            ElementSeries part = tl_coefficient(pow, n - 3 - j);
            if (part.is_zero()) continue;
            Scalar c(factorial(n - 3) / (factorial(n - 1) * factorial(j)));
            for (const auto& [mono, e] : part.terms()) {
                GradedElement w = e.scaled(c);
                if (w.is_zero()) continue;
                TLaurent tv;
                tv.add(j, w);
                grad.add_term(mono, tv);
            }
        }
    }
    return grad;
}

SuperSeries q_dual(const DGBVModel& m, const SuperSeries& F) {
    const CoordUniverse& u = F.universe();
    // lambda^{c'} = sum_c (-1)^{|c|} N_{c c'} tau^c with Q E_c = sum N_{c c'} E_{c'}
    SuperSeries out(u, F.order_cap());
    for (int c = 0; c < u.coord_count(); ++c) {
        const Coordinate& co = u.coord(c);
        // Q(frame_a t^k) = d(frame_a) t^k + del(frame_a) t^{k+1}
        GradedElement de = m.apply(m.d_op(), u.frame_element(co.frame));
        GradedElement dele = m.apply(m.del_op(), u.frame_element(co.frame));
        auto accumulate = [&](const GradedElement& img, int tpow) {
            if (img.is_zero() || tpow > u.t_max()) return;
            // expand img in the frame; for the full universe frame = basis
            for (const auto& [bidx, coeff] : img.c) {
                int cprime = u.coord_id(bidx, tpow);
                SuperSeries dF = F.derivative(cprime);
                if (dF.is_zero()) continue;
                SuperSeries term = dF.coord_multiplied(c).scaled(
                    (co.parity & 1) ? -coeff : coeff);
                out += term;
            }
        };
        accumulate(de, co.tpow);
        accumulate(dele, co.tpow + 1);
    }
    return out;
}

SuperSeries poisson_bracket(const DGBVModel& m, const SuperSeries& F, const SuperSeries& H) {
    const CoordUniverse& u = F.universe();
    if (!u.same(H.universe())) throw ModelMismatch("bracket arguments over different universes");
    auto gi = m.trace_gram().inverse();
    if (!gi) throw ModelMismatch("trace Gram not invertible");
    // K = (del (x) 1) delta with delta^{cb} = (g^{-1})_{bc}
    Mat K = m.del_op() * gi->transpose();

    // split F by term parity for the (-1)^{|b||F|} factor
    SuperSeries F0(u, F.order_cap()), F1(u, F.order_cap());
    for (const auto& [mono, v] : F.terms())
        (monomial_parity(u, mono) == 0 ? F0 : F1).add_term(mono, v);

    SuperSeries out(u, F.order_cap());
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b) {
            if (K.at(a, b).is_zero()) continue;
            int ca = u.coord_id(a, 0), cb = u.coord_id(b, 0);
            SuperSeries dHb = H.derivative(cb);
            if (dHb.is_zero()) continue;
            SuperSeries dF0 = F0.derivative(ca);
            if (!dF0.is_zero()) out += super_mul(dF0, dHb).scaled(K.at(a, b));
            SuperSeries dF1 = F1.derivative(ca);
            if (!dF1.is_zero()) {
                Scalar c = K.at(a, b);
                if (m.parity(b) & 1) c = -c;
                out += super_mul(dF1, dHb).scaled(c);
            }
        }
    return out;
}

SuperSeries cme_residual(const DGBVModel& m, const ActionFunctional& S, int order) {
    if (order > S.n_max) throw ParamError("cme order exceeds the action's n_max");
    SuperSeries s = S.series.truncated(order);
    SuperSeries qs = q_dual(m, s).truncated(order);
    SuperSeries br = poisson_bracket(m, s, s).truncated(order);
    return (qs + br.scaled(Scalar(Rational(1, 2)))).truncated(order);
}

}  // namespace bcov
