#pragma once

// Adaptive 1D quadrature on a Gauss 7 / Kronrod 15 rule with interval
// bisection. The integrands in this project are smooth on bounded intervals,
// so plain bisection to an absolute tolerance is enough.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cdd {

namespace detail {

// Nodes on [0,1] (symmetric), Gauss-7 weights, Kronrod-15 weights.
inline constexpr double kGk15Nodes[8] = {
    0.000000000000000, 0.405845151377397, 0.741531185599394, 0.949107912342759,
    0.207784955007898, 0.586087235467691, 0.864864423359769, 0.991455371120813};
inline constexpr double kGauss7Weights[8] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870,
    0.0, 0.0, 0.0, 0.0};
inline constexpr double kKronrod15Weights[8] = {
    0.209482141084728, 0.190350578064785, 0.140653259715525, 0.063092092629979,
    0.204432940075298, 0.169004726639267, 0.104790010322250, 0.022935322010529};

template <class F>
double gk15(const F& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = f(c);
    double gauss = kGauss7Weights[0] * f0;
    double kronrod = kKronrod15Weights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kGk15Nodes[i];
        const double fi = f(c + dx) + f(c - dx);
        gauss += kGauss7Weights[i] * fi;
        kronrod += kKronrod15Weights[i] * fi;
    }
    gauss *= h;
    kronrod *= h;
    err = std::fabs(kronrod - gauss);
    return kronrod;
}

}  // namespace detail

// Integrates f over [a,b] to absolute tolerance abs_tol.
template <class F>
double integrate(const F& f, double a, double b, double abs_tol,
                 int max_intervals = 4000) {
    struct Segment {
        double a, b, value, error;
    };
    double err0;
    const double v0 = detail::gk15(f, a, b, err0);
    std::vector<Segment> active{{a, b, v0, err0}};
    double total_err = err0;
    int used = 1;
    while (total_err > abs_tol) {
        // split the segment with the largest error estimate
        std::size_t worst = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (active[i].error > active[worst].error) worst = i;
        if (used >= max_intervals || active[worst].error == 0.0)
            throw std::runtime_error("integrate: tolerance not reached");
        const Segment seg = active[worst];
        const double mid = 0.5 * (seg.a + seg.b);
        double el, er;
        const double vl = detail::gk15(f, seg.a, mid, el);
        const double vr = detail::gk15(f, mid, seg.b, er);
        total_err += el + er - seg.error;
        active[worst] = {seg.a, mid, vl, el};
        active.push_back({mid, seg.b, vr, er});
        ++used;
    }
    double sum = 0.0;
    for (const auto& s : active) sum += s.value;
    return sum;
}

}  // namespace cdd
