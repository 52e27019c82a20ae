#ifndef HEINE_ORACLE_IMPL_HPP
#define HEINE_ORACLE_IMPL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace heine::oracle {

namespace detail {

// QUADPACK qk15 abscissae and weights.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    Complex kronrod;
    double err;
    double abs_integral;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex k = wgk[7] * fc;
    Complex g = wg[3] * fc;
    double kabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const Complex f1 = f(c - h * xgk[j]);
        const Complex f2 = f(c + h * xgk[j]);
        k += wgk[j] * (f1 + f2);
        kabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            g += wg[j / 2] * (f1 + f2);
    }
    return {a, b, k * h, std::abs((k - g) * h), kabs * std::abs(h)};
}

} // namespace detail

template <class F>
QuadratureResult integrate(F&& f, double a, double b, double tol) {
    constexpr std::size_t max_panels = std::size_t{1} << 16;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    // Max-heap on err kept in a plain vector so the periodic re-sum can walk it.
    std::vector<detail::Panel> heap;
    Complex total = 0.0;
    double err = 0.0;
    double abs_total = 0.0;
    std::size_t evals = 0;
    auto push = [&](const detail::Panel& p) {
        heap.push_back(p);
        std::push_heap(heap.begin(), heap.end());
        total += p.kronrod;
        err += p.err;
        abs_total += p.abs_integral;
        evals += 15;
    };
    auto pop = [&] {
        std::pop_heap(heap.begin(), heap.end());
        detail::Panel p = heap.back();
        heap.pop_back();
        total -= p.kronrod;
        err -= p.err;
        abs_total -= p.abs_integral;
        return p;
    };

    constexpr int initial = 4;
    for (int i = 0; i < initial; ++i)
        push(detail::gk15(f, a + (b - a) * i / initial, a + (b - a) * (i + 1) / initial));

    for (;;) {
        // Re-sum to keep the running totals free of cancellation drift.
        if (heap.size() % 64 == 0) {
            total = 0.0;
            err = 0.0;
            abs_total = 0.0;
            for (const detail::Panel& p : heap) {
                total += p.kronrod;
                err += p.err;
                abs_total += p.abs_integral;
            }
        }
        if (err <= std::max(tol, 100.0 * eps * abs_total))
            break;
        if (heap.size() >= max_panels)
            throw QuadratureStall("quadrature exceeded 2^16 panels");
        const detail::Panel worst = pop();
        const double mid = 0.5 * (worst.a + worst.b);
        push(detail::gk15(f, worst.a, mid));
        push(detail::gk15(f, mid, worst.b));
    }

    Complex sum = 0.0;
    double e = 0.0;
    for (const detail::Panel& p : heap) {
        sum += p.kronrod;
        e += p.err;
    }
    return {sum, e, evals};
}

} // namespace heine::oracle

#endif
