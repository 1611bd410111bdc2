#include "conic_cubics/intersect.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace conic_cubics {

namespace {

// Univariate polynomials, low-order first, degree <= 4.
using Poly = std::vector<double>;

double poly_eval(const Poly& p, double x) {
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Poly poly_derive(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<double>(i));
    if (d.empty()) d.push_back(0.0);
    return d;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_scale(const Poly& a, double s) {
    Poly r = a;
    for (double& v : r) v *= s;
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void poly_trim(Poly& p, double rel = 1e-12) {
    double m = 0.0;
    for (double v : p) m = std::max(m, std::abs(v));
    while (p.size() > 1 && std::abs(p.back()) <= rel * m) p.pop_back();
}

// One Newton pass on p, keeping the iterate with the smallest residual.
double newton_polish(const Poly& p, const Poly& dp, double x0) {
    double x = x0;
    double best = x0;
    double best_f = std::abs(poly_eval(p, x0));
    for (int it = 0; it < 50; ++it) {
        const double f = poly_eval(p, x);
        const double df = poly_eval(dp, x);
        if (df == 0.0) break;
        const double step = f / df;
        x -= step;
        const double fx = std::abs(poly_eval(p, x));
        if (fx < best_f) {
            best_f = fx;
            best = x;
        }
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return best;
}

// Real roots of a monic depressed cubic z^3 + p z + q.
void depressed_cubic_roots(double p, double q, std::vector<double>& out) {
    const double scale = std::max({std::abs(p) * std::abs(p) * std::abs(p), q * q, 1e-300});
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (std::abs(disc) <= 1e-12 * 27.0 * scale) {
        if (std::abs(p) <= 1e-12 * std::cbrt(scale)) {
            out.insert(out.end(), 3, -std::cbrt(q));
            return;
        }
        // Repeated-root case: (z - d)^2 (z + 2d) with d = -3q / (2p).
        const double d = -3.0 * q / (2.0 * p);
        out.push_back(d);
        out.push_back(d);
        out.push_back(-2.0 * d);
        return;
    }
    if (disc > 0.0) {
        // Three distinct real roots, trigonometric form.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        constexpr double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
        out.push_back(m * std::cos(theta));
        out.push_back(m * std::cos(theta - two_thirds_pi));
        out.push_back(m * std::cos(theta + two_thirds_pi));
        return;
    }
    // One real root, Cardano.
    const double h = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const double u = std::cbrt(-q / 2.0 + h);
    const double v = std::cbrt(-q / 2.0 - h);
    out.push_back(u + v);
}

// Real roots of c2 z^2 + c1 z + c0, tolerating a slightly negative
// discriminant (near-tangency) by emitting the vertex as a double root.
void quadratic_roots(double c2, double c1, double c0, std::vector<double>& out) {
    if (c2 == 0.0) {
        if (c1 != 0.0) out.push_back(-c0 / c1);
        return;
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    const double dscale = std::max({c1 * c1, std::abs(4.0 * c2 * c0), 1e-300});
    if (disc < 0.0) {
        if (disc >= -1e-9 * dscale) {
            const double z = -c1 / (2.0 * c2);
            out.push_back(z);
            out.push_back(z);
        }
        return;
    }
    const double sq = std::sqrt(disc);
    const double t = -(c1 + std::copysign(sq, c1)) / 2.0;
    if (t == 0.0) {
        out.push_back(0.0);
        out.push_back(0.0);
        return;
    }
    out.push_back(t / c2);
    out.push_back(c0 / t);
}

// Real roots (with multiplicity) of a polynomial of degree <= 4 given
// low-order first. Closed forms seed the candidates, univariate Newton
// polishes them, clustering recovers multiplicities.
std::vector<std::pair<double, int>> real_roots_low(Poly p) {
    poly_trim(p);
    const int deg = static_cast<int>(p.size()) - 1;
    std::vector<double> cand;
    if (deg <= 0) return {};
    if (deg == 1) {
        cand.push_back(-p[0] / p[1]);
    } else if (deg == 2) {
        quadratic_roots(p[2], p[1], p[0], cand);
    } else if (deg == 3) {
        const double a = p[2] / p[3], b = p[1] / p[3], c = p[0] / p[3];
        const double s = a / 3.0;
        const double dp = b - a * a / 3.0;
        const double dq = 2.0 * s * s * s - b * s + c;
        std::vector<double> z;
        depressed_cubic_roots(dp, dq, z);
        for (double v : z) cand.push_back(v - s);
    } else {
        // Ferrari: depress, then split into two quadratics through the
        // resolvent cubic t^3 + 2p t^2 + (p^2 - 4r) t - q^2 = 0.
        const double a = p[3] / p[4], b = p[2] / p[4], c = p[1] / p[4], d = p[0] / p[4];
        const double s = a / 4.0;
        const double dp = b - 6.0 * s * s;
        const double dq = 8.0 * s * s * s - 2.0 * b * s + c;
        const double dr = -3.0 * s * s * s * s + b * s * s - c * s + d;
        std::vector<double> z;
        const double qscale = std::max({1.0, std::abs(dp), std::abs(dr)});
        if (std::abs(dq) <= 1e-12 * qscale) {
            // Biquadratic.
            std::vector<double> w;
            quadratic_roots(1.0, dp, dr, w);
            for (double wi : w) {
                if (wi > 0.0) {
                    z.push_back(std::sqrt(wi));
                    z.push_back(-std::sqrt(wi));
                } else if (wi >= -1e-12 * qscale) {
                    z.push_back(0.0);
                    z.push_back(0.0);
                }
            }
        } else {
            std::vector<double> ts;
            Poly resolvent{-dq * dq, dp * dp - 4.0 * dr, 2.0 * dp, 1.0};
            const double ra = resolvent[2], rb = resolvent[1], rc = resolvent[0];
            const double rs = ra / 3.0;
            std::vector<double> tz;
            depressed_cubic_roots(rb - ra * ra / 3.0, 2.0 * rs * rs * rs - rb * rs + rc, tz);
            for (double t : tz) ts.push_back(t - rs);
            double t = *std::max_element(ts.begin(), ts.end());
            t = std::max(t, 0.0);
            Poly rd = poly_derive(resolvent);
            t = std::max(newton_polish(resolvent, rd, t), 0.0);
            const double u = std::sqrt(t);
            if (u > 0.0) {
                const double v = (dp + t - dq / u) / 2.0;
                const double w = (dp + t + dq / u) / 2.0;
                quadratic_roots(1.0, u, v, z);
                quadratic_roots(1.0, -u, w, z);
            }
        }
        for (double v : z) cand.push_back(v - s);
    }

    Poly dpoly = poly_derive(p);
    for (double& x : cand) x = newton_polish(p, dpoly, x);
    std::sort(cand.begin(), cand.end());

    // Cluster into multiplicities, then polish repeated roots on the
    // derivative of order m-1 where plain Newton stalls.
    std::vector<std::pair<double, int>> roots;
    std::size_t i = 0;
    while (i < cand.size()) {
        std::size_t j = i + 1;
        double sum = cand[i];
        while (j < cand.size() &&
               std::abs(cand[j] - cand[j - 1]) <= 1e-7 * std::max(1.0, std::abs(cand[j]))) {
            sum += cand[j];
            ++j;
        }
        const int m = static_cast<int>(j - i);
        double x = sum / m;
        if (m > 1) {
            Poly g = p;
            for (int k = 1; k < m; ++k) g = poly_derive(g);
            x = newton_polish(g, poly_derive(g), x);
        }
        roots.emplace_back(x, m);
        i = j;
    }
    return roots;
}

struct YPoly {
    double alpha;  // coefficient of y^2
    Poly beta;     // coefficient of y, degree <= 1 in x
    Poly gamma;    // y-free part, degree <= 2 in x
};

YPoly y_view(const Conic& c) {
    return YPoly{c.C, Poly{c.E, c.B}, Poly{c.F, c.D, c.A}};
}

void check_not_proportional(const Conic& c1, const Conic& c2) {
    const std::array<double, 6> u{c1.A, c1.B, c1.C, c1.D, c1.E, c1.F};
    const std::array<double, 6> v{c2.A, c2.B, c2.C, c2.D, c2.E, c2.F};
    double mu = 0.0, mv = 0.0;
    for (int i = 0; i < 6; ++i) {
        mu = std::max(mu, std::abs(u[i]));
        mv = std::max(mv, std::abs(v[i]));
    }
    double cross = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            cross = std::max(cross, std::abs(u[i] * v[j] - u[j] * v[i]));
    if (cross <= 1e-12 * mu * mv)
        throw ProportionalConics("conic coefficient vectors are parallel");
}

Poly resultant_in_x(const Conic& c1, const Conic& c2) {
    const YPoly a = y_view(c1);
    const YPoly b = y_view(c2);
    const double s1 = std::max({std::abs(c1.A), std::abs(c1.B), std::abs(c1.C),
                                std::abs(c1.D), std::abs(c1.E), std::abs(c1.F)});
    const double s2 = std::max({std::abs(c2.A), std::abs(c2.B), std::abs(c2.C),
                                std::abs(c2.D), std::abs(c2.E), std::abs(c2.F)});
    const bool q1 = std::abs(a.alpha) > 1e-14 * s1;
    const bool q2 = std::abs(b.alpha) > 1e-14 * s2;
    const bool lin1 = std::abs(c1.B) > 1e-14 * s1 || std::abs(c1.E) > 1e-14 * s1;
    const bool lin2 = std::abs(c2.B) > 1e-14 * s2 || std::abs(c2.E) > 1e-14 * s2;

    if (!q1 && !lin1) return a.gamma; // c1 constrains x alone
    if (!q2 && !lin2) return b.gamma;

    if (q1 || q2) {
        // Resultant of two quadratics in y.
        Poly t1 = poly_add(poly_scale(b.gamma, a.alpha), poly_scale(a.gamma, -b.alpha));
        Poly t2 = poly_add(poly_scale(b.beta, a.alpha), poly_scale(a.beta, -b.alpha));
        Poly t3 = poly_add(poly_mul(a.beta, b.gamma), poly_scale(poly_mul(b.beta, a.gamma), -1.0));
        return poly_add(poly_mul(t1, t1), poly_scale(poly_mul(t2, t3), -1.0));
    }
    // Both linear in y.
    return poly_add(poly_mul(a.beta, b.gamma), poly_scale(poly_mul(b.beta, a.gamma), -1.0));
}

// y-candidates of one conic at fixed x.
void y_candidates(const Conic& c, double x, std::vector<double>& out) {
    const double qa = c.C;
    const double qb = c.B * x + c.E;
    const double qc = (c.A * x + c.D) * x + c.F;
    const double s = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.C),
                               std::abs(c.D), std::abs(c.E), std::abs(c.F)});
    if (std::abs(qa) > 1e-13 * s) {
        quadratic_roots(qa, qb, qc, out);
    } else if (qb != 0.0) {
        out.push_back(-qc / qb);
    }
}

} // namespace

std::vector<double> eliminate_to_quartic(const Conic& c1, const Conic& c2) {
    check_not_proportional(c1, c2);
    Poly r = resultant_in_x(c1, c2);
    poly_trim(r);
    return {r.rbegin(), r.rend()}; // highest first
}

Point2 newton_refine(const Conic& c1, const Conic& c2, Point2 seed) {
    double x = seed.x, y = seed.y;
    const double cs1 = std::max({std::abs(c1.A), std::abs(c1.B), std::abs(c1.C),
                                 std::abs(c1.D), std::abs(c1.E), std::abs(c1.F)});
    const double cs2 = std::max({std::abs(c2.A), std::abs(c2.B), std::abs(c2.C),
                                 std::abs(c2.D), std::abs(c2.E), std::abs(c2.F)});
    for (int it = 0; it < 50; ++it) {
        const double f1 = c1.value_at(x, y);
        const double f2 = c2.value_at(x, y);
        const double span = std::max({1.0, std::abs(x), std::abs(y)});
        if (std::abs(f1) <= 1e-12 * cs1 * span * span &&
            std::abs(f2) <= 1e-12 * cs2 * span * span)
            break;
        const double j11 = c1.dx_at(x, y), j12 = c1.dy_at(x, y);
        const double j21 = c2.dx_at(x, y), j22 = c2.dy_at(x, y);
        const double det = j11 * j22 - j12 * j21;
        const double jn = std::max({std::abs(j11), std::abs(j12), std::abs(j21), std::abs(j22), 1e-300});
        double dx, dy;
        if (std::abs(det) > 1e-10 * jn * jn) {
            dx = (f1 * j22 - f2 * j12) / det;
            dy = (f2 * j11 - f1 * j21) / det;
        } else {
            // Singular Jacobian (tangency): damped Gauss-Newton step.
            const double lam = 1e-8 * jn * jn;
            const double a11 = j11 * j11 + j21 * j21 + lam;
            const double a12 = j11 * j12 + j21 * j22;
            const double a22 = j12 * j12 + j22 * j22 + lam;
            const double g1 = j11 * f1 + j21 * f2;
            const double g2 = j12 * f1 + j22 * f2;
            const double ad = a11 * a22 - a12 * a12;
            if (ad == 0.0) break;
            dx = 0.5 * (g1 * a22 - g2 * a12) / ad;
            dy = 0.5 * (g2 * a11 - g1 * a12) / ad;
        }
        if (!std::isfinite(dx) || !std::isfinite(dy)) break;
        x -= dx;
        y -= dy;
        if (std::abs(dx) + std::abs(dy) <= 1e-16 * std::max(1.0, std::abs(x) + std::abs(y))) break;
    }
    return Point2{x, y, seed.multiplicity};
}

std::vector<Point2> intersect_conics(const Conic& c1, const Conic& c2, double tol) {
    check_not_proportional(c1, c2);
    Poly r = resultant_in_x(c1, c2);
    poly_trim(r);
    const auto xroots = real_roots_low(r);

    std::vector<Point2> points;
    for (const auto& [xr, mult] : xroots) {
        // Back-substitute from the conic with the stronger y^2 term; keep
        // candidates that survive on both curves.
        std::vector<double> ys;
        if (std::abs(c1.C) >= std::abs(c2.C))
            y_candidates(c1, xr, ys);
        else
            y_candidates(c2, xr, ys);
        if (ys.empty()) {
            y_candidates(c1, xr, ys);
            y_candidates(c2, xr, ys);
        }
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end(),
                             [](double u, double v) {
                                 return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(u));
                             }),
                 ys.end());

        std::vector<Point2> valid;
        for (double yc : ys) {
            if (!on_curve(c1, xr, yc, 1e-5) || !on_curve(c2, xr, yc, 1e-5)) continue;
            Point2 pt = newton_refine(c1, c2, Point2{xr, yc, 1});
            if (on_curve(c1, pt.x, pt.y, tol) && on_curve(c2, pt.x, pt.y, tol))
                valid.push_back(pt);
        }
        const int k = static_cast<int>(valid.size());
        for (Point2& pt : valid) {
            pt.multiplicity = std::max(1, mult / k);
            points.push_back(pt);
        }
    }

    // Merge near-coincident points, accumulating multiplicity.
    std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::vector<Point2> merged;
    for (const Point2& p : points) {
        bool absorbed = false;
        for (Point2& q : merged) {
            const double span = std::max({1.0, std::abs(p.x), std::abs(p.y)});
            if (std::abs(p.x - q.x) <= 10.0 * tol * span &&
                std::abs(p.y - q.y) <= 10.0 * tol * span) {
                q.multiplicity += p.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(p);
    }
    return merged;
}

} // namespace conic_cubics
