#include "cotm/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "cotm/constants.hpp"
#include "cotm/exact.hpp"

namespace cotm::quad {

namespace {

constexpr int kNodeGuardDigits = 10;

// Node at t > 0 (or t = 0 at level zero) on the canonical interval (-1, 1).
struct Node {
    Real comp;    // 1 - u, u = tanh(pi/2 sinh t)
    Real weight;  // (pi/2) cosh t (1 - u^2), to be multiplied by the step
    bool center;
};

using Level = std::vector<Node>;

class NodeCache {
public:
    std::shared_ptr<const Level> level(Precision p, int lvl) {
        std::lock_guard lock(mu_);
        auto& levels = tables_[p.digits()];
        while (static_cast<int>(levels.size()) <= lvl)
            levels.push_back(std::make_shared<const Level>(build(p, static_cast<int>(levels.size()))));
        return levels[static_cast<std::size_t>(lvl)];
    }

    std::size_t count(Precision p) {
        std::lock_guard lock(mu_);
        auto it = tables_.find(p.digits());
        return it == tables_.end() ? 0 : it->second.size();
    }

private:
    // Nodes at precision p (already widened by the guard digits). The range
    // of t stops once 1 - u drops below 10^{-2 digits}, so even integrands
    // growing like (1 - u)^{-1/2} contribute below the working precision.
    static Level build(Precision p, int lvl) {
        const Real half_pi = hp::pi(p) / 2;
        const double s_max = std::log(10.0) * p.digits();
        const double t_max = std::asinh(s_max / (std::acos(-1.0) / 2));

        Level nodes;
        const long denom = 1L << lvl;
        const long step = lvl == 0 ? 1 : 2;
        for (long k = lvl == 0 ? 0 : 1;; k += step) {
            const double t_approx = static_cast<double>(k) / static_cast<double>(denom);
            if (t_approx > t_max) break;
            Real t = Real(k, p) / denom;
            Real s = half_pi * sinh(t);
            Real e2s = exp(2 * s);
            Real comp = 2 / (e2s + 1);
            Real weight = half_pi * cosh(t) * comp * (2 - comp);
            nodes.push_back(Node{std::move(comp), std::move(weight), k == 0});
        }
        return nodes;
    }

    std::mutex mu_;
    std::map<int, std::vector<std::shared_ptr<const Level>>> tables_;
};

NodeCache& node_cache() {
    static NodeCache cache;
    return cache;
}

struct Sample {
    Real value;
    Real error;
};

template <typename F>
QuadratureResult tanh_sinh(F&& f, const Real& a_in, const Real& b_in, Precision p, const Real& tol,
                           const QuadratureOptions& opts) {
    if (!(a_in < b_in)) throw std::invalid_argument("integrate: requires a < b");
    const Precision np = p.widened(kNodeGuardDigits);
    const Real a = hp::round_to(a_in, np);
    const Real b = hp::round_to(b_in, np);
    const Real width = b - a;
    const Real half = width / 2;

    Real sum(0, np);
    Real err_sum(0, np);
    QuadratureResult result;
    Real previous(0, np);

    for (int lvl = 0; lvl <= opts.level_cap; ++lvl) {
        const auto nodes = node_cache().level(np, lvl);
        for (const Node& node : *nodes) {
            if (node.center) {
                Abscissa mid{a + half, half, half};
                Sample s = f(mid);
                sum += node.weight * s.value;
                err_sum += node.weight * s.error;
                continue;
            }
            const Real near = half * node.comp;
            const Real far = width - near;
            Abscissa right{b - near, far, near};
            Abscissa left{a + near, near, far};
            Sample sr = f(right);
            Sample sl = f(left);
            sum += node.weight * (sr.value + sl.value);
            err_sum += node.weight * (sr.error + sl.error);
        }
        const Real h = ldexp(Real(1, np), -lvl);
        Real estimate = half * h * sum;
        result.levels = lvl;
        if (lvl > 0) {
            Real delta = abs(estimate - previous);
            result.deltas.push_back(delta);
            result.error = delta + half * h * err_sum;
            result.value = estimate;
            if (lvl >= opts.min_level && result.error <= tol) {
                result.converged = true;
                return result;
            }
        } else {
            result.value = estimate;
        }
        previous = std::move(estimate);
    }
    return result;
}

QuadratureResult require(QuadratureResult r) {
    if (!r.converged) throw NonConvergence(std::move(r));
    return r;
}

}  // namespace

NonConvergence::NonConvergence(QuadratureResult best)
    : std::runtime_error("tanh-sinh quadrature did not converge: best " + best.value.sci(12) +
                         ", gap " + best.error.sci(3) + " after level " +
                         std::to_string(best.levels)),
      best_(std::move(best)) {}

QuadratureResult try_integrate_1d(const Integrand1D& f, const Real& a, const Real& b, Precision p,
                                  const Real& tol, QuadratureOptions opts) {
    const Precision np = p.widened(kNodeGuardDigits);
    const Real zero(0, np);
    return tanh_sinh([&](const Abscissa& x) { return Sample{f(x), zero}; }, a, b, p, tol, opts);
}

QuadratureResult integrate_1d(const Integrand1D& f, const Real& a, const Real& b, Precision p,
                              const Real& tol, QuadratureOptions opts) {
    return require(try_integrate_1d(f, a, b, p, tol, opts));
}

QuadratureResult integrate_2d_iterated(const Integrand2D& f, Precision p, const Real& tol,
                                       QuadratureOptions opts) {
    const Real zero(0, p);
    const Real one(1, p);
    const Real inner_tol = tol / 50;
    auto outer = [&](const Abscissa& x1) {
        QuadratureResult inner = try_integrate_1d(
            [&](const Abscissa& x0) { return f(x0, x1); }, zero, one, p, inner_tol, opts);
        return Sample{std::move(inner.value), std::move(inner.error)};
    };
    return require(tanh_sinh(outer, zero, one, p, tol, opts));
}

QuadratureResult moment_quadrature(int m, Precision p, const Real& tol, QuadratureOptions opts) {
    if (m < 1) throw std::invalid_argument("moment_quadrature: m must be positive");
    const Precision np = p.widened(kNodeGuardDigits);
    const Real scale = Real(1, np) / Real(exact::factorial(static_cast<unsigned>(m)), np);
    // cot(theta/2) = tan((pi - theta)/2), accurate near theta = pi.
    auto f = [&](const Abscissa& x) { return pow(x.x, m) / 2 * tan(x.to_b / 2) * scale; };
    return integrate_1d(f, Real(0, np), hp::pi(np), p, tol, opts);
}

QuadratureResult moment_quadrature_arcsin_form(int m, Precision p, const Real& tol,
                                               QuadratureOptions opts) {
    if (m < 1) throw std::invalid_argument("moment_quadrature: m must be positive");
    const Precision np = p.widened(kNodeGuardDigits);
    const Real scale = Real(1, np) / Real(exact::factorial(static_cast<unsigned>(m)), np);
    const Real half_pi = hp::pi(np) / 2;
    auto f = [&](const Abscissa& v) {
        // arcsin(y) = pi/2 - 2 arcsin(sqrt((1 - y)/2)) near y = 1.
        Real angle = v.x < 1 ? asin(v.x / 2) : half_pi - 2 * asin(sqrt(v.to_b / 4));
        return pow(2 * angle, m) / v.x * scale;
    };
    return integrate_1d(f, Real(0, np), Real(2, np), p, tol, opts);
}

std::size_t cached_levels(Precision p) {
    return node_cache().count(p.widened(kNodeGuardDigits));
}

}  // namespace cotm::quad
