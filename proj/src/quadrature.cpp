#include "hardy/quadrature.hpp"

#include "hardy/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace hardy::special {

namespace {

constexpr int rule_order = 20;

struct GaussRule {
    std::array<double, rule_order> nodes{};
    std::array<double, rule_order> weights{};
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n in long double.
GaussRule make_gauss_legendre()
{
    using ld = long double;
    constexpr ld pi = 3.141592653589793238462643383279502884L;
    GaussRule rule;
    const int n = rule_order;
    for (int i = 0; i < n; ++i) {
        ld x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
        ld derivative = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            ld p0 = 1.0L;
            ld p1 = x;
            for (int k = 2; k <= n; ++k) {
                const ld p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = n * (x * p1 - p0) / (x * x - 1.0L);
            const ld dx = p1 / derivative;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) {
                break;
            }
        }
        rule.nodes[i] = static_cast<double>(x);
        rule.weights[i] = static_cast<double>(2.0L / ((1.0L - x * x) * derivative * derivative));
    }
    return rule;
}

const GaussRule& gauss_rule()
{
    static const GaussRule rule = make_gauss_legendre();
    return rule;
}

enum class Map { identity, lower, upper };

struct Segment {
    Map map = Map::identity;
    double origin = 0.0; // endpoint the power map is anchored at
    double width = 0.0;  // physical width covered by s in [0, 1]
    int power = 1;
};

struct Panel {
    int segment = 0;
    double s0 = 0.0;
    double s1 = 0.0;
    double left = 0.0;
    double right = 0.0;
    double err = 0.0;
};

int power_for_order(double order)
{
    if (!(order > -1.0)) {
        throw DomainError("quad_adaptive: endpoint singularity order must exceed -1, got " +
                          std::to_string(order));
    }
    const double k = std::ceil(4.0 / (order + 1.0));
    return static_cast<int>(std::clamp(k, 1.0, 64.0));
}

class Integrator {
public:
    Integrator(const std::function<double(double)>& f, std::vector<Segment> segments)
        : f_(f), segments_(std::move(segments))
    {
    }

    double rule(int seg, double s0, double s1)
    {
        const auto& g = gauss_rule();
        const Segment& s = segments_[seg];
        const double mid = 0.5 * (s0 + s1);
        const double half = 0.5 * (s1 - s0);
        double sum = 0.0;
        for (int i = 0; i < rule_order; ++i) {
            const double t = mid + half * g.nodes[i];
            sum += g.weights[i] * integrand(s, t);
        }
        evaluations_ += rule_order;
        return sum * half;
    }

    std::size_t evaluations() const { return evaluations_; }

private:
    double integrand(const Segment& s, double t)
    {
        switch (s.map) {
        case Map::identity:
            return f_(s.origin + s.width * t) * s.width;
        case Map::lower: {
            const double tk = std::pow(t, s.power);
            const double jac = s.power * s.width * (s.power == 1 ? 1.0 : tk / t);
            if (jac == 0.0) {
                return 0.0;
            }
            const double x = s.origin + s.width * tk;
            if (x == s.origin) {
                return 0.0; // offset below the spacing of doubles at the endpoint
            }
            return f_(x) * jac;
        }
        case Map::upper: {
            const double tk = std::pow(t, s.power);
            const double jac = s.power * s.width * (s.power == 1 ? 1.0 : tk / t);
            if (jac == 0.0) {
                return 0.0;
            }
            const double x = s.origin - s.width * tk;
            if (x == s.origin) {
                return 0.0; // offset below the spacing of doubles at the endpoint
            }
            return f_(x) * jac;
        }
        }
        return 0.0;
    }

    const std::function<double(double)>& f_;
    std::vector<Segment> segments_;
    std::size_t evaluations_ = 0;
};

} // namespace

QuadResult quad_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                         const EndpointSingularity& singularity, const QuadOptions& options)
{
    if (!(tol > 0.0)) {
        throw DomainError("quad_adaptive: tol must be positive");
    }
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw DomainError("quad_adaptive: interval must be finite");
    }
    if (a == b) {
        return {};
    }
    if (b < a) {
        auto r = quad_adaptive(f, b, a, tol, {singularity.upper, singularity.lower}, options);
        r.value = -r.value;
        return r;
    }

    const double length = b - a;
    const double edge = length / 16.0;
    double lo = a;
    double hi = b;
    std::vector<Segment> segments;
    if (singularity.lower) {
        segments.push_back({Map::lower, a, edge, power_for_order(*singularity.lower)});
        lo = a + edge;
    }
    if (singularity.upper) {
        segments.push_back({Map::upper, b, edge, power_for_order(*singularity.upper)});
        hi = b - edge;
    }
    segments.push_back({Map::identity, lo, hi - lo, 1});
    const int regular = static_cast<int>(segments.size()) - 1;

    Integrator integrator(f, segments);
    std::vector<Panel> panels;
    panels.reserve(std::min<std::size_t>(options.max_panels, 4096));

    auto make_panel = [&](int seg, double s0, double s1, double whole) {
        Panel p{seg, s0, s1, 0.0, 0.0, 0.0};
        const double mid = 0.5 * (s0 + s1);
        p.left = integrator.rule(seg, s0, mid);
        p.right = integrator.rule(seg, mid, s1);
        p.err = std::fabs(p.left + p.right - whole);
        return p;
    };

    for (int seg = 0; seg < regular; ++seg) {
        panels.push_back(make_panel(seg, 0.0, 1.0, integrator.rule(seg, 0.0, 1.0)));
    }
    const std::size_t initial = std::max<std::size_t>(options.initial_panels, 1);
    for (std::size_t i = 0; i < initial; ++i) {
        const double s0 = static_cast<double>(i) / static_cast<double>(initial);
        const double s1 = static_cast<double>(i + 1) / static_cast<double>(initial);
        panels.push_back(make_panel(regular, s0, s1, integrator.rule(regular, s0, s1)));
    }

    auto worse = [&panels](std::size_t x, std::size_t y) {
        if (panels[x].err != panels[y].err) {
            return panels[x].err < panels[y].err;
        }
        return x > y;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);
    double total_err = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        queue.push(i);
        total_err += panels[i].err;
    }

    double unresolved = 0.0;
    std::size_t since_resum = 0;
    while (total_err + unresolved > tol && !queue.empty()) {
        if (panels.size() + 2 > options.max_panels) {
            throw NoConvergence("quad_adaptive: panel budget of " + std::to_string(options.max_panels) +
                                " exhausted with error estimate " + std::to_string(total_err + unresolved) +
                                " > tol " + std::to_string(tol));
        }
        const std::size_t worst = queue.top();
        queue.pop();
        const Panel parent = panels[worst];
        total_err -= parent.err;
        const double mid = 0.5 * (parent.s0 + parent.s1);
        if (!(mid > parent.s0 && mid < parent.s1) ||
            parent.s1 - parent.s0 <= 64.0 * std::numeric_limits<double>::epsilon() * std::fabs(parent.s1)) {
            // Cannot bisect further; keep its estimate but stop refining.
            unresolved += parent.err;
            panels[worst].err = 0.0;
            continue;
        }
        panels[worst] = make_panel(parent.segment, parent.s0, mid, parent.left);
        panels.push_back(make_panel(parent.segment, mid, parent.s1, parent.right));
        total_err += panels[worst].err + panels.back().err;
        queue.push(worst);
        queue.push(panels.size() - 1);
        if (++since_resum == 256) {
            since_resum = 0;
            total_err = 0.0;
            for (const auto& p : panels) {
                total_err += p.err;
            }
        }
    }

    QuadResult result;
    double err = unresolved;
    for (const auto& p : panels) {
        result.value += p.left + p.right;
        err += p.err;
    }
    result.err_estimate = err;
    result.panels = panels.size();
    result.evaluations = integrator.evaluations();
    if (err > tol) {
        throw NoConvergence("quad_adaptive: error estimate " + std::to_string(err) + " above tol " +
                            std::to_string(tol) + " at the resolution limit");
    }
    return result;
}

} // namespace hardy::special
