#include "bergman/geometry.hpp"

#include "bergman/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace bergman {

namespace {

void require_metric_beta(const SpaceParams& params) {
    if (!(params.beta > -1.0) || !(params.beta <= 0.0))
        throw std::domain_error("metric: beta must lie in (-1, 0]");
}

} // namespace

double metric_density_sq_t(const SpaceParams& params, double t) {
    require_metric_beta(params);
    if (!(t >= 0.0) || !(t < 1.0)) throw std::domain_error("metric: |z|^2 in [0,1) required");
    const double a = params.alpha, b = params.beta;
    const double poincare = (a + 2.0) / sqr(1.0 - t);
    if (b == 0.0) return poincare;
    const double h = H(a, b, t);
    const double h1 = H(a, b + 1.0, t);
    const double g = -b * std::pow(1.0 - t, a) / (h * h) *
                     ((a + b + 1.0) * h - b * (a + b + 2.0) / (1.0 + b) * h1);
    const double rho2 = g + poincare;
    if (!(rho2 >= 0.0))
        throw accuracy_error("metric: rho^2 came out negative (internal inconsistency)");
    return rho2;
}

double metric_density(const SpaceParams& params, Complex z) {
    return std::sqrt(metric_density_sq_t(params, std::norm(z)));
}

double density_vs_log_kernel_check(const SpaceParams& params, Complex z, double h) {
    require_metric_beta(params);
    if (!(h > 1e-8) || !(h < 0.1)) throw std::domain_error("density check: step out of range");
    if (std::abs(z) + h >= 1.0 - 1e-9)
        throw std::domain_error("density check: stencil leaves the disk");
    KernelEval eval(params);
    auto kappa = [&](Complex w) { return eval.log_K_diag(w); };
    auto lap = [&](double step) {
        return (kappa(z + step) + kappa(z - step) + kappa(z + Complex(0.0, step)) +
                kappa(z - Complex(0.0, step)) - 4.0 * kappa(z)) /
               (step * step);
    };
    const double rich = (4.0 * lap(h / 2.0) - lap(h)) / 3.0;
    return std::abs(metric_density_sq_t(params, std::norm(z)) - 0.25 * rich);
}

Complex mobius(Complex z, Complex w) {
    const Complex denom = 1.0 - std::conj(z) * w;
    if (std::abs(denom) < 1e-15) throw std::domain_error("mobius: denominator vanishes");
    return (z - w) / denom;
}

double poincare_distance(Complex p, Complex q) {
    return std::atanh(std::abs(mobius(p, q)));
}

double curve_length(const std::vector<Complex>& pts, const SpaceParams& params) {
    require_metric_beta(params);
    std::vector<Complex> v;
    v.reserve(pts.size());
    for (const Complex& p : pts) {
        if (!(std::abs(p) < 1.0)) throw std::domain_error("curve_length: point outside the disk");
        if (v.empty() || v.back() != p) v.push_back(p);
    }
    if (v.size() < 2) return 0.0;

    double total = 0.0;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        const Complex a = v[k], b = v[k + 1];
        double prev = metric_density(params, 0.5 * (a + b)) * std::abs(b - a);
        for (int n = 2; n <= (1 << 16); n *= 2) {
            double sum = 0.0;
            const Complex step = (b - a) / static_cast<double>(n);
            for (int i = 0; i < n; ++i)
                sum += metric_density(params, a + (i + 0.5) * step) * std::abs(step);
            if (std::abs(sum - prev) <= 1e-8 * std::max(sum, 1e-12)) {
                prev = sum;
                break;
            }
            prev = sum;
        }
        total += prev;
    }
    return total;
}

RadialDensity::RadialDensity(const SpaceParams& params, double r_max, int n) {
    require_metric_beta(params);
    const double cap = std::min(0.9999995, r_max);
    smax_ = std::atanh(cap) + 0.5;  // margin for off-grid queries
    ds_ = smax_ / (n - 1);
    phi_.resize(n);
    slope_.resize(n);
    for (int i = 0; i < n; ++i) {
        const double r = std::tanh(i * ds_);
        const double t = r * r;
        phi_[i] = std::sqrt(metric_density_sq_t(params, t)) * (1.0 - t);
    }
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            slope_[i] = (phi_[1] - phi_[0]) / ds_;
        else if (i == n - 1)
            slope_[i] = (phi_[i] - phi_[i - 1]) / ds_;
        else
            slope_[i] = (phi_[i + 1] - phi_[i - 1]) / (2.0 * ds_);
    }
}

double RadialDensity::rho(double r) const {
    const double t = r * r;
    double s = std::atanh(std::min(r, 0.99999999));
    if (s > smax_) s = smax_;
    const int n = static_cast<int>(phi_.size());
    int k = static_cast<int>(s / ds_);
    if (k > n - 2) k = n - 2;
    const double x = (s - k * ds_) / ds_;
    const double h00 = (1.0 + 2.0 * x) * sqr(1.0 - x);
    const double h10 = x * sqr(1.0 - x);
    const double h01 = x * x * (3.0 - 2.0 * x);
    const double h11 = x * x * (x - 1.0);
    const double phi = h00 * phi_[k] + h10 * ds_ * slope_[k] + h01 * phi_[k + 1] +
                       h11 * ds_ * slope_[k + 1];
    return phi / (1.0 - t);
}

// 16-neighbour stencil in (ring, angle) index space
namespace {
constexpr int kStencil[16][2] = {
    {1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},  {1, -1}, {-1, 1}, {-1, -1},
    {1, 2},  {1, -2}, {-1, 2}, {-1, -2}, {2, 1},  {2, -1}, {-2, 1}, {-2, -1}};
} // namespace

MetricGrid::MetricGrid(const SpaceParams& params, const GridConfig& cfg)
    : params_(params), cfg_(cfg), rho_(params, cfg.r_max),
      ds_(std::atanh(cfg.r_max) / cfg.n_radial), R_(cfg.n_radial), A_(cfg.n_angular) {
    if (R_ < 8 || A_ < 16) throw construction_error("MetricGrid: grid too coarse");
}

Complex MetricGrid::position(int id) const {
    if (id == 0) return Complex(0.0, 0.0);
    const int i = (id - 1) / A_ + 1;
    const int j = (id - 1) % A_;
    const double r = std::tanh(i * ds_);
    const double th = 2.0 * M_PI * j / A_;
    return r * Complex(std::cos(th), std::sin(th));
}

double MetricGrid::edge_weight(Complex a, Complex b) const {
    return rho_.rho(std::abs(0.5 * (a + b))) * std::abs(b - a);
}

void MetricGrid::neighbor_ids(int id, std::vector<int>& out) const {
    out.clear();
    if (id == 0) {
        for (int j = 0; j < A_; ++j) out.push_back(1 + j);
        return;
    }
    const int i = (id - 1) / A_ + 1;
    const int j = (id - 1) % A_;
    for (const auto& st : kStencil) {
        const int ii = i + st[0];
        if (ii < 0 || ii > R_) continue;
        if (ii == 0) {
            if (st[1] == 0) out.push_back(0);
            continue;
        }
        const int jj = ((j + st[1]) % A_ + A_) % A_;
        out.push_back(1 + (ii - 1) * A_ + jj);
    }
}

std::vector<std::pair<int, double>> MetricGrid::link_point(Complex p) const {
    std::vector<std::pair<int, double>> links;
    const double r = std::abs(p);
    const double s = std::atanh(std::min(r, cfg_.r_max));
    const int i0 = static_cast<int>(std::round(s / ds_));
    const double th = std::atan2(p.imag(), p.real());
    const int j0 = static_cast<int>(std::round(th / (2.0 * M_PI / A_)));
    for (int di = -2; di <= 2; ++di) {
        const int i = i0 + di;
        if (i < 0 || i > R_) continue;
        if (i == 0) {
            links.emplace_back(0, edge_weight(p, Complex(0.0, 0.0)));
            continue;
        }
        for (int dj = -2; dj <= 2; ++dj) {
            const int j = ((j0 + dj) % A_ + A_) % A_;
            const int id = 1 + (i - 1) * A_ + j;
            links.emplace_back(id, edge_weight(p, position(id)));
        }
    }
    return links;
}

double MetricGrid::graph_distance(Complex p, Complex q, std::vector<Complex>* path) const {
    if (p == q) {
        if (path) *path = {p};
        return 0.0;
    }
    const int n = node_count();
    const int target = n;  // virtual node
    VectorXd dist = VectorXd::Constant(n + 1, std::numeric_limits<double>::infinity());
    std::vector<int> pred(n + 1, -2);

    const double hcoef = 0.999 * std::sqrt(params_.alpha + 2.0);
    auto heuristic = [&](int id) {
        return id == target ? 0.0 : hcoef * poincare_distance(position(id), q);
    };

    std::vector<std::pair<int, double>> tlinks = link_point(q);
    VectorXd tweight = VectorXd::Constant(n, -1.0);
    for (const auto& [id, w] : tlinks) tweight[id] = std::min(w, tweight[id] < 0 ? w : tweight[id]);

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (const auto& [id, w] : link_point(p)) {
        if (w < dist[id]) {
            dist[id] = w;
            pred[id] = -1;  // direct from source
            heap.emplace(w + heuristic(id), id);
        }
    }

    std::vector<int> nbr;
    nbr.reserve(18);
    while (!heap.empty()) {
        const auto [f, u] = heap.top();
        heap.pop();
        if (u == target) break;
        if (f - heuristic(u) > dist[u] + 1e-15) continue;  // stale entry
        const Complex zu = position(u);
        if (tweight[u] >= 0.0) {
            const double cand = dist[u] + tweight[u];
            if (cand < dist[target]) {
                dist[target] = cand;
                pred[target] = u;
                heap.emplace(cand, target);
            }
        }
        neighbor_ids(u, nbr);
        for (int v : nbr) {
            const double cand = dist[u] + edge_weight(zu, position(v));
            if (cand < dist[v]) {
                dist[v] = cand;
                pred[v] = u;
                heap.emplace(cand + heuristic(v), v);
            }
        }
    }
    if (!std::isfinite(dist[target]))
        throw accuracy_error("graph_distance: target unreachable on the grid");
    if (path) {
        path->clear();
        std::vector<Complex> rev = {q};
        for (int v = pred[target]; v != -1; v = pred[v]) {
            if (v < 0) throw accuracy_error("graph_distance: broken predecessor chain");
            rev.push_back(position(v));
        }
        rev.push_back(p);
        path->assign(rev.rbegin(), rev.rend());
    }
    return dist[target];
}

VectorXd MetricGrid::distances_from(Complex p) const {
    const int n = node_count();
    VectorXd dist = VectorXd::Constant(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (const auto& [id, w] : link_point(p)) {
        if (w < dist[id]) {
            dist[id] = w;
            heap.emplace(w, id);
        }
    }
    std::vector<int> nbr;
    nbr.reserve(18);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u] + 1e-15) continue;
        const Complex zu = position(u);
        neighbor_ids(u, nbr);
        for (int v : nbr) {
            const double cand = d + edge_weight(zu, position(v));
            if (cand < dist[v]) {
                dist[v] = cand;
                heap.emplace(cand, v);
            }
        }
    }
    return dist;
}

double MetricGrid::distance_to_point(const VectorXd& dist, Complex w) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [id, lw] : link_point(w)) best = std::min(best, dist[id] + lw);
    return best;
}

namespace {

double seg_len(const RadialDensity& rho, Complex a, Complex b) {
    // composite two-point Gauss; panel count follows the metric length so
    // that coarse-level segments are still integrated accurately
    static const double g = 0.28867513459481287;  // 1/(2 sqrt(3))
    const Complex d = b - a;
    const double crude = rho.rho(std::abs(0.5 * (a + b))) * std::abs(d);
    const int panels = std::min(32, 1 + static_cast<int>(crude / 0.02));
    double sum = 0.0;
    const Complex step = d / static_cast<double>(panels);
    for (int i = 0; i < panels; ++i) {
        const Complex m = a + (i + 0.5) * step;
        sum += rho.rho(std::abs(m - g * step)) + rho.rho(std::abs(m + g * step));
    }
    return std::abs(step) * 0.5 * sum;
}

double table_length(const RadialDensity& rho, const std::vector<Complex>& pts) {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) total += seg_len(rho, pts[k], pts[k + 1]);
    return total;
}

// resample a polyline to n vertices, uniformly in cumulative chord length
std::vector<Complex> resample_polyline(const std::vector<Complex>& pts, int n) {
    std::vector<double> cum(pts.size(), 0.0);
    for (std::size_t k = 1; k < pts.size(); ++k)
        cum[k] = cum[k - 1] + std::abs(pts[k] - pts[k - 1]);
    const double total = cum.back();
    std::vector<Complex> out;
    out.reserve(n);
    out.push_back(pts.front());
    std::size_t seg = 0;
    for (int i = 1; i < n - 1; ++i) {
        const double target = total * i / (n - 1);
        while (seg + 2 < pts.size() && cum[seg + 1] < target) ++seg;
        const double span = cum[seg + 1] - cum[seg];
        const double t = span > 0.0 ? (target - cum[seg]) / span : 0.0;
        out.push_back(pts[seg] + t * (pts[seg + 1] - pts[seg]));
    }
    out.push_back(pts.back());
    return out;
}

// one level of local descent on interior vertices; endpoints stay fixed
void relax_sweeps(std::vector<Complex>& pts, const RadialDensity& rho, double r_cap,
                  int max_sweeps) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double improved = 0.0;
        double total = 0.0;
        for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
            const Complex a = pts[k - 1], c = pts[k + 1];
            Complex v = pts[k];
            double step = 0.3 * std::min(std::abs(v - a), std::abs(c - v));
            double cost = seg_len(rho, a, v) + seg_len(rho, v, c);
            for (int shrink = 0; shrink < 4; ++shrink) {
                bool moved = true;
                while (moved) {
                    moved = false;
                    for (const Complex dir :
                         {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
                        Complex cand = v + step * dir;
                        const double rc = std::abs(cand);
                        if (rc > r_cap) cand *= r_cap / rc;
                        const double cc = seg_len(rho, a, cand) + seg_len(rho, cand, c);
                        if (cc < cost - 1e-16) {
                            improved += cost - cc;
                            cost = cc;
                            v = cand;
                            moved = true;
                        }
                    }
                }
                step *= 0.4;
            }
            pts[k] = v;
            total += cost;
        }
        if (improved < 1e-11 * std::max(total, 1e-12)) break;
    }
}

// coarse-to-fine relaxation with reparametrization between rounds: pure
// pointwise descent is degenerate along the curve (vertices slide and
// bunch), so each round is followed by an equal-spacing resample
double smooth_polyline(std::vector<Complex>& pts, const RadialDensity& rho, double r_cap) {
    if (pts.size() < 3) return table_length(rho, pts);
    std::vector<Complex> cur = resample_polyline(pts, 17);
    for (int n : {17, 33, 65, 129, 257}) {
        cur = resample_polyline(cur, n);
        const int rounds = std::max(3, 160 / n);
        double prev = table_length(rho, cur);
        for (int round = 0; round < rounds; ++round) {
            relax_sweeps(cur, rho, r_cap, 10);
            cur = resample_polyline(cur, n);
            const double now = table_length(rho, cur);
            if (prev - now < 1e-9 * std::max(now, 1e-12)) break;
            prev = now;
        }
    }
    pts = cur;
    return table_length(rho, pts);
}

} // namespace

DistanceResult distance(Complex p, Complex q, const SpaceParams& params, const GridConfig& cfg) {
    require_metric_beta(params);
    if (!(std::abs(p) < 1.0) || !(std::abs(q) < 1.0))
        throw std::domain_error("distance: endpoints must lie inside the disk");

    DistanceResult res;
    const double dp = poincare_distance(p, q);
    res.bracket_lo = std::sqrt(params.alpha + 2.0) * dp;
    res.bracket_hi = std::sqrt((params.alpha + 2.0 + params.beta) / (1.0 + params.beta)) * dp;
    if (p == q) return res;

    MetricGrid coarse(params, cfg);
    std::vector<Complex> path;
    res.graph_coarse = coarse.graph_distance(p, q, cfg.refine ? nullptr : &path);
    res.graph_fine = res.graph_coarse;
    if (cfg.refine) {
        GridConfig f = cfg;
        f.n_radial *= 2;
        f.n_angular *= 2;
        MetricGrid fine(params, f);
        res.graph_fine = fine.graph_distance(p, q, &path);
    }
    res.value = res.graph_fine;

    double smooth_gain = 0.0;
    if (cfg.smooth && path.size() >= 2) {
        smooth_polyline(path, coarse.density_table(), cfg.r_max);
        const double exact = curve_length(path, params);
        smooth_gain = std::max(0.0, res.graph_fine - exact);
        res.value = exact;
    }
    res.error = std::abs(res.graph_fine - res.graph_coarse) * 0.25 + smooth_gain * 0.05 +
                1e-3 * res.value + 1e-12;

    if (res.value + res.error < res.bracket_lo * (1.0 - 1e-12) ||
        res.value - res.error > res.bracket_hi * (1.0 + 1e-12))
        throw accuracy_error("distance: graph value inconsistent with the Poincare bracket");
    return res;
}

BergmanDisc::BergmanDisc(const SpaceParams& params, Complex z, double r, GridConfig grid)
    : params_(params), z_(z), r_(r), gcfg_(grid) {
    require_metric_beta(params);
    if (!(r > 0.0)) throw std::domain_error("BergmanDisc: radius must be positive");
    if (!(std::abs(z) < 1.0)) throw std::domain_error("BergmanDisc: center outside the disk");

    const double c_lo = std::sqrt(params.alpha + 2.0);
    const double c_hi = std::sqrt((params.alpha + 2.0 + params.beta) / (1.0 + params.beta));
    bounds_.tau1 = std::tanh(r / c_lo);
    bounds_.tau2 = std::tanh(r / c_hi);
    const double t = std::norm(z);
    auto ball = [&](double tau, Complex& c, double& rad) {
        c = (1.0 - tau * tau) * z / (1.0 - tau * tau * t);
        rad = (1.0 - t) * tau / (1.0 - tau * tau * t);
    };
    ball(bounds_.tau1, bounds_.center1, bounds_.radius1);
    ball(bounds_.tau2, bounds_.center2, bounds_.radius2);
    bounds_.area_lower = sqr((1.0 - t) * bounds_.tau2 / (1.0 - t * sqr(bounds_.tau2)));
    bounds_.area_upper = sqr((1.0 - t) * bounds_.tau1 / (1.0 - t * sqr(bounds_.tau1)));

    origin_mode_ = std::abs(z) < bounds_.tau2;  // 0 is surely a member
    ray_center_ = origin_mode_ ? Complex(0.0, 0.0) : z;

    // ensure the membership grid covers the hull
    const double hull = std::abs(bounds_.center1) + bounds_.radius1;
    gcfg_.r_max = std::min(0.999, std::max(gcfg_.r_max, hull + 0.002));
}

double BergmanDisc::graph_distance_from_center(Complex w) const {
    if (!grid_) {
        grid_ = std::make_shared<MetricGrid>(params_, gcfg_);
        dist_ = std::make_shared<VectorXd>(grid_->distances_from(z_));
    }
    return grid_->distance_to_point(*dist_, w);
}

bool BergmanDisc::contains(Complex w, bool closed_boundary) const {
    if (!(std::abs(w) < 1.0)) return false;
    const double tau = std::abs(mobius(z_, w));
    if (closed_boundary ? (tau <= bounds_.tau2) : (tau < bounds_.tau2)) return true;
    if (closed_boundary ? (tau > bounds_.tau1) : (tau >= bounds_.tau1)) return false;
    const double d = graph_distance_from_center(w);
    return closed_boundary ? (d <= r_) : (d < r_);
}

double BergmanDisc::boundary_radius(double theta) const {
    const Complex e(std::cos(theta), std::sin(theta));
    auto crossing = [&](Complex c, double rad) {
        const Complex d = ray_center_ - c;
        const double b = d.real() * e.real() + d.imag() * e.imag();
        const double cc = std::norm(d) - rad * rad;
        const double disc = b * b - cc;
        if (!(disc >= 0.0) || !(cc <= 0.0))
            throw accuracy_error("BergmanDisc: ray center left the bracket ball");
        return -b + std::sqrt(disc);
    };
    const double s_out = crossing(bounds_.center1, bounds_.radius1);
    if (bounds_.tau1 <= bounds_.tau2 * (1.0 + 1e-14)) return s_out;  // beta = 0: exact ball
    double lo = crossing(bounds_.center2, bounds_.radius2);
    double hi = s_out;
    for (int it = 0; it < 48 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        (contains(ray_center_ + mid * e) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double BergmanDisc::ray_integral(double theta, const std::function<double(Complex)>& f,
                                 bool mu_weight) const {
    const Complex e(std::cos(theta), std::sin(theta));
    const double S = boundary_radius(theta);
    if (!(S > 0.0)) return 0.0;

    static const int kN = 48;
    if (origin_mode_ && mu_weight) {
        // radial integral 1/2 int_0^{S^2} f (1-u)^alpha u^beta du with the
        // u^beta part handled by the Jacobi weight
        static thread_local std::unique_ptr<Rule1D> rule;
        static thread_local double rule_beta = 2.0;
        if (!rule || rule_beta != params_.beta) {
            rule = std::make_unique<Rule1D>(gauss_jacobi01(kN, 0.0, params_.beta));
            rule_beta = params_.beta;
        }
        const double s2 = S * S;
        double sum = 0.0;
        for (int qi = 0; qi < kN; ++qi) {
            const double u = s2 * rule->x[qi];
            const Complex w = std::sqrt(u) * e;
            sum += rule->w[qi] * f(w) * std::pow(1.0 - u, params_.alpha);
        }
        return 0.5 * std::pow(s2, params_.beta + 1.0) * sum;
    }

    static thread_local std::unique_ptr<Rule1D> leg;
    if (!leg) leg = std::make_unique<Rule1D>(gauss_jacobi01(kN, 0.0, 0.0));
    double sum = 0.0;
    for (int qi = 0; qi < kN; ++qi) {
        const double s = S * leg->x[qi];
        const Complex w = ray_center_ + s * e;
        double v = f(w) * s;
        if (mu_weight)
            v *= std::pow(std::norm(w), params_.beta) *
                 std::pow(1.0 - std::norm(w), params_.alpha);
        sum += leg->w[qi] * v;
    }
    return S * sum;
}

double BergmanDisc::integral_mu(const std::function<double(Complex)>& f) const {
    double sum = 0.0;
    for (int j = 0; j < n_rays_; ++j)
        sum += ray_integral(2.0 * M_PI * j / n_rays_, f, true);
    return 2.0 / n_rays_ * sum / beta(params_.alpha + 1.0, params_.beta + 1.0);
}

double BergmanDisc::integral_area(const std::function<double(Complex)>& f) const {
    double sum = 0.0;
    for (int j = 0; j < n_rays_; ++j)
        sum += ray_integral(2.0 * M_PI * j / n_rays_, f, false);
    return 2.0 / n_rays_ * sum;
}

double BergmanDisc::measure() const {
    return integral_mu([](Complex) { return 1.0; });
}

std::vector<Complex> BergmanDisc::sample_points(int per_ray) const {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n_rays_) * per_ray);
    for (int j = 0; j < n_rays_; ++j) {
        const double th = 2.0 * M_PI * j / n_rays_;
        const Complex e(std::cos(th), std::sin(th));
        const double S = boundary_radius(th);
        for (int qi = 0; qi < per_ray; ++qi)
            pts.push_back(ray_center_ + (S * (qi + 0.5) / per_ray) * e);
    }
    return pts;
}

double disc_measure(const SpaceParams& params, Complex z, double r) {
    return BergmanDisc(params, z, r).measure();
}

KernelInfimumResult kernel_infimum_check(Complex z, double r, const SpaceParams& params,
                                         const DiskRule& rule) {
    if (!jalpha_member(params))
        throw std::domain_error("kernel_infimum_check: Q has zeros inside the disk");
    BergmanDisc disc(params, z, r);
    KernelEval eval(params);
    DiskFunction kz([&eval, z](Complex w) { return eval.K(w, z); }, params.m);
    const double norm2 = sqr(rule.norm_p(kz, 2.0));

    double inf = std::numeric_limits<double>::infinity();
    for (const Complex& w : disc.sample_points(6))
        inf = std::min(inf, std::norm(eval.K(w, z)) / norm2);

    KernelInfimumResult out;
    out.inf_normalized_kernel_sq = inf;
    out.disc_measure = disc.measure();
    out.product = inf * out.disc_measure;
    return out;
}

bool cauchy_schwarz_check(int alpha, double beta, double x) {
    if (alpha < 0) throw std::domain_error("cauchy_schwarz_check: alpha must be a nonneg integer");
    if (!(beta > -1.0) || !(beta <= 0.0))
        throw std::domain_error("cauchy_schwarz_check: beta in (-1, 0] required");
    // beta-scaled sums T_p = sum_j j^p (-x)^j C(alpha+1, j) beta/(j+beta);
    // the j = 0 term of T_0 is the beta -> 0 limit 1.
    double t0 = 0.0, t1 = 0.0, t2 = 0.0;
    for (int j = 0; j <= alpha + 1; ++j) {
        const double base = gen_binomial(alpha + 1.0, j) * std::pow(-x, j);
        const double scale = (j == 0) ? 1.0 : beta / (j + beta);
        t0 += base * scale;
        t1 += j * base * scale;
        t2 += static_cast<double>(j) * j * base * scale;
    }
    return t1 * t1 <= t2 * t0 + 1e-12 * std::max(1.0, t1 * t1);
}

} // namespace bergman
