#include "mgsim/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgsim {

namespace {

constexpr double kTol = 1e-9;

struct Line {
    double a, b, c;  // a*x + b*y = c
};

bool feasible(const std::vector<LinearConstraint>& cs, const Vec2& p) {
    if (p.x < -kTol || p.y < -kTol) return false;
    for (const auto& k : cs)
        if (k.coeff_u * p.x + k.coeff_e * p.y > k.rhs + kTol) return false;
    return true;
}

std::vector<Vec2> hull_ccw(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& l, const Vec2& r) {
        return l.x < r.x || (l.x == r.x && l.y < r.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& l, const Vec2& r) {
                              return std::abs(l.x - r.x) < kTol && std::abs(l.y - r.y) < kTol;
                          }),
              pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Vec2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {  // lower hull
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= kTol * kTol) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= kTol * kTol) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

nlohmann::json MGRegion::to_json() const {
    nlohmann::json j;
    j["degenerate"] = degenerate;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : constraints)
        cs.push_back({{"coeff_u", c.coeff_u}, {"coeff_e", c.coeff_e}, {"rhs", c.rhs}});
    j["constraints"] = std::move(cs);
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : vertices) vs.push_back({{"su", v.x}, {"se", v.y}});
    j["vertices"] = std::move(vs);
    return j;
}

MGRegion polygon_from_constraints(std::vector<LinearConstraint> constraints) {
    for (const auto& c : constraints)
        if (c.coeff_u < 0.0 || c.coeff_e < 0.0)
            throw std::domain_error("polygon_from_constraints: normals must be nonnegative");
    bool bounds_x = false, bounds_y = false;
    for (const auto& c : constraints) {
        if (c.coeff_u > kTol) bounds_x = true;
        if (c.coeff_e > kTol) bounds_y = true;
    }
    if (!bounds_x || !bounds_y)
        throw std::domain_error("polygon_from_constraints: unbounded region");

    std::vector<Line> lines{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};  // the two axes
    for (const auto& c : constraints) lines.push_back({c.coeff_u, c.coeff_e, c.rhs});

    std::vector<Vec2> pts;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            double det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (std::abs(det) < 1e-14) continue;
            Vec2 p{(lines[i].c * lines[j].b - lines[j].c * lines[i].b) / det,
                   (lines[i].a * lines[j].c - lines[j].a * lines[i].c) / det};
            if (feasible(constraints, p)) pts.push_back(p);
        }
    }

    MGRegion region;
    region.constraints = std::move(constraints);
    region.vertices = hull_ccw(std::move(pts));
    region.degenerate = region.vertices.size() < 3;
    for (auto& v : region.vertices) {  // drop negative zeros
        v.x += 0.0;
        v.y += 0.0;
    }
    return region;
}

MGRegion timeshare_hull(const std::vector<Vec2>& points) {
    std::vector<Vec2> pts{{0.0, 0.0}};
    for (const auto& p : points) {
        if (p.x < -kTol || p.y < -kTol)
            throw std::domain_error("timeshare_hull: points must be nonnegative");
        pts.push_back(p);
        pts.push_back({p.x, 0.0});
        pts.push_back({0.0, p.y});
    }
    MGRegion region;
    region.vertices = hull_ccw(std::move(pts));
    region.degenerate = region.vertices.size() < 3;
    const auto& v = region.vertices;
    for (std::size_t i = 0; i < v.size() && !region.degenerate; ++i) {
        const Vec2& p = v[i];
        const Vec2& q = v[(i + 1) % v.size()];
        double nx = q.y - p.y, ny = p.x - q.x;  // outward normal of a CCW edge
        if (nx < kTol && ny < kTol) continue;   // axis-side edge
        region.constraints.push_back({nx, ny, nx * p.x + ny * p.y});
    }
    return region;
}

SubsetReport is_subset(const MGRegion& inner, const MGRegion& outer, int samples) {
    if (samples < 100) throw std::invalid_argument("is_subset: samples must be >= 100");
    if (outer.constraints.empty())
        throw std::invalid_argument("is_subset: outer region has no constraints");

    std::vector<Vec2> probes(inner.vertices.begin(), inner.vertices.end());
    const std::size_t n = inner.vertices.size();
    if (n >= 2) {
        int per_edge = std::max(1, samples / static_cast<int>(n));
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& p = inner.vertices[i];
            const Vec2& q = inner.vertices[(i + 1) % n];
            for (int s = 1; s < per_edge; ++s) {
                double t = static_cast<double>(s) / per_edge;
                probes.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
    }

    SubsetReport report;
    for (const auto& p : probes)
        for (const auto& c : outer.constraints)
            report.max_violation =
                std::max(report.max_violation, c.coeff_u * p.x + c.coeff_e * p.y - c.rhs);
    report.contained = report.max_violation <= kTol;
    return report;
}

}  // namespace mgsim
