#include "mgsim/netmodel.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>

namespace mgsim {

namespace {

int wrap(int v, int m) {
    int r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Topology Topology::wyner_line(int user_count) {
    if (user_count < 1) throw std::invalid_argument("wyner_line: user_count must be >= 1");
    Topology t;
    t.kind_ = TopologyKind::WynerLine;
    t.adj_.resize(static_cast<std::size_t>(user_count));
    for (int k = 0; k < user_count; ++k) {
        if (k > 0) t.adj_[k].push_back(k - 1);
        if (k + 1 < user_count) t.adj_[k].push_back(k + 1);
    }
    return t;
}

Topology Topology::hex_torus(int width, int height) {
    if (width < 3 || height < 3)
        throw std::invalid_argument("hex_torus: width and height must be >= 3");
    if ((width * height) % 3 != 0)
        throw std::invalid_argument("hex_torus: cell count must be divisible by 3");
    Topology t;
    t.kind_ = TopologyKind::HexTorus;
    t.width_ = width;
    t.height_ = height;
    t.adj_.resize(static_cast<std::size_t>(width) * height);
    static constexpr int kOffsets[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
    for (int b = 0; b < height; ++b) {
        for (int a = 0; a < width; ++a) {
            int idx = t.cell_index(a, b);
            for (const auto& off : kOffsets) {
                int n = t.cell_index(a + off[0], b + off[1]);
                t.adj_[idx].push_back(n);
            }
            std::sort(t.adj_[idx].begin(), t.adj_[idx].end());
            t.adj_[idx].erase(std::unique(t.adj_[idx].begin(), t.adj_[idx].end()),
                              t.adj_[idx].end());
        }
    }
    return t;
}

void Topology::check_user(int user) const {
    if (user < 0 || user >= user_count()) throw std::out_of_range("topology: user out of range");
}

const std::vector<int>& Topology::neighbors(int user) const {
    check_user(user);
    return adj_[user];
}

bool Topology::adjacent(int a, int b) const {
    check_user(a);
    check_user(b);
    const auto& na = adj_[a];
    return std::find(na.begin(), na.end(), b) != na.end();
}

int Topology::hop_distance(int a, int b) const {
    check_user(a);
    check_user(b);
    if (a == b) return 0;
    if (kind_ == TopologyKind::WynerLine) return std::abs(a - b);
    std::vector<int> dist(adj_.size(), -1);
    std::queue<int> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u]) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            if (v == b) return dist[v];
            q.push(v);
        }
    }
    return -1;  // unreachable; cannot happen on connected graphs
}

int Topology::cell_index(int a, int b) const {
    if (kind_ != TopologyKind::HexTorus) throw std::logic_error("cell_index: hex torus only");
    return wrap(b, height_) * width_ + wrap(a, width_);
}

std::pair<int, int> Topology::cell_coords(int index) const {
    if (kind_ != TopologyKind::HexTorus) throw std::logic_error("cell_coords: hex torus only");
    check_user(index);
    return {index % width_, index / width_};
}

nlohmann::json Topology::to_json() const {
    nlohmann::json j;
    nlohmann::json edges = nlohmann::json::array();
    const bool wyner = kind_ == TopologyKind::WynerLine;
    const int base = wyner ? 1 : 0;
    for (int u = 0; u < user_count(); ++u)
        for (int v : adj_[u])
            if (u < v) edges.push_back({u + base, v + base});
    if (wyner) {
        j["kind"] = "wyner";
        j["K"] = user_count();
        j["indexing"] = "users labeled 1..K";
    } else {
        j["kind"] = "hex";
        j["W"] = width_;
        j["H"] = height_;
        j["indexing"] = "cells labeled 0..W*H-1, row-major over wrapped axial (a,b)";
    }
    j["edges"] = std::move(edges);
    return j;
}

HexPartition hex_color_partition(const Topology& topo) {
    if (topo.kind() != TopologyKind::HexTorus)
        throw std::invalid_argument("hex_color_partition: hex torus only");
    // (a+b) mod 3 descends to the torus only when both periods are multiples of 3.
    if (topo.width() % 3 != 0 || topo.height() % 3 != 0)
        throw std::invalid_argument(
            "hex_color_partition: width and height must each be divisible by 3");
    HexPartition p;
    p.color.resize(static_cast<std::size_t>(topo.user_count()));
    for (int idx = 0; idx < topo.user_count(); ++idx) {
        auto [a, b] = topo.cell_coords(idx);
        p.color[idx] = (a + b) % 3;
    }
    return p;
}

}  // namespace mgsim
