#ifndef MGSIM_NETMODEL_HPP
#define MGSIM_NETMODEL_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mgsim {

enum class TopologyKind { WynerLine, HexTorus };

/// Interference/cooperation graph. The interference set and the cooperation
/// neighborhood coincide for every user in both supported models.
/// Users are indexed 0-based in code; the Wyner JSON dump uses 1-based labels.
class Topology {
  public:
    static Topology wyner_line(int user_count);
    // Axial torus with neighbor offsets {(+-1,0),(0,+-1),(1,1),(-1,-1)},
    // coordinates wrapped mod W and H. Requires W,H >= 3 and 3 | W*H.
    static Topology hex_torus(int width, int height);

    TopologyKind kind() const { return kind_; }
    int user_count() const { return static_cast<int>(adj_.size()); }
    int width() const { return width_; }
    int height() const { return height_; }

    const std::vector<int>& neighbors(int user) const;
    bool adjacent(int a, int b) const;

    /// Graph distance in the cooperation graph; |a-b| on the line.
    int hop_distance(int a, int b) const;

    /// Hex cell index, row-major with wrapped axial coordinates.
    int cell_index(int a, int b) const;
    std::pair<int, int> cell_coords(int index) const;

    nlohmann::json to_json() const;

  private:
    Topology() = default;
    void check_user(int user) const;

    TopologyKind kind_ = TopologyKind::WynerLine;
    int width_ = 0;   // hex only
    int height_ = 0;  // hex only
    std::vector<std::vector<int>> adj_;
};

/// Proper 3-coloring of the hex torus, color(a,b) = (a+b) mod 3.
/// Requires both W and H divisible by 3; each cell then has exactly 3
/// neighbors in each of the two other classes.
struct HexPartition {
    std::vector<int> color;  // values 0,1,2 per cell
};

HexPartition hex_color_partition(const Topology& topo);

}  // namespace mgsim

#endif
