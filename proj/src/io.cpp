#include "mgsim/io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mgsim {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string config_comment(const nlohmann::json& config) {
    return "# config " + config.dump() + "\n";
}

std::string region_csv(const nlohmann::json& config,
                       const std::vector<std::pair<std::string, MGRegion>>& curves) {
    std::ostringstream os;
    os << config_comment(config);
    os << "schema,curve,vertex,su,se\n";
    os.precision(15);
    for (const auto& [name, region] : curves) {
        int i = 0;
        for (const auto& v : region.vertices)
            os << kCsvSchema << ',' << name << ',' << i++ << ',' << v.x << ',' << v.y << '\n';
    }
    return os.str();
}

std::string region_svg(const nlohmann::json& config,
                       const std::vector<std::pair<std::string, MGRegion>>& curves) {
    // Upper boundary of each region from the S_e axis to the S_u axis.
    const int W = 640, H = 480, M = 56;
    double max_x = 1e-9, max_y = 1e-9;
    for (const auto& [name, region] : curves)
        for (const auto& v : region.vertices) {
            max_x = std::max(max_x, v.x);
            max_y = std::max(max_y, v.y);
        }
    auto px = [&](double x) { return M + x / max_x * (W - 2 * M); };
    auto py = [&](double y) { return H - M - y / max_y * (H - 2 * M); };

    static const char* kColors[] = {"#d62728", "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd"};
    std::ostringstream os;
    os.precision(10);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    os << "<!-- config " << config.dump() << " -->\n";
    os << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\""
       << H - M << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << M << "\" y2=\"" << M
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" font-size=\"13\">S_u</text>\n";
    os << "<text x=\"12\" y=\"" << H / 2 << "\" font-size=\"13\">S_e</text>\n";

    int ci = 0, label_y = M;
    for (const auto& [name, region] : curves) {
        const char* color = kColors[ci++ % 5];
        // vertices are CCW starting from the lexicographically smallest;
        // draw the full polygon outline plus a legend entry
        std::ostringstream pts;
        for (const auto& v : region.vertices) pts << px(v.x) << ',' << py(v.y) << ' ';
        os << "<polygon points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << W - M - 220 << "\" y=\"" << label_y << "\" font-size=\"12\" fill=\""
           << color << "\">" << name << "</text>\n";
        label_y += 16;
    }
    os << "</svg>\n";
    return os.str();
}

std::string coefficient_csv(const nlohmann::json& config,
                            const std::vector<std::array<std::string, 5>>& rows) {
    std::ostringstream os;
    os << config_comment(config);
    os << "schema,scheme,rho,rho_f,D,value\n";
    for (const auto& r : rows)
        os << kCsvSchema << ',' << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ','
           << r[4] << '\n';
    return os.str();
}

}  // namespace mgsim
