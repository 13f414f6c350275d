#include "percolattice/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace percolattice {

using ordered_json = nlohmann::ordered_json;

std::string patch_to_json(const TilingPatch& patch) {
    ordered_json j;
    j["version"] = "percolattice-patch-v1";
    j["spec"] = patch.spec_name;
    j["topology"] = topology_name(patch.topology);
    j["extent"] = patch.extent;
    j["edge_to_edge"] = patch.edge_to_edge;
    ordered_json faces = ordered_json::array();
    for (const Face& f : patch.faces) {
        ordered_json jf;
        jf["sides"] = f.sides;
        jf["neighbors"] = f.neighbors;
        jf["exterior_edges"] = f.exterior_edges;
        jf["center"] = {f.cx, f.cy};
        jf["orient"] = f.orient;
        faces.push_back(std::move(jf));
    }
    j["faces"] = std::move(faces);
    return j.dump(1) + "\n";
}

TilingPatch patch_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("version").get<std::string>() != "percolattice-patch-v1")
        throw std::runtime_error("unsupported patch version");
    TilingPatch p;
    p.spec_name = j.at("spec").get<std::string>();
    p.topology = parse_topology(j.at("topology").get<std::string>());
    p.extent = j.value("extent", "");
    p.edge_to_edge = j.value("edge_to_edge", true);
    for (const auto& jf : j.at("faces")) {
        Face f;
        f.sides = jf.at("sides").get<int>();
        f.neighbors = jf.at("neighbors").get<std::vector<int32_t>>();
        f.exterior_edges = jf.at("exterior_edges").get<int>();
        f.cx = jf.at("center")[0].get<double>();
        f.cy = jf.at("center")[1].get<double>();
        f.orient = jf.value("orient", 0.0);
        p.faces.push_back(std::move(f));
    }
    p.sort_neighbors();
    return p;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rounds_to_json(const InfectionState& state) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < state.round.size(); ++i) {
        if (!state.infected[i]) continue;
        arr.push_back({{"face", i}, {"round", state.round[i]}});
    }
    return arr.dump(1) + "\n";
}

std::string csv_header() {
    return "family,p,k,extent,faces,trials,percolating,frequency,ci_low,ci_high,seed\n";
}

std::string csv_row(const std::string& family, double p, int k, const std::string& extent,
                    int faces, int trials, int percolating, double frequency,
                    double ci_low, double ci_high, uint64_t seed) {
    std::ostringstream ss;
    ss << family << ',' << p << ',' << k << ',' << extent << ',' << faces << ','
       << trials << ',' << percolating << ',' << frequency << ',' << ci_low << ','
       << ci_high << ',' << seed << '\n';
    return ss.str();
}

}  // namespace percolattice
