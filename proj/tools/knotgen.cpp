// Regenerates the bundled knot corpus.  Usage: knotgen [output-dir]
#include <fstream>
#include <iostream>
#include <string>

#include "concord/json_io.hpp"
#include "concord/two_bridge.hpp"

using namespace concord;

namespace {

void emit(const std::string& dir, const KnotRecord& k) {
    std::string path = dir + "/" + k.name + ".json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << knot_to_json(k).dump(2) << "\n";
    std::cout << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";

    KnotRecord unknot;
    unknot.name = "unknot";
    Presentation trivial;
    trivial.num_generators = 1;
    trivial.eta = {1};
    unknot.presentation = trivial;

    KnotRecord trefoil = two_bridge_knot(3, 1);
    trefoil.name = "trefoil";
    IntMatrix v(2, 2);
    v(0, 0) = -1;
    v(0, 1) = 1;
    v(1, 1) = -1;
    trefoil.seifert = v;

    KnotRecord figure8 = twist_knot_model(1);
    figure8.name = "figure8";
    KnotRecord stevedore = twist_knot_model(2);
    stevedore.name = "6_1";
    KnotRecord eight1 = twist_knot_model(3);
    eight1.name = "8_1";
    KnotRecord eight13 = two_bridge_knot(29, 11);
    eight13.name = "8_13";

    try {
        for (const auto& k : {unknot, trefoil, figure8, stevedore, eight1, eight13}) {
            KnotRecord reloaded = knot_from_json(knot_to_json(k));  // same checks as load
            emit(dir, reloaded);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
