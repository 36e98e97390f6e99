// Walks one graph through the main entry points: density, an interval
// assignment, the circular mapping at gamma, and a cover by bases.
#include <iostream>

#include "cygon/cygon.hpp"

int main() {
    using namespace cygon;

    // K4: six edges, rank 3, gamma = 2.
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Matroid m = Matroid::graphic(k4);

    DensityReport density = max_density(m);
    std::cout << "gamma = " << format_rational(density.gamma) << ", densest set = {"
              << format_subset(density.witness) << "}\n";

    WeightedInstance inst{m, std::vector<long long>(6, 1), 2};
    auto assigned = assign_intervals(inst);
    if (auto* mapping = std::get_if<GonMapping>(&assigned)) {
        std::cout << "unit intervals on a 2-gon:\n" << format_text(*mapping);
    }

    CircularArboricity circ = circular_arboricity(m);
    std::cout << "circle of circumference " << format_rational(circ.d) << ":\n"
              << format_text(circ.mapping);

    BaseCover cover = integral_arboricity_cover(m);
    std::cout << "spanning trees covering every edge:\n" << format_text(cover);

    return 0;
}
