#ifndef DEGENBEAM_GRID_HPP
#define DEGENBEAM_GRID_HPP

#include <vector>

namespace degenbeam {

struct GridGrading {
    enum class Kind { Uniform, GeometricTowardX0 };
    Kind kind = Kind::Uniform;
    double ratio = 0.5;  // length shrink factor toward x0
    int layers = 0;      // extra nodes inserted per adjacent side

    static GridGrading uniform() { return {}; }
    static GridGrading geometric(double ratio, int layers) {
        return {Kind::GeometricTowardX0, ratio, layers};
    }
};

/// 1D mesh on [0,1] whose node set contains x0 exactly. Immutable.
struct Grid {
    std::vector<double> nodes;  // strictly increasing, nodes.front()=0, back()=1
    double x0 = 0.5;
    int x0_node = 0;            // nodes[x0_node] == x0

    int n_nodes() const { return static_cast<int>(nodes.size()); }
    int n_elements() const { return n_nodes() - 1; }
    double element_length(int e) const { return nodes[e + 1] - nodes[e]; }
    bool touches_x0(int e) const { return e == x0_node - 1 || e == x0_node; }

    /// Element containing x (clamped to [0,1]); ties at interior nodes go to
    /// the right element.
    int element_of(double x) const;
};

/// Uniform n-element mesh with the node nearest to an interior x0 snapped
/// onto x0 (endpoints never need snapping). Geometric grading then splits the
/// element(s) adjacent to x0 `layers` times with the given length ratio.
Grid build_grid(int n_elements, double x0, GridGrading grading = {});

} // namespace degenbeam

#endif
