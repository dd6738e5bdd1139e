#pragma once

#include <vector>

#include "digicurv/grid.hpp"

namespace digicurv {

/// One unit grid edge of the boundary, directed so that the inside of the
/// traced region lies on its left. Vertex coordinates are in h units
/// (vertex (a,b) sits at origin + (a*h, b*h)).
struct GridEdge {
    int vx0 = 0, vy0 = 0;  // start vertex
    int vx1 = 0, vy1 = 0;  // end vertex
    PixelCoord inner;      // pixel inside the region
    PixelCoord outer;      // adjacent pixel outside the region
};

/// A simple closed digital curve: a cyclic sequence of grid edges where
/// consecutive edges share a vertex and the interior stays on the left
/// (counterclockwise orientation).
struct DigitalCurve {
    GridSpec spec;
    std::vector<GridEdge> edges;

    int size() const { return static_cast<int>(edges.size()); }

    Point vertex_start(int k) const { return spec.vertex_point(edges[k].vx0, edges[k].vy0); }
    Point vertex_end(int k) const { return spec.vertex_point(edges[k].vx1, edges[k].vy1); }
    Point edge_midpoint(int k) const {
        return 0.5 * (vertex_start(k) + vertex_end(k));
    }
    Point inner_center(int k) const { return spec.grid_point(edges[k].inner); }
    Point outer_center(int k) const { return spec.grid_point(edges[k].outer); }
};

/// Traces the outer boundary of the largest 4-connected component of
/// `pixels` as a counterclockwise closed curve. Saddle vertices (two
/// diagonal inside pixels meeting at a vertex) are resolved with
/// 4-connectivity for the object, so the two diagonal pixels stay on
/// separate boundary loops. Throws EmptyInput if the set is empty and
/// NotSimple if the walk fails to close (not expected for valid input).
DigitalCurve trace_boundary(const PixelSet& pixels);

/// Cyclic distance between edges: min(|j-i|, N-|j-i|). 0-based indices.
int edge_distance(const DigitalCurve& curve, int i, int j);

}  // namespace digicurv
