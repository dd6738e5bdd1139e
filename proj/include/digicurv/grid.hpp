#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "digicurv/geometry.hpp"

namespace digicurv {

/// Integer pixel coordinates (column i, row j).
struct PixelCoord {
    int i = 0;
    int j = 0;

    friend bool operator==(PixelCoord a, PixelCoord b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(PixelCoord a, PixelCoord b) { return !(a == b); }
    friend bool operator<(PixelCoord a, PixelCoord b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

/// An axis-aligned pixel grid of `width` x `height` squares with side
/// length h. Pixel (i,j) is the closed square of side h centered at the
/// grid point origin + ((i+1/2)h, (j+1/2)h); its corners (grid vertices)
/// lie at origin + (a*h, b*h) for integer a, b.
struct GridSpec {
    double h = 1.0;
    Point origin{0.0, 0.0};
    int width = 1;
    int height = 1;

    Point grid_point(int i, int j) const {
        return {origin.x + (i + 0.5) * h, origin.y + (j + 0.5) * h};
    }
    Point grid_point(PixelCoord p) const { return grid_point(p.i, p.j); }

    /// Position of the grid vertex with integer vertex coordinates (a,b).
    Point vertex_point(int a, int b) const {
        return {origin.x + a * h, origin.y + b * h};
    }
};

/// A planar shape given implicitly: the interior is { p : g(p) <= 0 }.
/// grad and hess return (g_x, g_y) and (g_xx, g_xy, g_yy).
struct ImplicitShape {
    std::string name;
    std::function<double(Point)> g;
    std::function<Vec2(Point)> grad;
    std::function<std::array<double, 3>(Point)> hess;
    /// Half-width of a centered square that contains the shape.
    double extent = 1.0;
    /// Boundary points where the curvature is undefined (e.g. polygon
    /// corners). Empty for smooth shapes.
    std::vector<Point> singular_points;
};

/// A subset of grid pixels, stored as a bitmap over the full grid.
struct PixelSet {
    GridSpec spec;
    std::vector<std::uint8_t> mask;  // width * height, row-major (j * width + i)
    std::size_t count = 0;

    bool inside(int i, int j) const {
        if (i < 0 || j < 0 || i >= spec.width || j >= spec.height) return false;
        return mask[static_cast<std::size_t>(j) * spec.width + i] != 0;
    }
    bool inside(PixelCoord p) const { return inside(p.i, p.j); }

    void set(int i, int j) {
        auto& cell = mask[static_cast<std::size_t>(j) * spec.width + i];
        if (!cell) {
            cell = 1;
            ++count;
        }
    }

    /// All inside pixels in row-major order (deterministic).
    std::vector<PixelCoord> inside_pixels() const;
};

/// Gauss discretization: a pixel belongs to the result iff the shape
/// function is <= 0 at its grid point. Throws BorderContact if an inside
/// pixel touches the grid border (boundary tracing would be ill-defined).
PixelSet gauss_discretize(const ImplicitShape& shape, const GridSpec& spec);

/// Builds a grid that covers [-L, L]^2 with L = ceil((extent + 2h)/h) * h,
/// chosen so that grid points land exactly on the lattice { k*h }.
GridSpec grid_for_shape(const ImplicitShape& shape, double h);

/// Loads a segmented binary image as a pixel set with the given pixel side
/// length. Supported formats: PBM (P1/P4, foreground = 1) and PGM (P2/P5,
/// foreground = value above 50% of maxval). Image rows are flipped so that
/// j increases upward. The grid origin is (0, 0).
PixelSet load_binary_image(const std::string& path, double h);

}  // namespace digicurv
