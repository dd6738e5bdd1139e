#include "digicurv/boundary.hpp"

#include <cstdlib>
#include <queue>

#include "digicurv/errors.hpp"

namespace digicurv {

namespace {

struct Component {
    std::vector<std::uint8_t> mask;
    std::size_t count = 0;
    PixelCoord min_lex{0, 0};  // smallest pixel in (i, j) lexicographic order
    PixelCoord seed{0, 0};     // bottom-most, then left-most pixel
};

/// Largest 4-connected component; ties broken by smallest (i,j)-lex pixel.
Component largest_component(const PixelSet& px) {
    const int w = px.spec.width, h = px.spec.height;
    std::vector<std::uint8_t> visited(px.mask.size(), 0);
    Component best;
    bool have = false;

    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * w + i;
            if (!px.mask[idx] || visited[idx]) continue;

            Component comp;
            comp.mask.assign(px.mask.size(), 0);
            comp.min_lex = {i, j};
            comp.seed = {i, j};
            std::queue<PixelCoord> todo;
            todo.push({i, j});
            visited[idx] = 1;
            while (!todo.empty()) {
                const PixelCoord p = todo.front();
                todo.pop();
                comp.mask[static_cast<std::size_t>(p.j) * w + p.i] = 1;
                ++comp.count;
                if (p < comp.min_lex) comp.min_lex = p;
                if (p.j < comp.seed.j || (p.j == comp.seed.j && p.i < comp.seed.i))
                    comp.seed = p;
                const PixelCoord nb[4] = {{p.i + 1, p.j}, {p.i - 1, p.j},
                                          {p.i, p.j + 1}, {p.i, p.j - 1}};
                for (const PixelCoord q : nb) {
                    if (!px.inside(q)) continue;
                    const std::size_t qi = static_cast<std::size_t>(q.j) * w + q.i;
                    if (!visited[qi]) {
                        visited[qi] = 1;
                        todo.push(q);
                    }
                }
            }
            if (!have || comp.count > best.count ||
                (comp.count == best.count && comp.min_lex < best.min_lex)) {
                best = std::move(comp);
                have = true;
            }
        }
    }
    return best;
}

}  // namespace

DigitalCurve trace_boundary(const PixelSet& pixels) {
    if (pixels.count == 0) throw EmptyInput("trace_boundary: empty pixel set");

    const Component comp = largest_component(pixels);
    const int w = pixels.spec.width;
    auto in_comp = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= w || j >= pixels.spec.height) return false;
        return comp.mask[static_cast<std::size_t>(j) * w + i] != 0;
    };

    DigitalCurve curve;
    curve.spec = pixels.spec;

    // Walk state: directed edge b-d -> b with the inside on the left.
    //
    //        l = perp(d)          pixels at the head vertex b:
    //        ^                      FL | .        FL = front-left
    //        |                     ----b----      FR = front-right
    //   -----b--> d                 FR | .
    //
    // Turn rule: left if FL is outside (this also resolves saddle vertices
    // in favor of 4-connected objects), straight if only FR is outside,
    // right otherwise.
    const PixelCoord s = comp.seed;  // bottom edge of the seed pixel, heading east
    int bx = s.i + 1, by = s.j;
    int dx = 1, dy = 0;
    PixelCoord inner = s;
    PixelCoord outer = {s.i, s.j - 1};
    const int start_bx = s.i, start_by = s.j;  // start vertex of the first edge

    const std::size_t max_steps = 4 * comp.count + 8;
    for (;;) {
        curve.edges.push_back({bx - dx, by - dy, bx, by, inner, outer});
        if (curve.edges.size() > max_steps)
            throw NotSimple("trace_boundary: walk failed to close");

        const int lx = -dy, ly = dx;  // left normal
        const PixelCoord fl{bx + (dx + lx - 1) / 2, by + (dy + ly - 1) / 2};
        const PixelCoord fr{bx + (dx - lx - 1) / 2, by + (dy - ly - 1) / 2};

        if (!in_comp(fl.i, fl.j)) {        // turn left, keep hugging `inner`
            outer = fl;
            dx = lx;
            dy = ly;
        } else if (!in_comp(fr.i, fr.j)) {  // straight
            inner = fl;
            outer = fr;
        } else {                            // turn right around FR
            inner = fr;
            dx = -lx;
            dy = -ly;
        }
        bx += dx;
        by += dy;
        if (bx - dx == start_bx && by - dy == start_by && dx == 1 && dy == 0 &&
            inner == s) {
            break;  // back at the start edge
        }
    }
    return curve;
}

int edge_distance(const DigitalCurve& curve, int i, int j) {
    const int n = curve.size();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw IndexOutOfRange("edge_distance: index out of range");
    const int d = std::abs(i - j);
    return std::min(d, n - d);
}

}  // namespace digicurv
