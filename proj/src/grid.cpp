#include "digicurv/grid.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "digicurv/errors.hpp"

namespace digicurv {

std::vector<PixelCoord> PixelSet::inside_pixels() const {
    std::vector<PixelCoord> out;
    out.reserve(count);
    for (int j = 0; j < spec.height; ++j)
        for (int i = 0; i < spec.width; ++i)
            if (mask[static_cast<std::size_t>(j) * spec.width + i]) out.push_back({i, j});
    return out;
}

PixelSet gauss_discretize(const ImplicitShape& shape, const GridSpec& spec) {
    PixelSet px;
    px.spec = spec;
    px.mask.assign(static_cast<std::size_t>(spec.width) * spec.height, 0);
    for (int j = 0; j < spec.height; ++j) {
        for (int i = 0; i < spec.width; ++i) {
            if (shape.g(spec.grid_point(i, j)) <= 0.0) {
                px.set(i, j);
                if (i == 0 || j == 0 || i == spec.width - 1 || j == spec.height - 1) {
                    throw BorderContact("gauss_discretize: shape '" + shape.name +
                                        "' touches the grid border");
                }
            }
        }
    }
    return px;
}

GridSpec grid_for_shape(const ImplicitShape& shape, double h) {
    const double L = std::ceil((shape.extent + 2.0 * h) / h) * h;
    GridSpec spec;
    spec.h = h;
    spec.origin = {-L - 0.5 * h, -L - 0.5 * h};
    spec.width = spec.height = static_cast<int>(std::lround(2.0 * L / h)) + 1;
    return spec;
}

namespace {

/// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) continue;
        tok.push_back(static_cast<char>(c));
        while ((c = in.get()) != EOF && !std::isspace(c) && c != '#') {
            tok.push_back(static_cast<char>(c));
        }
        if (c == '#') in.unget();
        break;
    }
    if (tok.empty()) throw ParseError("PNM: unexpected end of header");
    return tok;
}

int next_int(std::istream& in, const char* what) {
    const std::string tok = next_token(in);
    try {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("PNM: bad ") + what + " '" + tok + "'");
    }
}

}  // namespace

PixelSet load_binary_image(const std::string& path, double h) {
    if (!(h > 0.0)) throw Error("load_binary_image: h must be positive");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");

    const std::string magic = next_token(in);
    if (magic != "P1" && magic != "P2" && magic != "P4" && magic != "P5")
        throw UnsupportedFormat("unsupported PNM magic '" + magic + "'");

    const int width = next_int(in, "width");
    const int height = next_int(in, "height");
    if (width < 1 || height < 1) throw ParseError("PNM: nonpositive dimensions");

    int maxval = 1;
    if (magic == "P2" || magic == "P5") {
        maxval = next_int(in, "maxval");
        if (maxval < 1 || maxval > 65535) throw ParseError("PNM: maxval out of range");
    }

    // foreground[r * width + c], r = 0 is the top image row
    std::vector<std::uint8_t> fg(static_cast<std::size_t>(width) * height, 0);

    if (magic == "P1") {
        for (std::size_t k = 0; k < fg.size(); ++k) {
            int c;
            do {
                c = in.get();
                if (c == '#')
                    while ((c = in.get()) != EOF && c != '\n') {
                    }
            } while (c != EOF && std::isspace(c));
            if (c != '0' && c != '1') throw ParseError("PBM: expected 0/1 digit");
            fg[k] = static_cast<std::uint8_t>(c == '1');
        }
    } else if (magic == "P2") {
        for (std::size_t k = 0; k < fg.size(); ++k) {
            const int v = next_int(in, "sample");
            if (v < 0 || v > maxval) throw ParseError("PGM: sample out of range");
            fg[k] = static_cast<std::uint8_t>(2 * v > maxval);
        }
    } else if (magic == "P4") {
        // single whitespace after header, then packed rows
        const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
        std::vector<char> row(row_bytes);
        for (int r = 0; r < height; ++r) {
            if (!in.read(row.data(), static_cast<std::streamsize>(row_bytes)))
                throw ParseError("PBM: truncated raster");
            for (int c = 0; c < width; ++c) {
                const unsigned byte = static_cast<unsigned char>(row[c / 8]);
                fg[static_cast<std::size_t>(r) * width + c] =
                    static_cast<std::uint8_t>((byte >> (7 - c % 8)) & 1u);
            }
        }
    } else {  // P5
        const int sample_bytes = maxval > 255 ? 2 : 1;
        std::vector<char> row(static_cast<std::size_t>(width) * sample_bytes);
        for (int r = 0; r < height; ++r) {
            if (!in.read(row.data(), static_cast<std::streamsize>(row.size())))
                throw ParseError("PGM: truncated raster");
            for (int c = 0; c < width; ++c) {
                int v;
                if (sample_bytes == 1) {
                    v = static_cast<unsigned char>(row[c]);
                } else {
                    v = (static_cast<unsigned char>(row[2 * c]) << 8) |
                        static_cast<unsigned char>(row[2 * c + 1]);
                }
                if (v > maxval) throw ParseError("PGM: sample out of range");
                fg[static_cast<std::size_t>(r) * width + c] =
                    static_cast<std::uint8_t>(2 * v > maxval);
            }
        }
    }

    PixelSet px;
    px.spec.h = h;
    px.spec.origin = {0.0, 0.0};
    px.spec.width = width;
    px.spec.height = height;
    px.mask.assign(fg.size(), 0);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            if (fg[static_cast<std::size_t>(r) * width + c]) px.set(c, height - 1 - r);
        }
    }
    return px;
}

}  // namespace digicurv
