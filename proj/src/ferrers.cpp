#include "pwb/ferrers.hpp"

namespace pwb {

namespace {

std::string render_rows(const std::vector<std::int64_t>& row_lengths,
                        const std::vector<std::int64_t>& marked_prefix) {
    std::string out;
    for (std::size_t r = 0; r < row_lengths.size(); ++r) {
        std::int64_t marked = r < marked_prefix.size() ? marked_prefix[r] : 0;
        for (std::int64_t c = 0; c < row_lengths[r]; ++c) {
            if (c)
                out += ' ';
            out += c < marked ? 'o' : '.';
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_ferrers(const Partition& p) {
    return render_rows(p.parts(), {});
}

std::string render_ferrers_with_polygon(const Partition& p, std::int64_t k,
                                        std::int64_t m) {
    PolygonShape shape = km_polygon_shape(k, m);
    return render_rows(p.parts(), shape.rows);
}

std::string render_polygon(const PolygonShape& shape) {
    return render_rows(shape.rows, shape.rows);
}

} // namespace pwb
