#include "hyperweight/constructions/projective_plane.hpp"

#include <algorithm>
#include <cstdint>

#include "hyperweight/constructions/finite_field.hpp"

namespace hyperweight {

namespace {

std::vector<std::array<std::size_t, 3>> canonical_representatives(std::size_t q) {
    std::vector<std::array<std::size_t, 3>> reps;
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            for (std::size_t c = 0; c < q; ++c) {
                std::array<std::size_t, 3> v{a, b, c};
                std::size_t last = 3;
                for (std::size_t i = 3; i-- > 0;) {
                    if (v[i] != 0) {
                        last = i;
                        break;
                    }
                }
                if (last < 3 && v[last] == 1) {
                    reps.push_back(v);
                }
            }
        }
    }
    return reps;
}

}  // namespace

bool IncidenceStructure::incident(std::size_t point, std::size_t line) const {
    const auto& l = lines[line];
    return std::binary_search(l.begin(), l.end(), point);
}

std::size_t IncidenceStructure::common_line(std::size_t p1, std::size_t p2) const {
    for (std::size_t l : lines_through[p1]) {
        if (incident(p2, l)) {
            return l;
        }
    }
    return lines.size();
}

IncidenceStructure projective_plane(std::size_t q) {
    const FiniteField field(q);
    IncidenceStructure plane;
    plane.q = q;
    plane.points = canonical_representatives(q);
    plane.line_forms = plane.points;
    plane.lines.resize(plane.line_forms.size());
    plane.lines_through.resize(plane.points.size());
    for (std::size_t l = 0; l < plane.line_forms.size(); ++l) {
        const auto& f = plane.line_forms[l];
        for (std::size_t p = 0; p < plane.points.size(); ++p) {
            const auto& x = plane.points[p];
            std::size_t dot = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                dot = field.add(dot, field.mul(f[i], x[i]));
            }
            if (dot == 0) {
                plane.lines[l].push_back(p);
                plane.lines_through[p].push_back(l);
            }
        }
    }
    return plane;
}

PlaneInvariants verify_plane(const IncidenceStructure& plane) {
    const std::size_t q = plane.q;
    const std::size_t expected = q * q + q + 1;
    PlaneInvariants inv;
    inv.point_count = plane.points.size() == expected;
    inv.line_count = plane.lines.size() == expected;
    inv.line_size = std::all_of(plane.lines.begin(), plane.lines.end(),
                                [&](const auto& l) { return l.size() == q + 1; });

    const std::size_t np = plane.points.size();
    std::vector<std::size_t> on_lines(np, 0);
    std::vector<std::uint16_t> pair_lines(np * np, 0);
    for (const auto& l : plane.lines) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i] >= np) {
                return inv;
            }
            ++on_lines[l[i]];
            for (std::size_t j = i + 1; j < l.size(); ++j) {
                ++pair_lines[l[i] * np + l[j]];
                ++pair_lines[l[j] * np + l[i]];
            }
        }
    }
    inv.point_degree = std::all_of(on_lines.begin(), on_lines.end(),
                                   [&](std::size_t d) { return d == q + 1; });
    inv.unique_joining_line = true;
    for (std::size_t a = 0; a < np; ++a) {
        for (std::size_t b = a + 1; b < np; ++b) {
            if (pair_lines[a * np + b] != 1) {
                inv.unique_joining_line = false;
            }
        }
    }
    return inv;
}

}  // namespace hyperweight
