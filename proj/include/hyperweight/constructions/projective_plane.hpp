#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hyperweight {

/**
 * The Desarguesian projective plane PG(2, q).
 *
 * Points are the one-dimensional subspaces of GF(q)^3, each stored by its
 * representative whose last nonzero coordinate is 1; lines are the nonzero
 * linear forms up to scaling, stored the same way. Both lists are in
 * lexicographic order of their coordinate triples (x0, x1, x2), compared by
 * field-element index. A point lies on a line when the form vanishes on it.
 */
struct IncidenceStructure {
    std::size_t q = 0;
    std::vector<std::array<std::size_t, 3>> points;
    std::vector<std::array<std::size_t, 3>> line_forms;
    std::vector<std::vector<std::size_t>> lines;           // sorted point indices
    std::vector<std::vector<std::size_t>> lines_through;   // per point, sorted line indices

    bool incident(std::size_t point, std::size_t line) const;

    /// Index of a line containing both points, or lines.size() if none.
    std::size_t common_line(std::size_t p1, std::size_t p2) const;
};

/// Throws std::invalid_argument if q is not a supported prime power.
IncidenceStructure projective_plane(std::size_t q);

/// Outcome of the exhaustive incidence check; every field true for a valid plane.
struct PlaneInvariants {
    bool point_count = false;       // |P| = q^2 + q + 1
    bool line_count = false;        // |L| = q^2 + q + 1
    bool line_size = false;         // every line has q + 1 points
    bool point_degree = false;      // every point lies on q + 1 lines
    bool unique_joining_line = false;  // every point pair lies on exactly one line

    bool all() const {
        return point_count && line_count && line_size && point_degree && unique_joining_line;
    }
};

/// Recomputes incidences from `lines` only, independent of `lines_through`.
PlaneInvariants verify_plane(const IncidenceStructure& plane);

}  // namespace hyperweight
