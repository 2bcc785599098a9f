#include "hyperweight/solver/certificate.hpp"

#include <string>

namespace hyperweight {

CollisionWitness find_collision_witness(const IncidenceStructure& plane,
                                        const BlowupHypergraph& blowup,
                                        std::span<const Weight> e1_weights) {
    const std::size_t np = plane.points.size();
    for (std::size_t p1 = 0; p1 < np; ++p1) {
        for (std::size_t p2 = p1 + 1; p2 < np; ++p2) {
            if (e1_weights[p1] != e1_weights[p2]) {
                continue;
            }
            CollisionWitness wit;
            wit.p1 = p1;
            wit.p2 = p2;
            wit.line = plane.common_line(p1, p2);
            wit.a = blowup.flag_vertex(p1, wit.line);
            wit.b = blowup.flag_vertex(p2, wit.line);
            wit.line_edge = blowup.line_edges[wit.line];
            return wit;
        }
    }
    throw std::invalid_argument("point-edge weights are pairwise distinct");
}

PigeonholeCertificate blowup_unsat_certificate(const IncidenceStructure& plane,
                                               const BlowupHypergraph& blowup, Weight w,
                                               bool enumerate) {
    const std::size_t q = plane.q;
    const std::size_t np = plane.points.size();
    if (blowup.q != q || blowup.point_edges.size() != np || blowup.line_edges.size() != np) {
        throw CertificateRejected("hypergraph is not the blow-up of this plane");
    }
    if (w < 1) {
        throw CertificateRejected("weight bound must be at least 1");
    }
    if (static_cast<std::size_t>(w) >= np) {
        throw CertificateRejected("pigeonhole needs |E1| = " + std::to_string(np) +
                                  " > w = " + std::to_string(w));
    }
    const Hypergraph& h = blowup.graph;

    PigeonholeCertificate cert;
    cert.q = q;
    cert.e1_count = np;
    cert.w = w;
    for (std::size_t p1 = 0; p1 < np; ++p1) {
        for (std::size_t p2 = p1 + 1; p2 < np; ++p2) {
            const std::size_t line = plane.common_line(p1, p2);
            if (line == plane.lines.size()) {
                throw CertificateRejected("points " + std::to_string(p1) + " and " +
                                          std::to_string(p2) + " share no line");
            }
            const EdgeIndex f = blowup.line_edges[line];
            if (!h.edge_contains(f, blowup.flag_vertex(p1, line)) ||
                !h.edge_contains(f, blowup.flag_vertex(p2, line))) {
                throw CertificateRejected("line edge does not hold both flags");
            }
            cert.coline_witness.push_back({p1, p2, line});
        }
    }
    if (!enumerate) {
        return cert;
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < np; ++i) {
        total *= static_cast<std::uint64_t>(w);
        if (total > kMaxCertificateEnumeration) {
            throw CertificateRejected("enumeration of " + std::to_string(w) + "^" +
                                      std::to_string(np) + " assignments is too large");
        }
    }

    // The E1 edge through each vertex, read from the hypergraph rather than
    // from the flag table, so witnesses are checked against the real edges.
    std::vector<std::size_t> point_of_vertex(h.num_vertices(), np);
    for (std::size_t p = 0; p < np; ++p) {
        for (Vertex v : h.edge(blowup.point_edges[p])) {
            point_of_vertex[v] = p;
        }
    }

    EnumerationReport report;
    std::vector<Weight> weights(np, 1);
    while (true) {
        ++report.assignments_checked;
        auto wit = find_collision_witness(plane, blowup, weights);
        const std::size_t pa = point_of_vertex[wit.a];
        const std::size_t pb = point_of_vertex[wit.b];
        if (pa < np && pb < np && pa != pb && weights[pa] == weights[pb] &&
            h.edge_contains(wit.line_edge, wit.a) && h.edge_contains(wit.line_edge, wit.b)) {
            ++report.witnesses_verified;
        }
        std::size_t i = 0;
        while (i < np && weights[i] == w) {
            weights[i++] = 1;
        }
        if (i == np) {
            break;
        }
        ++weights[i];
    }
    cert.enumeration = report;
    return cert;
}

}  // namespace hyperweight
