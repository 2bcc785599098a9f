#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperweight/constructions/blowup.hpp"
#include "hyperweight/constructions/projective_plane.hpp"
#include "hyperweight/core/coloring.hpp"

namespace hyperweight {

/// The argument does not apply (w too large, or the hypergraph is not the
/// blow-up of the given plane).
class CertificateRejected : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ColineWitness {
    std::size_t p1 = 0;
    std::size_t p2 = 0;
    std::size_t line = 0;
};

/// Two flags on one line edge whose colors agree once only point-edge
/// weights are counted; they share a line edge, so any weighting of that edge
/// leaves it without a rainbow.
struct CollisionWitness {
    std::size_t p1 = 0;
    std::size_t p2 = 0;
    std::size_t line = 0;
    Vertex a = 0;
    Vertex b = 0;
    EdgeIndex line_edge = 0;
};

struct EnumerationReport {
    std::uint64_t assignments_checked = 0;
    std::uint64_t witnesses_verified = 0;
};

struct PigeonholeCertificate {
    std::size_t q = 0;
    std::size_t e1_count = 0;
    Weight w = 0;
    std::vector<ColineWitness> coline_witness;  // one per unordered point pair
    std::optional<EnumerationReport> enumeration;
};

inline constexpr std::uint64_t kMaxCertificateEnumeration = 100'000'000;

/**
 * Certifies that the blow-up (possibly extended) is not strongly w-weighted:
 * |E1| = q^2+q+1 > w, so two point edges share a weight, and their points lie
 * on a common line whose edge then holds two equal colors.
 *
 * With `enumerate`, every assignment of {1..w} to E1 is visited and its
 * collision witness is re-checked against the hypergraph itself. Throws
 * CertificateRejected if w > q^2+q, on structure mismatch, or if the
 * enumeration would exceed kMaxCertificateEnumeration assignments.
 */
PigeonholeCertificate blowup_unsat_certificate(const IncidenceStructure& plane,
                                               const BlowupHypergraph& blowup, Weight w,
                                               bool enumerate = false);

/// Witness for one E1 assignment (`e1_weights[p]` weights e(p)). Requires two
/// equal entries; throws std::invalid_argument otherwise.
CollisionWitness find_collision_witness(const IncidenceStructure& plane,
                                        const BlowupHypergraph& blowup,
                                        std::span<const Weight> e1_weights);

}  // namespace hyperweight
