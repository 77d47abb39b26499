#pragma once

#include <string>
#include <vector>

#include "ipsf/connection.hpp"
#include "ipsf/moments.hpp"
#include "ipsf/scaling.hpp"

namespace ipsf {

// Serializable container for the three coefficient tables of one
// (N, m_max) pair. Values are exact rationals; the payload carries a
// checksum and a format version so stale or damaged caches are rejected
// rather than reinterpreted.
struct TableBundle {
    static constexpr int current_version = 1;

    int format_version = current_version;
    int order = 0;
    int m_max = 0;
    std::vector<Rational> mask;                    // a_k, k = -N+1 .. N-1
    std::vector<Rational> connection;              // L_k, k = 0 .. 2N-3
    std::vector<std::vector<Rational>> moments;    // H_{m,k}, k = 0 .. 2N-3
};

TableBundle bundle_tables(const RefinementMask& mask, const ConnectionTable& connection,
                          const MomentTable& moments);

RefinementMask mask_from_bundle(const TableBundle& bundle);
ConnectionTable connection_from_bundle(const TableBundle& bundle);
MomentTable moments_from_bundle(const TableBundle& bundle);

// Write the bundle as self-describing text, atomically
// (temp file + rename). Throws IoError on filesystem failure.
void store(const TableBundle& bundle, const std::string& path);

// Read and validate a stored bundle. Throws IoError (missing/unreadable),
// VersionError (unknown format_version) or IntegrityError (checksum
// mismatch).
TableBundle load(const std::string& path);

} // namespace ipsf
