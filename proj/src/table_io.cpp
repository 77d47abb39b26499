#include "ipsf/table_io.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ipsf/errors.hpp"

namespace ipsf {

namespace {

constexpr const char* magic = "ipsf-tables";

std::uint64_t fnv1a(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : payload) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string render_payload(const TableBundle& b) {
    std::ostringstream out;
    out << "order " << b.order << "\n";
    out << "m_max " << b.m_max << "\n";
    const int n = b.order;
    for (int k = -n + 1; k <= n - 1; ++k) {
        out << "mask " << k << " " << format_rational(b.mask[static_cast<std::size_t>(k + n - 1)])
            << "\n";
    }
    for (int k = 0; k < static_cast<int>(b.connection.size()); ++k) {
        out << "connection " << k << " "
            << format_rational(b.connection[static_cast<std::size_t>(k)]) << "\n";
    }
    for (int m = 0; m < static_cast<int>(b.moments.size()); ++m) {
        const auto& row = b.moments[static_cast<std::size_t>(m)];
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            out << "moment " << m << " " << k << " "
                << format_rational(row[static_cast<std::size_t>(k)]) << "\n";
        }
    }
    return out.str();
}

} // namespace

TableBundle bundle_tables(const RefinementMask& mask, const ConnectionTable& connection,
                          const MomentTable& moments) {
    const int n = mask.order().value();
    if (connection.order() != mask.order() || moments.order() != mask.order()) {
        throw ValidationError("cannot bundle tables of different orders");
    }
    TableBundle b;
    b.order = n;
    b.m_max = moments.m_max();
    for (int k = -n + 1; k <= n - 1; ++k) b.mask.push_back(mask.at(k));
    for (int k = 0; k <= connection.band(); ++k) b.connection.push_back(connection.at(k));
    b.moments.resize(static_cast<std::size_t>(b.m_max + 1));
    for (int m = 0; m <= b.m_max; ++m) {
        for (int k = 0; k <= moments.band(); ++k) {
            b.moments[static_cast<std::size_t>(m)].push_back(moments.rational_at(m, k));
        }
    }
    return b;
}

RefinementMask mask_from_bundle(const TableBundle& bundle) {
    return RefinementMask::from_coefficients(ScaleOrder(bundle.order), bundle.mask);
}

ConnectionTable connection_from_bundle(const TableBundle& bundle) {
    return ConnectionTable::from_values(ScaleOrder(bundle.order), bundle.connection);
}

MomentTable moments_from_bundle(const TableBundle& bundle) {
    return MomentTable(ScaleOrder(bundle.order), bundle.m_max, bundle.moments);
}

void store(const TableBundle& bundle, const std::string& path) {
    const std::string payload = render_payload(bundle);
    char checksum[32];
    std::snprintf(checksum, sizeof checksum, "%016llx",
                  static_cast<unsigned long long>(fnv1a(payload)));

    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out << magic << " " << bundle.format_version << "\n";
        out << payload;
        out << "checksum " << checksum << "\n";
        if (!out.good()) throw IoError("write failure on '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move table bundle into place at '" + path + "'");
    }
}

namespace {

void parse_payload(std::istringstream& ps, TableBundle& b) {
    std::string line;
    while (std::getline(ps, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "order") {
            ls >> b.order;
            if (b.order < 2 || b.order % 2 != 0) {
                throw IntegrityError("table bundle has invalid order");
            }
            b.mask.assign(static_cast<std::size_t>(2 * b.order - 1), Rational(0));
            b.connection.assign(static_cast<std::size_t>(2 * b.order - 2), Rational(0));
        } else if (tag == "m_max") {
            if (b.order < 0) throw IntegrityError("table bundle lists m_max before order");
            ls >> b.m_max;
            if (b.m_max < 0) throw IntegrityError("table bundle has invalid m_max");
            b.moments.assign(static_cast<std::size_t>(b.m_max + 1),
                             std::vector<Rational>(static_cast<std::size_t>(2 * b.order - 2),
                                                   Rational(0)));
        } else if (tag == "mask") {
            int k = 0;
            std::string value;
            ls >> k >> value;
            b.mask.at(static_cast<std::size_t>(k + b.order - 1)) = parse_rational(value);
        } else if (tag == "connection") {
            int k = 0;
            std::string value;
            ls >> k >> value;
            b.connection.at(static_cast<std::size_t>(k)) = parse_rational(value);
        } else if (tag == "moment") {
            int m = 0, k = 0;
            std::string value;
            ls >> m >> k >> value;
            b.moments.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(k)) =
                parse_rational(value);
        } else {
            throw IntegrityError("table bundle has unrecognized line '" + line + "'");
        }
    }
}

} // namespace

TableBundle load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open table bundle '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw IoError("table bundle '" + path + "' is empty");
    {
        std::istringstream hs(line);
        std::string tag;
        int version = -1;
        hs >> tag >> version;
        if (tag != magic) throw IoError("'" + path + "' is not a table bundle");
        if (version != TableBundle::current_version) {
            throw VersionError("table bundle version " + std::to_string(version) +
                               " is not supported (expected " +
                               std::to_string(TableBundle::current_version) + ")");
        }
    }

    std::string payload;
    std::string checksum_line;
    while (std::getline(in, line)) {
        if (line.rfind("checksum ", 0) == 0) {
            checksum_line = line;
            break;
        }
        payload += line;
        payload += "\n";
    }
    if (checksum_line.empty()) throw IntegrityError("table bundle '" + path + "' has no checksum");
    char expected[32];
    std::snprintf(expected, sizeof expected, "%016llx",
                  static_cast<unsigned long long>(fnv1a(payload)));
    if (checksum_line != std::string("checksum ") + expected) {
        throw IntegrityError("table bundle '" + path + "' failed its checksum");
    }

    TableBundle b;
    b.order = -1;
    b.m_max = -1;
    std::istringstream ps(payload);
    try {
        parse_payload(ps, b);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw IntegrityError("table bundle '" + path + "' is malformed: " + std::string(e.what()));
    }
    if (b.order < 0 || b.m_max < 0) {
        throw IntegrityError("table bundle is missing its order or m_max");
    }
    return b;
}

} // namespace ipsf
