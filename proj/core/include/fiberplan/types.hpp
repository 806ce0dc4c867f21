#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fiberplan {

/// Node identifier as it appears in map documents. Non-negative, unique per map.
using NodeId = std::int64_t;

/// Sentinel for "client not assigned to any PDO" in the integer representation.
inline constexpr NodeId kUnassigned = -1;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

enum class NodeKind {
    EquipmentCandidate,  ///< may host a PDO
    ClientSdu,           ///< single dwelling, demand fixed at 1
    ClientMdu,           ///< building, demand >= 1 ports
    OltRoot,             ///< network starting point, exactly one per map
};

enum class RouteKind { Aerial, Buried };

struct MapNode {
    NodeId id = 0;
    Point position;
    NodeKind kind = NodeKind::EquipmentCandidate;
    int demand = 0;  ///< ports of fibre demand; 0 unless client

    bool is_client() const {
        return kind == NodeKind::ClientSdu || kind == NodeKind::ClientMdu;
    }
};

struct MapEdge {
    NodeId a = 0;
    NodeId b = 0;
    double length_m = 0.0;
    RouteKind route = RouteKind::Aerial;
};

// Error taxonomy. Parse/format problems, referential problems and bad
// configuration are kept apart so the CLI can map them to exit codes.

struct MapFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MapIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Map cannot support any design (e.g. OLT root cut off from every candidate).
struct UnusableMapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleRouteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* to_string(NodeKind kind);
const char* to_string(RouteKind route);

}  // namespace fiberplan
