#include "fiberplan/rules.hpp"

#include <cmath>
#include <string>

#include "fiberplan/types.hpp"

namespace fiberplan {

int usable_ports(const BusinessRules& rules) {
    if (rules.port_limit < 1) {
        throw ConfigError("port_limit must be >= 1");
    }
    if (rules.port_margin < 0.0 || rules.port_margin >= 1.0) {
        throw ConfigError("port_margin must lie in [0, 1)");
    }
    // The nudge keeps products like 10 * 0.3 from flooring one port too low.
    const int reserved = static_cast<int>(std::floor(rules.port_limit * rules.port_margin + 1e-9));
    const int usable = rules.port_limit - reserved;
    if (usable < 1) {
        throw ConfigError("port margin leaves no usable ports (limit " +
                          std::to_string(rules.port_limit) + ", margin " +
                          std::to_string(rules.port_margin) + ")");
    }
    return usable;
}

}  // namespace fiberplan
