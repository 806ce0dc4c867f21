#include "fiberplan/allocation.hpp"

#include <algorithm>
#include <deque>

namespace fiberplan {

AllocationResult allocate(const std::vector<std::uint8_t>& pdo_mask, const NetworkMap& map,
                          const BusinessRules& rules, const DropTable& drop_table) {
    const int usable = usable_ports(rules);
    std::vector<int> remaining(pdo_mask.size(), 0);
    for (std::size_t m = 0; m < pdo_mask.size(); ++m) {
        if (pdo_mask[m]) {
            remaining[m] = usable;
        }
    }

    AllocationResult result;
    result.assignment.assign(map.clients().size(), kUnassigned);

    for (std::size_t c = 0; c < map.clients().size(); ++c) {
        const int demand = map.nodes()[map.clients()[c]].demand;
        NodeId nearest_active = kUnassigned;
        for (const DropOption& opt : drop_table.options(c)) {
            const int pos = map.candidate_position(opt.candidate);
            if (pos < 0 || !pdo_mask[pos]) {
                continue;
            }
            if (nearest_active == kUnassigned) {
                nearest_active = opt.candidate;
            }
            if (remaining[pos] >= demand) {
                remaining[pos] -= demand;
                result.assignment[c] = opt.candidate;
                if (opt.candidate != nearest_active) {
                    result.misplaced.push_back(c);
                }
                break;
            }
        }
    }
    return result;
}

namespace {

struct SearchState {
    std::vector<int> remaining;                    ///< free ports per mask position
    std::vector<std::vector<std::size_t>> on_pdo;  ///< client positions per mask position
    std::vector<double> drop_dist;                 ///< current drop distance per client
};

SearchState build_state(const std::vector<NodeId>& assignment,
                        const std::vector<std::uint8_t>& pdo_mask, const NetworkMap& map,
                        const BusinessRules& rules, const DropTable& drop_table) {
    SearchState st;
    const int usable = usable_ports(rules);
    st.remaining.assign(pdo_mask.size(), 0);
    st.on_pdo.resize(pdo_mask.size());
    st.drop_dist.assign(assignment.size(), 0.0);
    for (std::size_t m = 0; m < pdo_mask.size(); ++m) {
        if (pdo_mask[m]) {
            st.remaining[m] = usable;
        }
    }
    for (std::size_t c = 0; c < assignment.size(); ++c) {
        if (assignment[c] == kUnassigned) {
            continue;
        }
        const int pos = map.candidate_position(assignment[c]);
        st.remaining[pos] -= map.nodes()[map.clients()[c]].demand;
        st.on_pdo[pos].push_back(c);
        st.drop_dist[c] = drop_table.distance_to(c, assignment[c]);
    }
    return st;
}

}  // namespace

void local_search(std::vector<NodeId>& assignment, const std::vector<std::size_t>& misplaced,
                  const std::vector<std::uint8_t>& pdo_mask, const NetworkMap& map,
                  const BusinessRules& rules, const DropTable& drop_table) {
    if (misplaced.empty()) {
        return;
    }
    SearchState st = build_state(assignment, pdo_mask, map, rules, drop_table);
    std::deque<std::size_t> queue(misplaced.begin(), misplaced.end());

    while (!queue.empty()) {
        const std::size_t c = queue.front();
        queue.pop_front();
        if (assignment[c] == kUnassigned) {
            continue;
        }
        const int c_pos = map.candidate_position(assignment[c]);
        const int c_demand = map.nodes()[map.clients()[c]].demand;

        bool swapped = false;
        for (const DropOption& opt : drop_table.options(c)) {
            const int p = map.candidate_position(opt.candidate);
            if (p < 0 || p == c_pos || !pdo_mask[p] || st.remaining[p] < 1) {
                continue;
            }
            for (std::size_t o : st.on_pdo[p]) {
                const int o_demand = map.nodes()[map.clients()[o]].demand;
                const double o_new = drop_table.distance_to(o, assignment[c]);
                if (o_new < 0.0) {
                    continue;  // o would land beyond its drop limit
                }
                if (st.remaining[p] + o_demand < c_demand ||
                    st.remaining[c_pos] + c_demand < o_demand) {
                    continue;
                }
                const double before = st.drop_dist[c] + st.drop_dist[o];
                const double after = opt.distance_m + o_new;
                if (!(after < before)) {
                    continue;  // ties rejected, keeps the search terminating
                }

                const NodeId c_old = assignment[c];
                st.remaining[c_pos] += c_demand - o_demand;
                st.remaining[p] += o_demand - c_demand;
                std::erase(st.on_pdo[c_pos], c);
                std::erase(st.on_pdo[p], o);
                st.on_pdo[c_pos].push_back(o);
                st.on_pdo[p].push_back(c);
                std::sort(st.on_pdo[c_pos].begin(), st.on_pdo[c_pos].end());
                std::sort(st.on_pdo[p].begin(), st.on_pdo[p].end());
                assignment[c] = opt.candidate;
                assignment[o] = c_old;
                st.drop_dist[c] = opt.distance_m;
                st.drop_dist[o] = o_new;
                queue.push_back(o);
                swapped = true;
                break;
            }
            if (swapped) {
                break;
            }
        }
    }
}

}  // namespace fiberplan
