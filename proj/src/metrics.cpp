#include "arscb/metrics.hpp"

#include <algorithm>

namespace arscb {

Eigen::VectorXd with_step_jumps(const Eigen::VectorXd& grid, const StepCdf& step) {
    const Eigen::VectorXd& jumps = step.jump_points();
    Eigen::VectorXd out(grid.size() + 2 * jumps.size());
    out.head(grid.size()) = grid;
    out.segment(grid.size(), jumps.size()) = jumps;
    out.tail(jumps.size()) = jumps.array() - 1e-12;
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace arscb
