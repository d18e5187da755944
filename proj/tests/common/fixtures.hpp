#pragma once

#include "ube/graph.hpp"

namespace fixtures {

// s=0, a=1, b=2, t=3; a left of b.
inline ube::PlaneStGraph diamond() {
    ube::LrOrders lr;
    lr.out = {{0, 1}, {2}, {3}, {}};
    lr.in = {{}, {0}, {1}, {2, 3}};
    return ube::plane_from_lr(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, lr);
}

// s=0, a=1, t=2; (s,t) rightmost.
inline ube::PlaneStGraph t3() {
    ube::LrOrders lr;
    lr.out = {{0, 2}, {1}, {}};
    lr.in = {{}, {0}, {1, 2}};
    return ube::plane_from_lr(3, {{0, 1}, {1, 2}, {0, 2}}, lr);
}

inline ube::PlaneStGraph k2() {
    ube::LrOrders lr;
    lr.out = {{0}, {}};
    lr.in = {{}, {0}};
    return ube::plane_from_lr(2, {{0, 1}}, lr);
}

inline ube::PlaneStGraph path3() {
    ube::LrOrders lr;
    lr.out = {{0}, {1}, {}};
    lr.in = {{}, {0}, {1}};
    return ube::plane_from_lr(3, {{0, 1}, {1, 2}}, lr);
}

// u=0, a=1, v=2, b=3; the transitive edge (u,v) lies between u-a-v and u-b-v.
inline ube::PlaneStGraph forbidden_configuration() {
    ube::LrOrders lr;
    lr.out = {{0, 2, 3}, {1}, {}, {4}};
    lr.in = {{}, {0}, {1, 2, 4}, {3}};
    return ube::plane_from_lr(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 2}}, lr);
}

}  // namespace fixtures
