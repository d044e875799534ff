#pragma once

#include "rtw/lagrangian.hpp"
#include "rtw/model.hpp"

namespace rtw {

struct BetaResult {
    Rat value;  // maximum edge density, i.e. twice the Lagrangian maximum
    WCCG witness;
    LagrangianResult witness_result;
    size_t candidates_scored = 0;
};

// Largest density of a weighted colored complete graph containing no blue
// generalized K_p and no red generalized K_q, over all t <= t_max (<= 6).
// A zero-weight pair never helps (mass shifts off one endpoint preserve the
// maximum), so the search runs over weights {1/2, 1} only.
BetaResult beta_search(int p_blue, int q_red, int t_max);

}  // namespace rtw
