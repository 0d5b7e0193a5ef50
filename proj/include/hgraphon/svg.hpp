#pragma once

#include "hgraphon/montecarlo.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hgraphon {

// Hand-emitted line chart of p_hat against n (log x axis, one polyline per
// series, Wilson CI whiskers). Element order is stable so the output is
// byte-reproducible.
std::string render_phat_chart(
    const std::vector<std::pair<std::string, std::vector<ExperimentRow>>>& series);

}  // namespace hgraphon
