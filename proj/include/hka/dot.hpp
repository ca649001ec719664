#pragma once

#include <string>

#include "hka/coherence.hpp"
#include "hka/polygraph.hpp"

namespace hka {

/// Presentation as a graph: objects are nodes, 1-generators labeled arrows.
std::string polygraph_dot(const PolygraphSpec& p);

/// A paving certificate as a layered diagram: one row of boundary zigzags
/// per tile application, tile edges labeled by the extension cell used.
std::string certificate_dot(const PolygraphSpec& p,
                            const PavingCertificate& c);

}  // namespace hka
