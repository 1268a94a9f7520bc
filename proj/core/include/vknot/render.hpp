#pragma once

#include <string>

#include "vknot/gauss.hpp"

namespace vknot {

// Renders the chord-diagram picture of a Gauss diagram as SVG: one circle
// per component laid out left to right, endpoints evenly spaced from the
// marked basepoint, arrows drawn tail to head with the sign at the
// midpoint. Byte-deterministic for a fixed input.
std::string render_svg(const GaussDiagram& d);

}  // namespace vknot
