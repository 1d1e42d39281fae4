#ifndef BURLING_FIXTURES_HPP
#define BURLING_FIXTURES_HPP

#include <string>
#include <vector>

#include "geometry.hpp"

namespace burling {

// Hand-laid frame scenes for the three classical non-Burling shapes.
// "wheel" and "necklace" pass the restricted validator and fail the strict
// one. "k5-subdivision" carries the correct intersection graph but cannot
// satisfy every restricted clause (see the project notes); its layout fails
// clause (iii) at the frame joining the two long pokers.
std::vector<std::string> fixture_names();
Scene fixture_scene(const std::string& name);

// The abstract graph each fixture is meant to realize.
Graph fixture_graph(const std::string& name);

}  // namespace burling

#endif
