#pragma once

#include <optional>
#include <string>

#include "flexvar/flex.hpp"

namespace flexvar {

// Named surfaces:
//   plane                    f = 0            on [0,1]^2
//   paraboloid               f = (u^2+v^2)/2  on [-1,1]^2
//   saddle                   f = u*v          on [-1,1]^2
//   cap-R-r (default 1-0.5)  upward spherical bowl f = R - sqrt(R^2-u^2-v^2)
//                            over the disk of radius r, so H = 1/R
// Anything else is parsed as an expression over the default domain [0,1]^2.
MongePatch catalog_surface(const std::string& spec);
bool is_catalog_surface_name(const std::string& spec);

// Smooth bump exp(1 - 1/(1 - rho^2)) supported on the disk of radius r0
// about (cu,cv); identically zero outside, with all derivatives vanishing
// at the support boundary.
Field bump_field(double cu, double cv, double r0, double amplitude = 1.0);

// Named flexes, resolved against a patch (rigid motions need f):
//   rigid:ax,ay,az;bx,by,bz   v = a + b x x
//   rigid-translation         a = (0.3,-0.2,0.5)
//   rigid-rotation            b = (0.4,0.25,-0.3)
//   bump                      (0, 0, bump centered in the domain)
// Anything containing two commas is parsed as "xi,eta,zeta" expressions.
// Returns nothing for "construct:..." requests (handled by the caller).
std::optional<FlexField> catalog_flex(const std::string& spec, const MongePatch& patch);

}  // namespace flexvar
