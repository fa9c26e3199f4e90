#pragma once

#include "braidpos/laurent.hpp"
#include "braidpos/pd.hpp"

namespace braidpos {

// Independent HOMFLYPT evaluation by a skein resolution tree that switches
// crossings until the diagram is descending. Exponential in the crossing count.
LaurentPoly2 homfly_diagram_oracle(const PDCode& d, int max_crossings = 14);

}  // namespace braidpos
