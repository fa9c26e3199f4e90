#pragma once

#include <vector>

#include "braidpos/braid.hpp"
#include "braidpos/pd.hpp"
#include "braidpos/seifert.hpp"

namespace braidpos {

struct BunchingStep {
  int moved = -1;   // circle replaced by its bunched copy
  int target = -1;  // circle it now runs parallel to
  int face = -1;
  int incoherent_before = 0;
  int incoherent_after = 0;
};

struct BraidingResult {
  BraidWord word;
  std::vector<BunchingStep> steps;
  int non_decreasing_steps = 0;  // steps taken without a strict decrease
  SeifertStructure surface;
};

// Pushes circle `moved` through face `face` so that it runs parallel to
// `target` on that side, passing over every band arc met on the way.
void disk_bunch(SeifertStructure& s, int moved, int target, int face);

// Reads the closed braid of a surface whose circles are pairwise coherent.
BraidWord read_braid(const SeifertStructure& s);

BraidingResult braid_diagram(const PDCode& d);
BraidWord braid_from_diagram(const PDCode& d);

}  // namespace braidpos
