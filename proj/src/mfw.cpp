#include "braidpos/homfly.hpp"

namespace braidpos {

CheckResult mfw_check(const LaurentPoly2& p, int sl, int chi, bool homogeneous) {
  CheckResult r;
  const int lo = min_deg_v(p);
  if (sl + 1 > lo) {
    r.pass = false;
    r.message = "SL+1 = " + std::to_string(sl + 1) + " exceeds min deg_v P = " + std::to_string(lo);
    return r;
  }
  if (homogeneous && lo > 1 - chi) {
    r.pass = false;
    r.message = "min deg_v P = " + std::to_string(lo) + " exceeds 1-chi = " + std::to_string(1 - chi);
    return r;
  }
  r.message = std::to_string(sl + 1) + " <= " + std::to_string(lo) +
              (homogeneous ? " <= " + std::to_string(1 - chi) : std::string());
  return r;
}

bool homogeneous_positivity_criterion(const LaurentPoly2& p, int chi) {
  return min_deg_v(p) == 1 - chi;
}

int mfw_braid_index_lower_bound(const LaurentPoly2& p) {
  int spread = max_deg_v(p) - min_deg_v(p);
  return (spread + 1) / 2 + 1;
}

}  // namespace braidpos
