#pragma once

#include <array>
#include <string>
#include <vector>

#include "braidpos/braid.hpp"

namespace braidpos {

// X(a,b,c,d): arcs around the crossing counterclockwise, a the incoming
// under-arc, so the under-strand runs a -> c. The over-strand runs d -> b for
// a positive crossing and b -> d for a negative one.
struct PDCrossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int over_in_port() const { return sign > 0 ? 3 : 1; }
  int over_out_port() const { return sign > 0 ? 1 : 3; }
  bool is_incoming(int port) const { return port == 0 || port == over_in_port(); }
  // The port reached by continuing straight through the crossing.
  int through(int port) const { return (port + 2) % 4; }
};

struct PDCode {
  std::string name;
  std::vector<PDCrossing> crossings;
  int free_loops = 0;  // crossingless components

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// Line format:  name: PD[X(a,b,c,d),...] O[db,bd,...] [loops=k]
// Each O token names the over-strand's entry and exit ports.
PDCode parse_pd_line(const std::string& line);
std::vector<PDCode> load_pd_file(const std::string& path);
const PDCode& find_pd(const std::vector<PDCode>& all, const std::string& name);
std::string to_string(const PDCode& d);

// Throws std::invalid_argument unless every arc appears once as an outgoing
// and once as an incoming port and the rotation system is planar.
void validate_pd(const PDCode& d);

// Face label of every dart 4*x + p; that face fills the corner of crossing x
// between ports p-1 and p.
std::vector<int> pd_faces(const PDCode& d);

int pd_writhe(const PDCode& d);
int pd_components(const PDCode& d);
PDCode pd_mirror(const PDCode& d);
PDCode pd_from_braid(const BraidWord& w);

}  // namespace braidpos
