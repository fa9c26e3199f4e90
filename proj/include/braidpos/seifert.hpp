#pragma once

#include <string>
#include <vector>

#include "braidpos/homfly.hpp"
#include "braidpos/pd.hpp"

namespace braidpos {

// Seifert circles and band arcs as a planar map on S^2. Vertices sit on
// circles: an attach vertex ends one band arc, a crossing vertex is a band arc
// passing over the circle. Every vertex carries its darts in counterclockwise
// order; the face of a dart is the one on its right.
struct SeifertStructure {
  struct Dart {
    int origin = -1;
    int twin = -1;
    int circle = -1;  // circle darts only
    bool forward = false;
    int band = -1;  // band darts only
  };

  std::vector<Dart> darts;
  std::vector<std::vector<int>> rotation;  // per vertex
  std::vector<int> band_sign;              // per band
  int circle_count = 0;
  int free_loops = 0;  // circles carrying no vertex

  // Derived by rebuild().
  std::vector<int> face_of;             // per dart
  int face_count = 0;
  std::vector<int> region_of_face;
  int region_count = 0;
  std::vector<int> left_region, right_region;  // per circle
  std::vector<std::vector<int>> circle_vertices;  // in circle direction

  void rebuild();
  int ccw_next(int dart) const;
  int face_next(int dart) const { return ccw_next(darts[dart].twin); }
  bool is_attach(int v) const { return rotation[v].size() == 3; }
  int circle_of_vertex(int v) const;
  // Band darts at v on the left (resp. right) of its circle.
  std::vector<int> side_darts(int v, bool left) const;

  int total_circles() const { return circle_count + free_loops; }
  int crossings() const { return static_cast<int>(band_sign.size()); }
};

SeifertStructure seifert_circles(const PDCode& d);

struct DiagramCounts {
  int circles = 0;
  int positive = 0;
  int negative = 0;
};
DiagramCounts diagram_counts(const PDCode& d);
int canonical_chi(const PDCode& d);
// w(D) - s(D); only meaningful when s(D) is minimal for the link type.
int diagram_SL(const PDCode& d, bool minimal_seifert_asserted);

// Relative position of circles in S^2 through the region tree.
bool on_left_of(const SeifertStructure& s, int circle, int other);
bool coherent(const SeifertStructure& s, int a, int b);
int incoherent_pairs(const SeifertStructure& s);
// Circles beyond `circle` when seen from region `from`.
std::vector<int> far_side(const SeifertStructure& s, int circle, int from);
// Nesting in R^2 with the largest face taken as the unbounded one.
bool encloses(const SeifertStructure& s, int outer, int inner);

CheckResult quasi_canonical_validate(const SeifertStructure& s);

struct SeifertGraph {
  struct Edge {
    int a, b, sign;
  };
  int vertices = 0;
  std::vector<Edge> edges;
};

SeifertGraph seifert_graph(const SeifertStructure& s);
// Block index per edge; bridges form their own blocks.
std::vector<int> blocks(const SeifertGraph& g);
std::vector<int> cut_vertices(const SeifertGraph& g);
bool is_homogeneous(const SeifertGraph& g);

// A crossing is nugatory when one face meets two of its corners.
bool is_reduced(const PDCode& d);
bool is_alternating(const PDCode& d);
// Every pair of circles joined by a band is joined by at least two.
// Throws std::invalid_argument unless d is reduced and alternating.
bool dhl_minimal_seifert_check(const PDCode& d);

}  // namespace braidpos
