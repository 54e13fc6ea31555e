#pragma once

// Planar link diagrams given by PD codes.
//
// A crossing is X[a,b,c,d]: the four arc labels in counterclockwise order,
// starting at the incoming under-strand, so the under-strand runs a -> c.
// The over-strand runs b -> d or d -> b; a crossing is positive exactly when
// it runs d -> b.
//
// Diagrams are immutable values. Construction validates the code and
// relabels arcs 1..2c consecutively along each oriented component, so two
// diagrams compare equal iff they have the same crossings up to order.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aaj/errors.hpp"

namespace aaj {

using Arc = int;
using PdTuple = std::array<Arc, 4>;

/// One end of an arc: crossing index and slot 0..3 in its PD tuple.
struct Slot {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

enum class Side { Left = 0, Right = 1 };

/// A face is listed by its corners; corner k of a crossing is the sector
/// between slots k and k+1 (counterclockwise).
struct Face {
  std::vector<Slot> corners;
  std::vector<std::pair<Arc, Side>> incidences;
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<std::array<int, 4>> corner_face;  // [crossing][corner] -> face
  int unbounded_face_index = 0;
};

/// Degree-4 map with free over/under choice; slot s of crossing i is glued
/// to slot partner[4*i+s]. under_axis[i] == 0 puts slots 0-2 under,
/// 1 puts slots 1-3 under. Orientation is picked deterministically.
struct PlanarMap {
  std::vector<int> partner;
  std::vector<int> under_axis;
  int unknotted_loops = 0;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Builds from tuples already in PD convention. `over_in[i]` (1 or 3) is
  /// the slot of the incoming over-strand; when omitted it is derived from
  /// the tuples, falling back to increasing arc labels for components that
  /// never pass under.
  static LinkDiagram from_pd(const std::vector<PdTuple>& crossings,
                             int unknotted_loops = 0,
                             const std::vector<int>& reversed_components = {});
  static LinkDiagram from_oriented_pd(const std::vector<PdTuple>& crossings,
                                      const std::vector<int>& over_in,
                                      int unknotted_loops = 0);
  static LinkDiagram from_planar_map(const PlanarMap& map);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int unknotted_loops() const { return loops_; }
  const std::vector<PdTuple>& crossings() const { return crossings_; }
  const PdTuple& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }

  /// Slot (1 or 3) where the over-strand enters crossing i.
  int over_in_slot(int i) const { return over_in_.at(static_cast<std::size_t>(i)); }
  int sign(int i) const { return over_in_slot(i) == 3 ? +1 : -1; }

  Slot tail(Arc a) const { return tails_.at(static_cast<std::size_t>(a)); }
  Slot head(Arc a) const { return heads_.at(static_cast<std::size_t>(a)); }
  /// The other end of the arc sitting at `s`.
  Slot other_end(Slot s) const;
  Arc arc_at(Slot s) const { return crossings_[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(s.slot)]; }

  /// Components with at least one crossing, each as its arcs in order.
  const std::vector<std::vector<Arc>>& components() const { return components_; }
  int component_of(Arc a) const { return component_of_.at(static_cast<std::size_t>(a)); }
  /// All link components, including crossingless loops.
  int link_component_count() const {
    return static_cast<int>(components_.size()) + loops_;
  }

  /// Number of connected pieces: blocks of the 4-valent graph plus loops.
  int piece_count() const { return block_count_ + loops_; }
  bool is_split() const { return piece_count() > 1; }
  /// Connected with at least one crossing.
  bool is_connected_nontrivial() const { return block_count_ == 1 && loops_ == 0; }

  const FaceSet& faces() const;

  friend bool operator==(const LinkDiagram& x, const LinkDiagram& y);

 private:
  void finish();

  std::vector<PdTuple> crossings_;
  std::vector<int> over_in_;
  int loops_ = 0;

  std::vector<Slot> tails_, heads_;  // indexed by arc label (0 unused)
  std::vector<std::vector<Arc>> components_;
  std::vector<int> component_of_;
  int block_count_ = 0;
  std::vector<int> block_of_crossing_;
  FaceSet faces_;
};

// ---- text format ----------------------------------------------------------

/// Parses whitespace separated tokens `X[a,b,c,d]`, optional `loops=N` and
/// `reverse=i,j,...` (0-based components, ordered by smallest arc label).
LinkDiagram parse_pd(std::string_view text);
std::string serialize(const LinkDiagram& d);

// ---- operations -----------------------------------------------------------

/// Faces of a connected diagram with c >= 1; SplitError otherwise.
const FaceSet& faces(const LinkDiagram& d);

int writhe(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
/// No crossing meets the same face in two opposite corners.
bool is_reduced(const LinkDiagram& d);
/// Reduced, and neither checkerboard graph has a cut vertex.
bool is_prime(const LinkDiagram& d);

LinkDiagram flip_crossing(const LinkDiagram& d, int i);
/// Reverses the orientation of one component (index into components()).
LinkDiagram reverse_component(const LinkDiagram& d, int component);
LinkDiagram reverse_all(const LinkDiagram& d);
/// Disjoint union, arcs of `b` relabelled after those of `a`.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

PlanarMap to_planar_map(const LinkDiagram& d);

// ---- Reidemeister variants (test generators) ---------------------------------

enum class MoveKind { R1, R2, R3 };

struct Variant {
  MoveKind kind;
  LinkDiagram diagram;
};

LinkDiagram add_kink(const LinkDiagram& d, Arc a, bool positive, bool over_first);
/// Pushes arc `over` across arc `under` inside face `face` (both must bound it).
LinkDiagram add_poke(const LinkDiagram& d, int face, Arc over, Arc under);
/// Slides across the first triangular face admitting an R3 move.
std::optional<LinkDiagram> r3_slide(const LinkDiagram& d);

/// One R1, one R2 where a face has two distinct sides, one R3 if available.
std::vector<Variant> reidemeister_variants(const LinkDiagram& d);

}  // namespace aaj
