#pragma once

// Kauffman states, the bracket state sum and the Jones polynomial.
//
// At X[a,b,c,d] the A-smoothing joins a-b and c-d, the B-smoothing joins
// a-d and b-c.

#include <utility>
#include <vector>

#include "aaj/diagram.hpp"
#include "aaj/laurent.hpp"

namespace aaj {

enum class Resolution : char { A = 'A', B = 'B' };

struct KauffmanState {
  std::vector<Resolution> resolutions;
  int loop_count = 0;  // includes crossingless loops
  int a_count = 0, b_count = 0;
};

struct StateLoops {
  std::vector<int> endpoint_loop;             // [4*crossing + slot] -> loop id
  std::vector<std::pair<int, int>> trace;     // per crossing: loops at the trace ends
  int loop_count = 0;
};

StateLoops state_loops(const LinkDiagram& d, const std::vector<Resolution>& r);
KauffmanState resolve(const LinkDiagram& d, const std::vector<Resolution>& r);

constexpr int kDefaultCap = 24;

struct BracketOptions {
  int cap = kDefaultCap;
  int threads = 1;
};

/// -A^2 - A^-2 raised to k.
LaurentPoly delta_power(int k);

/// CapError when c exceeds the cap.
LaurentPoly bracket(const LinkDiagram& d, const BracketOptions& opt = {});
/// (-A^3)^(-w) times the bracket, rewritten in t with A = t^(-1/4).
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);
LaurentPoly jones(const LinkDiagram& d, const BracketOptions& opt = {});

/// Loop counts of the all-A and all-B states.
std::pair<int, int> state_counts(const LinkDiagram& d);
int turaev_genus(const LinkDiagram& d);

bool is_A_adequate(const LinkDiagram& d);
bool is_B_adequate(const LinkDiagram& d);

}  // namespace aaj
