#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowdiag/types.hpp"

namespace flowdiag {

/// Criterion fulfilled by segments whose states all carry `tag`.
Criterion label_criterion(std::string id, std::string name, std::string tag);

struct Point {
  double x = 0;  // attack direction
  double y = 0;  // along the goal line
};

/// Angle in degrees in [-90, +90] of q - p measured from the goal-line axis:
/// arctangent of the attack component over the magnitude of the goal-line
/// component.  Throws std::invalid_argument on coincident points.
double pair_angle(Point p, Point q);

/// Formation class per adjacent defender pair, each in {-1, 0, +1}.
using FormationTriple = std::array<int, 3>;

/// All triples consistent with four defender positions in defence-line order.
/// The class ranges overlap near their boundaries, so one state can match
/// several triples.  Sorted lexicographically.
std::vector<FormationTriple> formation_criteria(const std::array<Point, 4>& defenders);

/// Canonical label tag for a triple, e.g. "f(-1,0,1)".
std::string formation_tag(const FormationTriple& triple);

/// Tags of every triple the four positions match; attach these as state labels.
std::vector<std::string> formation_state_tags(const std::array<Point, 4>& defenders);

/// Fixed criterion matching states labelled with the triple's tag.
Criterion formation_criterion(const FormationTriple& triple);

/// Attack-direction velocity in m/s between two timestamped states.
/// Throws std::invalid_argument when x or t is missing or time does not advance.
double ball_velocity(const State& e1, const State& e2);

/// Ids of the ball-movement criteria the transition (e1, e2) satisfies, in the
/// fixed order BM, LM, FM, FFM, LB, CFB, SG, SNG.
std::vector<std::string> transition_criteria(const State& e1, const State& e2);

/// Ball-movement criterion: every transition inside a segment satisfies the
/// class predicate (single-state segments hold vacuously).
/// `which` is one of BM, LM, FM, FFM, LB, CFB, SG, SNG.
Criterion ball_criterion(const std::string& which);

/// Criterion defined by explicit per-sequence interval lists, keyed by
/// sequence id.  With `monotone` set a segment fulfils iff it lies inside some
/// listed interval; otherwise only exact (a, b) matches fulfil.
Criterion table_criterion(std::string id, std::string name, bool monotone,
                          std::map<std::string, std::vector<std::pair<int, int>>> intervals);

}  // namespace flowdiag
