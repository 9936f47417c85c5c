#include "flowdiag/criteria.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flowdiag {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

const StateSequence& seq_of(const std::vector<StateSequence>& seqs, const SegmentRef& s) {
  return seqs[static_cast<std::size_t>(s.seq)];
}

/// States a+1..b of the segment, 0-based range [a, b).
template <typename Pred>
bool all_states(const std::vector<StateSequence>& seqs, const SegmentRef& s, Pred pred) {
  const auto& states = seq_of(seqs, s).states;
  for (int j = s.a; j < s.b; ++j)
    if (!pred(states[static_cast<std::size_t>(j)])) return false;
  return true;
}

template <typename Pred>
bool all_transitions(const std::vector<StateSequence>& seqs, const SegmentRef& s, Pred pred) {
  const auto& states = seq_of(seqs, s).states;
  for (int j = s.a; j + 1 < s.b; ++j)
    if (!pred(states[static_cast<std::size_t>(j)], states[static_cast<std::size_t>(j) + 1]))
      return false;
  return true;
}

double require(const std::optional<double>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("ball criterion: state lacks ") + what);
  return *v;
}

}  // namespace

Criterion label_criterion(std::string id, std::string name, std::string tag) {
  Criterion c;
  c.id = std::move(id);
  c.name = std::move(name);
  c.flags = {true, true, true};
  c.oracle = [tag = std::move(tag)](const std::vector<StateSequence>& seqs,
                                    std::span<const SegmentRef> segs) {
    for (const auto& s : segs)
      if (!all_states(seqs, s, [&](const State& st) { return st.has_label(tag); })) return false;
    return true;
  };
  return c;
}

double pair_angle(Point p, Point q) {
  const double attack = q.x - p.x;
  const double goal_line = q.y - p.y;
  if (attack == 0 && goal_line == 0)
    throw std::invalid_argument("pair_angle: coincident points");
  return std::atan2(attack, std::fabs(goal_line)) * kDegPerRad;
}

namespace {

// Class ranges: -1 on [-90, -5), 0 on (-15, +15), +1 on (+5, +90].
bool in_class(int cls, double angle) {
  switch (cls) {
    case -1: return angle >= -90.0 && angle < -5.0;
    case 0: return angle > -15.0 && angle < 15.0;
    case 1: return angle > 5.0 && angle <= 90.0;
    default: throw std::invalid_argument("formation class must be -1, 0 or +1");
  }
}

}  // namespace

std::vector<FormationTriple> formation_criteria(const std::array<Point, 4>& defenders) {
  std::array<double, 3> angles{};
  for (int i = 0; i < 3; ++i)
    angles[static_cast<std::size_t>(i)] =
        pair_angle(defenders[static_cast<std::size_t>(i)], defenders[static_cast<std::size_t>(i) + 1]);
  std::vector<FormationTriple> result;
  for (int x1 = -1; x1 <= 1; ++x1) {
    if (!in_class(x1, angles[0])) continue;
    for (int x2 = -1; x2 <= 1; ++x2) {
      if (!in_class(x2, angles[1])) continue;
      for (int x3 = -1; x3 <= 1; ++x3) {
        if (!in_class(x3, angles[2])) continue;
        result.push_back({x1, x2, x3});
      }
    }
  }
  return result;
}

std::string formation_tag(const FormationTriple& triple) {
  std::string tag = "f(";
  for (int i = 0; i < 3; ++i) {
    if (i) tag += ',';
    tag += std::to_string(triple[static_cast<std::size_t>(i)]);
  }
  tag += ')';
  return tag;
}

std::vector<std::string> formation_state_tags(const std::array<Point, 4>& defenders) {
  std::vector<std::string> tags;
  for (const auto& t : formation_criteria(defenders)) tags.push_back(formation_tag(t));
  return tags;
}

Criterion formation_criterion(const FormationTriple& triple) {
  for (int v : triple)
    if (v < -1 || v > 1) throw std::invalid_argument("formation class must be -1, 0 or +1");
  const std::string tag = formation_tag(triple);
  Criterion c = label_criterion(tag, tag, tag);
  return c;
}

double ball_velocity(const State& e1, const State& e2) {
  const double x1 = require(e1.x, "x");
  const double x2 = require(e2.x, "x");
  const double t1 = require(e1.t, "t");
  const double t2 = require(e2.t, "t");
  if (t2 <= t1) throw std::invalid_argument("ball_velocity: time must advance");
  return (x2 - x1) / (t2 - t1);
}

namespace {

bool cross_field_angle_ok(double dx, double dy) {
  const double angle = std::atan2(dy, dx) * kDegPerRad;
  return (angle >= 80.0 && angle <= 100.0) || (angle >= -100.0 && angle <= -80.0);
}

bool transition_matches(const std::string& which, const State& e1, const State& e2) {
  if (which == "SG") return e2.event && *e2.event == "shot-goal";
  if (which == "SNG") return e2.event && *e2.event == "shot-no-goal";
  if (which == "LB") return require(e2.x, "x") - require(e1.x, "x") >= 30.0;
  if (which == "CFB") {
    const double dx = require(e2.x, "x") - require(e1.x, "x");
    const double dy = require(e2.y, "y") - require(e1.y, "y");
    return std::fabs(dy) >= 20.0 && cross_field_angle_ok(dx, dy);
  }
  const double xv = ball_velocity(e1, e2);
  if (which == "BM") return xv < 1.0;
  if (which == "LM") return xv > -5.0 && xv < 5.0;
  if (which == "FM") return xv > -1.0 && xv < 12.0;
  if (which == "FFM") return xv > 8.0;
  throw std::invalid_argument("unknown ball criterion: " + which);
}

}  // namespace

std::vector<std::string> transition_criteria(const State& e1, const State& e2) {
  static const char* const kOrder[] = {"BM", "LM", "FM", "FFM", "LB", "CFB", "SG", "SNG"};
  std::vector<std::string> out;
  for (const char* which : kOrder)
    if (transition_matches(which, e1, e2)) out.emplace_back(which);
  return out;
}

Criterion ball_criterion(const std::string& which) {
  transition_matches(which, State{{}, 0.0, 0.0, 0.0, {}}, State{{}, 0.0, 0.0, 1.0, {}});
  Criterion c;
  c.id = which;
  c.name = which;
  c.flags = {true, true, false};
  c.oracle = [which](const std::vector<StateSequence>& seqs, std::span<const SegmentRef> segs) {
    for (const auto& s : segs)
      if (!all_transitions(seqs, s, [&](const State& a, const State& b) {
            return transition_matches(which, a, b);
          }))
        return false;
    return true;
  };
  return c;
}

Criterion table_criterion(std::string id, std::string name, bool monotone,
                          std::map<std::string, std::vector<std::pair<int, int>>> intervals) {
  Criterion c;
  c.id = std::move(id);
  c.name = std::move(name);
  c.flags = {monotone, true, false};
  c.oracle = [monotone, intervals = std::move(intervals)](
                 const std::vector<StateSequence>& seqs, std::span<const SegmentRef> segs) {
    for (const auto& s : segs) {
      auto it = intervals.find(seq_of(seqs, s).id);
      if (it == intervals.end()) return false;
      bool hit = false;
      for (const auto& [a, b] : it->second) {
        if (monotone ? (a <= s.a && s.b <= b) : (a == s.a && b == s.b)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  return c;
}

}  // namespace flowdiag
