#pragma once

// Shared fixtures and generators for the unit and acceptance suites.

#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowdiag/criteria.hpp"
#include "flowdiag/types.hpp"

namespace testutil {

/// Deterministic fuzzing source; modulo draws keep cases identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// One state per character, labelled with that character.
inline flowdiag::StateSequence char_sequence(std::string id, const std::string& chars) {
  flowdiag::StateSequence seq;
  seq.id = std::move(id);
  for (char ch : chars) {
    flowdiag::State st;
    st.labels = {std::string(1, ch)};
    seq.states.push_back(std::move(st));
  }
  return seq;
}

/// Sequences s0, s1, ... from character strings plus one label criterion per
/// alphabet character, in the given order.
inline flowdiag::Instance char_instance(const std::vector<std::string>& strings,
                                        const std::string& alphabet) {
  flowdiag::Instance inst;
  int i = 0;
  for (const auto& s : strings)
    inst.sequences.push_back(char_sequence("s" + std::to_string(i++), s));
  for (char ch : alphabet) {
    const std::string tag(1, ch);
    inst.criteria.push_back(flowdiag::label_criterion(tag, "letter " + tag, tag));
  }
  return inst;
}

/// m sequences of 1..n_max states, each state carrying exactly one of the k
/// criterion labels; always feasible.
inline flowdiag::Instance random_label_instance(Rng& rng, int m, int n_max, int k) {
  flowdiag::Instance inst;
  for (int i = 0; i < m; ++i) {
    flowdiag::StateSequence seq;
    seq.id = "s" + std::to_string(i);
    const int n = 1 + rng.below(n_max);
    for (int j = 0; j < n; ++j) {
      flowdiag::State st;
      st.labels = {"L" + std::to_string(rng.below(k))};
      seq.states.push_back(std::move(st));
    }
    inst.sequences.push_back(std::move(seq));
  }
  for (int c = 0; c < k; ++c) {
    const std::string tag = "L" + std::to_string(c);
    inst.criteria.push_back(flowdiag::label_criterion(tag, tag, tag));
  }
  return inst;
}

/// Like random_label_instance, but states carry each label independently with
/// probability 2/5, so some states carry several and some none.
inline flowdiag::Instance sparse_label_instance(Rng& rng, int m, int n_max, int k) {
  flowdiag::Instance inst;
  for (int i = 0; i < m; ++i) {
    flowdiag::StateSequence seq;
    seq.id = "s" + std::to_string(i);
    const int n = 1 + rng.below(n_max);
    for (int j = 0; j < n; ++j) {
      flowdiag::State st;
      for (int c = 0; c < k; ++c)
        if (rng.below(5) < 2) st.labels.push_back("L" + std::to_string(c));
      seq.states.push_back(std::move(st));
    }
    inst.sequences.push_back(std::move(seq));
  }
  for (int c = 0; c < k; ++c) {
    const std::string tag = "L" + std::to_string(c);
    inst.criteria.push_back(flowdiag::label_criterion(tag, tag, tag));
  }
  return inst;
}

/// Dependent, monotone decreasing criterion: the advancing segments' total
/// length stays within `cap`.  Sub-segment subsets only shrink the total, so
/// the monotone flag is honest.
inline flowdiag::Criterion length_cap_criterion(std::string id, long cap) {
  flowdiag::Criterion c;
  c.id = std::move(id);
  c.name = c.id + " length cap";
  c.flags = {true, false, false};
  c.oracle = [cap](const std::vector<flowdiag::StateSequence>&,
                   std::span<const flowdiag::SegmentRef> segs) {
    long total = 0;
    for (const auto& s : segs) total += s.length();
    return total <= cap;
  };
  return c;
}

/// Wraps the criterion's oracle so every invocation bumps `counter`.
inline flowdiag::Criterion counted(flowdiag::Criterion c, std::shared_ptr<long> counter) {
  auto inner = std::move(c.oracle);
  c.oracle = [inner = std::move(inner), counter = std::move(counter)](
                 const std::vector<flowdiag::StateSequence>& seqs,
                 std::span<const flowdiag::SegmentRef> segs) {
    ++*counter;
    return inner(seqs, segs);
  };
  return c;
}

/// Message of the exception `fn` throws, or "" when it does not throw.
template <class Fn>
std::string thrown_what(Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace testutil
