#include "flowdiag/datagen.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flowdiag {

RingChain::RingChain(int k, std::uint64_t seed) : k_(k), rng_(seed) {
  if (k < 5) throw std::invalid_argument("ring chain needs at least 5 nodes");
}

std::vector<std::pair<int, int>> RingChain::row_numerators(int node) const {
  if (node < 0 || node >= k_) throw std::out_of_range("ring node out of range");
  auto wrap = [&](int x) { return ((x % k_) + k_) % k_; };
  std::vector<std::pair<int, int>> row{{node, 14},
                                       {wrap(node + 1), 2},
                                       {wrap(node - 1), 2},
                                       {wrap(node + 2), 1},
                                       {wrap(node - 2), 1}};
  std::sort(row.begin(), row.end());
  return row;
}

double RingChain::probability(int from, int to) const {
  for (const auto& [target, numerator] : row_numerators(from))
    if (target == to) return numerator / 20.0;
  return 0.0;
}

int RingChain::initial() { return static_cast<int>(rng_() % static_cast<std::uint64_t>(k_)); }

int RingChain::step(int from) {
  // Modulo draws over the exact weights keep sampling identical across
  // standard library implementations, unlike the distribution classes.
  const auto draw = static_cast<int>(rng_() % 20);
  int offset = 0;
  if (draw >= 14) offset = draw < 16 ? 1 : draw < 18 ? -1 : draw < 19 ? 2 : -2;
  return ((from + offset) % k_ + k_) % k_;
}

Dataset generate_dataset(int m, int n, int k, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("need at least one sequence");
  if (n < 1) throw std::invalid_argument("sequences need at least one state");
  RingChain chain(k, seed);

  Dataset ds;
  ds.sequences.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    StateSequence seq;
    seq.id = "tau" + std::to_string(i);
    seq.states.reserve(static_cast<std::size_t>(n));
    int node = chain.initial();
    for (int j = 0; j < n; ++j) {
      if (j > 0) node = chain.step(node);
      State s;
      s.labels = {"c" + std::to_string(node)};
      seq.states.push_back(std::move(s));
    }
    ds.sequences.push_back(std::move(seq));
  }
  ds.criteria.reserve(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    CriterionSpec spec;
    spec.id = "c" + std::to_string(c);
    spec.name = "ring node " + std::to_string(c);
    spec.kind = "label";
    spec.tag = spec.id;
    spec.flags = canonical_flags(spec);
    ds.criteria.push_back(std::move(spec));
  }
  return ds;
}

Dataset scs_instance(const std::vector<std::string>& strings) {
  Dataset ds;
  std::set<char> alphabet;
  int index = 0;
  for (const std::string& s : strings) {
    if (s.empty()) throw std::invalid_argument("strings must be non-empty");
    StateSequence seq;
    seq.id = "s" + std::to_string(index++);
    for (char ch : s) {
      State st;
      st.labels = {std::string(1, ch)};
      seq.states.push_back(std::move(st));
      alphabet.insert(ch);
    }
    ds.sequences.push_back(std::move(seq));
  }
  for (char ch : alphabet) {
    CriterionSpec spec;
    spec.id = std::string(1, ch);
    spec.name = "letter " + std::string(1, ch);
    spec.kind = "label";
    spec.tag = spec.id;
    spec.flags = canonical_flags(spec);
    ds.criteria.push_back(std::move(spec));
  }
  return ds;
}

int scs_oracle(const std::vector<std::string>& strings) {
  if (strings.empty()) throw std::invalid_argument("need at least one string");
  if (strings.size() > 3) throw std::invalid_argument("supersequence oracle caps at 3 strings");
  for (const std::string& s : strings)
    if (s.size() > 10)
      throw std::invalid_argument("supersequence oracle caps string length at 10");

  const int r = static_cast<int>(strings.size());
  std::vector<int> len(static_cast<std::size_t>(r));
  std::vector<long> stride(static_cast<std::size_t>(r), 1);
  for (int i = 0; i < r; ++i) len[static_cast<std::size_t>(i)] = static_cast<int>(strings[static_cast<std::size_t>(i)].size());
  for (int i = r - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] * (len[static_cast<std::size_t>(i + 1)] + 1);
  const long cells = stride[0] * (len[0] + 1);

  std::set<char> alphabet;
  for (const std::string& s : strings) alphabet.insert(s.begin(), s.end());

  // Shortest path over consumed-prefix tuples: emitting a character advances
  // every string currently waiting for it (matching eagerly is never worse).
  std::vector<int> dist(static_cast<std::size_t>(cells), -1);
  std::deque<long> queue{0};
  dist[0] = 0;
  const long goal = cells - 1;
  while (!queue.empty()) {
    const long u = queue.front();
    queue.pop_front();
    if (u == goal) return dist[static_cast<std::size_t>(u)];
    std::vector<int> pos(static_cast<std::size_t>(r));
    long rest = u;
    for (int i = 0; i < r; ++i) {
      pos[static_cast<std::size_t>(i)] = static_cast<int>(rest / stride[static_cast<std::size_t>(i)]);
      rest %= stride[static_cast<std::size_t>(i)];
    }
    for (char ch : alphabet) {
      long v = u;
      bool advanced = false;
      for (int i = 0; i < r; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (pos[ui] < len[ui] && strings[ui][static_cast<std::size_t>(pos[ui])] == ch) {
          v += stride[ui];
          advanced = true;
        }
      }
      if (!advanced || dist[static_cast<std::size_t>(v)] >= 0) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(v);
    }
  }
  throw std::logic_error("supersequence search must reach the full-consumption tuple");
}

Dataset set_cover_instance(int num_elements, const std::vector<std::vector<int>>& sets) {
  if (num_elements < 1) throw std::invalid_argument("need at least one element");
  Dataset ds;
  std::vector<std::vector<std::string>> labels_of(static_cast<std::size_t>(num_elements));
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int e : sets[s]) {
      if (e < 0 || e >= num_elements) throw std::invalid_argument("set member out of range");
      labels_of[static_cast<std::size_t>(e)].push_back("S" + std::to_string(s));
    }
  for (int e = 0; e < num_elements; ++e) {
    StateSequence seq;
    seq.id = "e" + std::to_string(e);
    State st;
    st.labels = labels_of[static_cast<std::size_t>(e)];
    seq.states = {st, st};
    ds.sequences.push_back(std::move(seq));
  }
  for (std::size_t s = 0; s < sets.size(); ++s) {
    CriterionSpec spec;
    spec.id = "S" + std::to_string(s);
    spec.name = "set S" + std::to_string(s);
    spec.kind = "label";
    spec.tag = spec.id;
    spec.flags = canonical_flags(spec);
    ds.criteria.push_back(std::move(spec));
  }
  return ds;
}

int set_cover_oracle(int num_elements, const std::vector<std::vector<int>>& sets) {
  if (num_elements < 1) throw std::invalid_argument("need at least one element");
  if (sets.size() > 20) throw std::invalid_argument("cover oracle caps at 20 sets");
  const int r = static_cast<int>(sets.size());
  const int blocks = (num_elements + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(static_cast<std::size_t>(r),
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(blocks), 0));
  for (int s = 0; s < r; ++s)
    for (int e : sets[static_cast<std::size_t>(s)]) {
      if (e < 0 || e >= num_elements) throw std::invalid_argument("set member out of range");
      masks[static_cast<std::size_t>(s)][static_cast<std::size_t>(e / 64)] |= 1ULL << (e % 64);
    }
  std::vector<std::uint64_t> full(static_cast<std::size_t>(blocks), 0);
  for (int e = 0; e < num_elements; ++e)
    full[static_cast<std::size_t>(e / 64)] |= 1ULL << (e % 64);

  int best = r + 1;
  for (std::uint32_t pick = 1; pick < (1u << r); ++pick) {
    const int card = __builtin_popcount(pick);
    if (card >= best) continue;
    std::vector<std::uint64_t> covered(static_cast<std::size_t>(blocks), 0);
    for (int s = 0; s < r; ++s)
      if (pick & (1u << s))
        for (int b = 0; b < blocks; ++b)
          covered[static_cast<std::size_t>(b)] |= masks[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)];
    if (covered == full) best = card;
  }
  if (best > r) throw std::invalid_argument("the sets do not cover every element");
  return best;
}

}  // namespace flowdiag
