#include "admdp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace admdp {

namespace {

// Row-major boolean matrix packed into 64-bit words.
struct BoolMatrix {
  int n;
  int words;
  std::vector<uint64_t> bits;

  explicit BoolMatrix(int n_)
      : n(n_), words((n_ + 63) / 64),
        bits(static_cast<size_t>(n_) * ((n_ + 63) / 64), 0) {}

  void set(int r, int c) {
    bits[static_cast<size_t>(r) * words + c / 64] |= uint64_t{1} << (c % 64);
  }
  bool get(int r, int c) const {
    return (bits[static_cast<size_t>(r) * words + c / 64] >>
            (c % 64)) & 1;
  }

  BoolMatrix multiply(const BoolMatrix& o) const {
    BoolMatrix out(n);
    for (int r = 0; r < n; ++r) {
      uint64_t* dst = &out.bits[static_cast<size_t>(r) * words];
      for (int c = 0; c < n; ++c) {
        if (!get(r, c)) continue;
        const uint64_t* src = &o.bits[static_cast<size_t>(c) * words];
        for (int w = 0; w < words; ++w) dst[w] |= src[w];
      }
    }
    return out;
  }
};

std::vector<int> bfs_levels(const std::vector<std::vector<State>>& adj,
                            State root) {
  std::vector<int> level(adj.size(), -1);
  std::queue<State> q;
  level[root] = 0;
  q.push(root);
  while (!q.empty()) {
    State u = q.front();
    q.pop();
    for (State v : adj[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        q.push(v);
      }
    }
  }
  return level;
}

}  // namespace

AdmdpGraph AdmdpGraph::build(std::vector<std::vector<State>> next) {
  AdmdpGraph g;
  g.ns_ = static_cast<int>(next.size());
  if (g.ns_ == 0) throw BadShape("empty state space");
  g.na_ = static_cast<int>(next[0].size());
  if (g.na_ == 0) throw BadShape("empty action space");
  for (const auto& row : next) {
    if (static_cast<int>(row.size()) != g.na_)
      throw BadShape("next map is not total");
    for (State s : row)
      if (s < 0 || s >= g.ns_) throw BadShape("next map target out of range");
  }
  g.next_ = std::move(next);

  // Deduplicated successor lists and predecessor sets.
  std::vector<std::vector<State>> adj(g.ns_), radj(g.ns_);
  g.preds_.assign(g.ns_, {});
  for (State s = 0; s < g.ns_; ++s) {
    for (Action a = 0; a < g.na_; ++a) {
      State t = g.next_[s][a];
      adj[s].push_back(t);
      radj[t].push_back(s);
      g.preds_[t].emplace_back(s, a);
    }
  }
  for (auto& p : g.preds_) std::sort(p.begin(), p.end());

  auto fwd = bfs_levels(adj, 0);
  auto bwd = bfs_levels(radj, 0);
  for (State s = 0; s < g.ns_; ++s) {
    if (fwd[s] < 0 || bwd[s] < 0)
      throw NotStronglyConnected("state " + std::to_string(s) +
                                 " not on a cycle through state 0");
  }

  // Period: gcd over edges u->v of level(u)+1-level(v).
  int gamma = 0;
  for (State u = 0; u < g.ns_; ++u)
    for (State v : adj[u]) gamma = std::gcd(gamma, std::abs(fwd[u] + 1 - fwd[v]));
  if (gamma == 0) gamma = 1;
  g.gamma_ = gamma;

  g.cls_.resize(g.ns_);
  for (State s = 0; s < g.ns_; ++s) g.cls_[s] = fwd[s] % gamma;
  for (State u = 0; u < g.ns_; ++u)
    for (State v : adj[u])
      if (g.cls_[v] != (g.cls_[u] + 1) % gamma)
        throw InvariantViolation("cycle class labels inconsistent");

  // Critical length: first power m of the gamma-step relation whose
  // same-class blocks are all ones. All-ones is absorbing, so the first
  // such m is the critical length.
  BoolMatrix adj1(g.ns_);
  for (State u = 0; u < g.ns_; ++u)
    for (State v : adj[u]) adj1.set(u, v);
  BoolMatrix agamma = adj1;
  for (int i = 1; i < gamma; ++i) agamma = agamma.multiply(adj1);

  const int cap = g.ns_ * g.ns_ + 1;
  BoolMatrix m = agamma;
  int d = -1;
  for (int iter = 1; iter <= cap; ++iter) {
    bool full = true;
    for (State u = 0; u < g.ns_ && full; ++u)
      for (State v = 0; v < g.ns_; ++v)
        if (g.cls_[u] == g.cls_[v] && !m.get(u, v)) {
          full = false;
          break;
        }
    if (full) {
      d = iter;
      break;
    }
    m = m.multiply(agamma);
  }
  if (d < 0)
    throw CapExceeded("critical length did not stabilize within |S|^2 powers");
  g.d_ = d;
  return g;
}

std::vector<bool> AdmdpGraph::reachable_exact(State from, int length) const {
  std::vector<bool> cur(ns_, false);
  cur[from] = true;
  for (int step = 0; step < length; ++step) {
    std::vector<bool> nxt(ns_, false);
    for (State s = 0; s < ns_; ++s) {
      if (!cur[s]) continue;
      for (Action a = 0; a < na_; ++a) nxt[next_[s][a]] = true;
    }
    cur = std::move(nxt);
  }
  return cur;
}

std::vector<Action> AdmdpGraph::path_of_length(State from, State to,
                                               int length) const {
  if (length < 0) throw NoPath("negative length");
  // Forward tables of exact-length reachable sets, then reconstruct the
  // path backwards through predecessor sets.
  std::vector<std::vector<bool>> reach(length + 1,
                                       std::vector<bool>(ns_, false));
  reach[0][from] = true;
  for (int step = 1; step <= length; ++step) {
    for (State s = 0; s < ns_; ++s) {
      if (!reach[step - 1][s]) continue;
      for (Action a = 0; a < na_; ++a) reach[step][next_[s][a]] = true;
    }
  }
  if (!reach[length][to])
    throw NoPath("no path of length " + std::to_string(length) + " from " +
                 std::to_string(from) + " to " + std::to_string(to));

  std::vector<Action> actions(length);
  State cur = to;
  for (int step = length; step >= 1; --step) {
    bool found = false;
    for (const auto& [u, a] : preds_[cur]) {
      if (reach[step - 1][u]) {
        actions[step - 1] = a;
        cur = u;
        found = true;
        break;
      }
    }
    if (!found) throw NoPath("path reconstruction failed");
  }
  return actions;
}

ClosedWalk::ClosedWalk(const AdmdpGraph& g, State start,
                       std::vector<Action> actions)
    : start_(start), actions_(std::move(actions)) {
  if (actions_.empty()) throw BadShape("closed walk must have length >= 1");
  states_.reserve(actions_.size());
  State cur = start_;
  for (Action a : actions_) {
    states_.push_back(cur);
    cur = g.next(cur, a);
  }
  if (cur != start_) throw BadShape("walk does not return to its start");
}

std::string ClosedWalk::key() const {
  std::string k = std::to_string(start_);
  for (Action a : actions_) {
    k.push_back(',');
    k += std::to_string(a);
  }
  return k;
}

}  // namespace admdp
