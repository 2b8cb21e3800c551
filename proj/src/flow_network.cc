// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "fair_range/error.h"
#include "fair_range/round.h"

namespace fair_range {

FlowNetwork BuildFlowNetwork(const MetricInstance& inst,
                             const FacilityPartition& part,
                             const RangeConstraints& rc) {
  const int L = part.L();
  if (L > rc.k) {
    throw FairRangeError(ErrorKind::kInternal, "build_flow_network",
                         "more selected sets than centers");
  }
  FlowNetwork net;
  net.k = rc.k;
  auto node = [&](std::string name) {
    net.node_names.push_back(std::move(name));
    return net.num_nodes() - 1;
  };
  net.source = node("s");
  for (int i = 0; i < L; ++i)
    net.set_nodes.push_back(node("S" + std::to_string(part.surviving[i])));
  net.spare = node("S_bar");
  for (int u = 0; u < inst.num_facilities(); ++u)
    net.facility_nodes.push_back(node("f" + std::to_string(u)));
  for (int g = 0; g < inst.num_groups; ++g)
    net.group_nodes.push_back(node("g" + std::to_string(g)));
  net.t1 = node("t1");
  net.t2 = node("t2");

  for (int i = 0; i < L; ++i) net.arcs.push_back({net.source, net.set_nodes[i], 0, 1, 0});
  net.arcs.push_back({net.source, net.spare, 0, rc.k - L, 0});
  for (int i = 0; i < L; ++i) {
    for (int u : part.sets[part.surviving[i]])
      net.arcs.push_back({net.set_nodes[i], net.facility_nodes[u], 0, 1, 0});
  }
  for (int u = 0; u < inst.num_facilities(); ++u)
    net.arcs.push_back({net.spare, net.facility_nodes[u], 0, 1, 0});
  for (int u = 0; u < inst.num_facilities(); ++u) {
    net.arcs.push_back({net.facility_nodes[u],
                        net.group_nodes[inst.facility_group[u]], 0, 1, 0});
  }
  for (int g = 0; g < inst.num_groups; ++g) {
    net.arcs.push_back({net.group_nodes[g], net.t1, rc.ranges[g].lower,
                        rc.ranges[g].upper, 0});
  }
  net.arcs.push_back({net.t1, net.t2, rc.k, rc.k, 0});
  return net;
}

namespace {

// Edmonds-Karp on an explicit residual graph.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1) {}

  int AddEdge(int from, int to, std::int64_t cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  std::int64_t Run(int s, int t) {
    std::int64_t total = 0;
    const int n = static_cast<int>(head_.size());
    for (;;) {
      std::vector<int> via(n, -1);
      std::queue<int> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int a = queue.front();
        queue.pop();
        for (int e = head_[a]; e >= 0; e = next_[e]) {
          if (cap_[e] > 0 && via[to_[e]] == -1) {
            via[to_[e]] = e;
            queue.push(to_[e]);
          }
        }
      }
      if (via[t] == -1) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (int a = t; a != s; a = to_[via[a] ^ 1]) push = std::min(push, cap_[via[a]]);
      for (int a = t; a != s; a = to_[via[a] ^ 1]) {
        cap_[via[a]] -= push;
        cap_[via[a] ^ 1] += push;
      }
      total += push;
    }
  }

  // Flow pushed along forward edge `id`.
  std::int64_t Flow(int id) const { return cap_[id ^ 1]; }

 private:
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<std::int64_t> cap_;
  std::vector<int> next_;
};

}  // namespace

bool SolveFlowLowerBounds(FlowNetwork& net) {
  const int n = net.num_nodes();
  const int ss = n;
  const int tt = n + 1;
  MaxFlow mf(n + 2);
  std::vector<std::int64_t> excess(n, 0);
  std::vector<int> ids;
  ids.reserve(net.arcs.size());
  for (const FlowArc& a : net.arcs) {
    if (a.lower > a.upper || a.lower < 0) return false;
    ids.push_back(mf.AddEdge(a.from, a.to, a.upper - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  // Circulation arc t2 -> s fixed at k.
  excess[net.source] += net.k;
  excess[net.t2] -= net.k;
  std::int64_t required = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      mf.AddEdge(ss, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      mf.AddEdge(v, tt, -excess[v]);
    }
  }
  if (mf.Run(ss, tt) != required) {
    for (FlowArc& a : net.arcs) a.flow = 0;
    return false;
  }
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    net.arcs[i].flow = net.arcs[i].lower + mf.Flow(ids[i]);
  return true;
}

std::vector<std::string> CheckFlow(const FlowNetwork& net) {
  std::vector<std::string> out;
  std::vector<std::int64_t> balance(net.num_nodes(), 0);
  for (const FlowArc& a : net.arcs) {
    if (a.flow < a.lower || a.flow > a.upper) {
      out.push_back("arc " + net.node_names[a.from] + "->" +
                    net.node_names[a.to] + " out of bounds");
    }
    balance[a.from] -= a.flow;
    balance[a.to] += a.flow;
  }
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source || v == net.t2) continue;
    if (balance[v] != 0)
      out.push_back("node " + net.node_names[v] + " does not conserve flow");
  }
  if (balance[net.source] != -net.k || balance[net.t2] != net.k)
    out.push_back("flow value differs from k");
  return out;
}

std::vector<int> ExtractCenters(const FlowNetwork& net) {
  std::vector<int> centers;
  const int first = net.facility_nodes.empty() ? 0 : net.facility_nodes.front();
  for (const FlowArc& a : net.arcs) {
    const bool into_group =
        std::find(net.group_nodes.begin(), net.group_nodes.end(), a.to) !=
        net.group_nodes.end();
    if (into_group && a.flow > 0) centers.push_back(a.from - first);
  }
  std::sort(centers.begin(), centers.end());
  return centers;
}

std::string DumpFlowNetwork(const FlowNetwork& net) {
  std::ostringstream os;
  os << "nodes " << net.num_nodes() << "\n";
  for (int v = 0; v < net.num_nodes(); ++v) os << v << " " << net.node_names[v] << "\n";
  os << "arcs " << net.arcs.size() << "\n";
  for (const FlowArc& a : net.arcs) {
    os << net.node_names[a.from] << " " << net.node_names[a.to] << " ["
       << a.lower << "," << a.upper << "] " << a.flow << "\n";
  }
  return os.str();
}

}  // namespace fair_range
