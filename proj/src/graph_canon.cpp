#include <algorithm>
#include <array>
#include <climits>
#include <functional>

#include "rhall/error.hpp"
#include "rhall/graph.hpp"

namespace rhall {

namespace {

// One connected component with vertices renumbered 0..n-1. Each vertex keeps
// its half-edges in stored order; -1 marks an external leg.
struct Local {
  std::vector<VertexId> ids;
  std::vector<std::vector<int>> nbr;
};

Local make_local(const HalfEdgeGraph& g, const VertexSet& comp) {
  Local L;
  L.ids.assign(comp.begin(), comp.end());
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < L.ids.size(); ++i) index[L.ids[i]] = static_cast<int>(i);
  for (VertexId v : L.ids) {
    std::vector<int> row;
    for (HalfEdgeId h : g.half_edges_at(v)) {
      auto p = g.partner(h);
      row.push_back(p ? index.at(g.vertex_of(*p)) : -1);
    }
    L.nbr.push_back(std::move(row));
  }
  return L;
}

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs) {
  std::vector<std::vector<int>> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(sigs.size());
  for (const auto& s : sigs)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin()));
  return out;
}

std::size_t class_count(const std::vector<int>& color) {
  std::vector<int> c = color;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

// Colour refinement until the partition stops splitting.
std::vector<int> refine(const Local& L, std::vector<int> color) {
  const std::size_t n = L.ids.size();
  std::size_t classes = class_count(color);
  while (true) {
    std::vector<std::vector<int>> sigs(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> around;
      for (int t : L.nbr[i]) around.push_back(t < 0 ? -1 : color[t]);
      std::sort(around.begin(), around.end());
      sigs[i].push_back(color[i]);
      sigs[i].insert(sigs[i].end(), around.begin(), around.end());
    }
    color = rank_signatures(sigs);
    const std::size_t now = class_count(color);
    if (now == classes) return color;
    classes = now;
  }
}

struct Canon {
  std::vector<int> code;
  std::vector<int> position;  // local index -> canonical position
  Integer vertex_aut = 0;
};

void search(const Local& L, std::vector<int> color, Canon& best) {
  color = refine(L, std::move(color));
  const int n = static_cast<int>(L.ids.size());
  std::vector<int> size(n, 0);
  for (int c : color) ++size[c];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (size[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[color[i]] = i;
    std::vector<int> code;
    code.reserve(3 * n);
    for (int p = 0; p < n; ++p) {
      std::vector<int> row;
      for (int t : L.nbr[at[p]]) row.push_back(t < 0 ? n : color[t]);
      std::sort(row.begin(), row.end());
      code.insert(code.end(), row.begin(), row.end());
    }
    if (best.vertex_aut == 0 || code < best.code) {
      best.code = std::move(code);
      best.position = color;
      best.vertex_aut = 1;
    } else if (code == best.code) {
      best.vertex_aut += 1;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> split(n);
    for (int i = 0; i < n; ++i) split[i] = 2 * color[i] + (color[i] == target && i != v ? 1 : 0);
    search(L, std::move(split), best);
  }
}

Integer factorial(long m) {
  Integer r = 1;
  for (long i = 2; i <= m; ++i) r *= i;
  return r;
}

struct ComponentInfo {
  Local local;
  Canon canon;
  Integer aut;
};

ComponentInfo analyse(const HalfEdgeGraph& g, const VertexSet& comp) {
  ComponentInfo info{make_local(g, comp), {}, 1};
  search(info.local, std::vector<int>(info.local.ids.size(), 0), info.canon);
  Integer aut = info.canon.vertex_aut;
  const int n = static_cast<int>(info.local.ids.size());
  for (int i = 0; i < n; ++i) {
    std::map<int, long> mult;
    for (int t : info.local.nbr[i]) ++mult[t];
    for (const auto& [t, m] : mult) {
      if (t < 0) {
        aut *= factorial(m);
      } else if (t == i) {
        const long loops = m / 2;
        aut *= factorial(loops);
        for (long k = 0; k < loops; ++k) aut *= 2;
      } else if (t > i) {
        aut *= factorial(m);
      }
    }
  }
  info.aut = aut;
  return info;
}

bool info_less(const ComponentInfo& a, const ComponentInfo& b) {
  if (a.local.ids.size() != b.local.ids.size()) return a.local.ids.size() < b.local.ids.size();
  return a.canon.code < b.canon.code;
}

bool info_same(const ComponentInfo& a, const ComponentInfo& b) {
  return a.local.ids.size() == b.local.ids.size() && a.canon.code == b.canon.code;
}

std::vector<ComponentInfo> analyse_all(const HalfEdgeGraph& g) {
  std::vector<ComponentInfo> out;
  for (const auto& comp : components(g)) out.push_back(analyse(g, comp));
  std::stable_sort(out.begin(), out.end(), info_less);
  return out;
}

}  // namespace

std::string canonical_form(const HalfEdgeGraph& g) {
  if (g.empty()) return "0";
  std::vector<std::string> vlines, hlines, plines;
  std::vector<std::pair<int, int>> pairs;
  int voff = 0;
  int hoff = 0;
  for (const auto& info : analyse_all(g)) {
    const auto& L = info.local;
    const int n = static_cast<int>(L.ids.size());
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[info.canon.position[i]] = i;
    std::map<VertexId, int> pos_of;
    for (int i = 0; i < n; ++i) pos_of[L.ids[i]] = info.canon.position[i];
    std::map<HalfEdgeId, int> number;
    for (int p = 0; p < n; ++p) {
      const VertexId v = L.ids[at[p]];
      std::vector<std::array<long, 3>> order;
      for (HalfEdgeId h : g.half_edges_at(v)) {
        auto q = g.partner(h);
        const long tgt = q ? pos_of.at(g.vertex_of(*q)) : n;
        const long qnum = q && number.count(*q) ? number.at(*q) : LONG_MAX;
        order.push_back({tgt, qnum, h});
      }
      std::sort(order.begin(), order.end());
      for (std::size_t k = 0; k < order.size(); ++k) {
        const int id = hoff + 3 * p + static_cast<int>(k);
        number[static_cast<HalfEdgeId>(order[k][2])] = id;
        hlines.push_back("h " + std::to_string(id) + " " + std::to_string(voff + p));
      }
      vlines.push_back("v " + std::to_string(voff + p));
    }
    for (const auto& [h, id] : number)
      if (auto q = g.partner(h); q && id < number.at(*q)) pairs.emplace_back(id, number.at(*q));
    voff += n;
    hoff += 3 * n;
  }
  std::sort(pairs.begin(), pairs.end());
  std::string out;
  auto emit = [&out](const std::string& line) {
    if (!out.empty()) out += ';';
    out += line;
  };
  for (const auto& l : vlines) emit(l);
  for (const auto& l : hlines) emit(l);
  for (const auto& [a, b] : pairs) emit("p " + std::to_string(a) + " " + std::to_string(b));
  return out;
}

Integer aut_order(const HalfEdgeGraph& g) {
  const auto infos = analyse_all(g);
  Integer result = 1;
  for (std::size_t i = 0; i < infos.size();) {
    std::size_t j = i;
    while (j < infos.size() && info_same(infos[j], infos[i])) {
      result *= infos[j].aut;
      ++j;
    }
    result *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return result;
}

bool is_isomorphic(const HalfEdgeGraph& a, const HalfEdgeGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.half_edge_count() == b.half_edge_count() &&
         canonical_form(a) == canonical_form(b);
}

std::vector<GraphIso> isomorphisms(const HalfEdgeGraph& a, const HalfEdgeGraph& b) {
  std::vector<GraphIso> found;
  if (a.vertex_count() != b.vertex_count() || a.half_edge_count() != b.half_edge_count()) return found;
  if (a.internal_edges().size() != b.internal_edges().size()) return found;

  // Half-edges of a, vertex by vertex in breadth-first order.
  std::vector<HalfEdgeId> order;
  {
    VertexSet seen;
    for (VertexId start : a.vertices()) {
      if (!seen.insert(start).second) continue;
      std::vector<VertexId> queue{start};
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (HalfEdgeId h : a.half_edges_at(queue[k])) {
          order.push_back(h);
          if (auto p = a.partner(h); p && seen.insert(a.vertex_of(*p)).second) queue.push_back(a.vertex_of(*p));
        }
      }
    }
  }

  GraphIso current;
  std::set<VertexId> used_v;
  std::set<HalfEdgeId> used_h;
  const auto b_half_edges = b.half_edges();

  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == order.size()) {
      found.push_back(current);
      return;
    }
    const HalfEdgeId h = order[i];
    const VertexId va = a.vertex_of(h);
    const auto pa = a.partner(h);
    auto vit = current.vertices.find(va);
    const std::vector<HalfEdgeId>& pool = vit == current.vertices.end() ? b_half_edges : b.half_edges_at(vit->second);
    for (HalfEdgeId h2 : pool) {
      if (used_h.count(h2)) continue;
      const VertexId vb = b.vertex_of(h2);
      const bool new_vertex = vit == current.vertices.end();
      if (new_vertex && used_v.count(vb)) continue;
      const auto pb = b.partner(h2);
      if (pa.has_value() != pb.has_value()) continue;
      if (pa) {
        auto mapped = current.half_edges.find(*pa);
        if (mapped != current.half_edges.end() && mapped->second != *pb) continue;
        if (*pa == h && *pb != h2) continue;
      }
      if (new_vertex) {
        current.vertices[va] = vb;
        used_v.insert(vb);
      }
      current.half_edges[h] = h2;
      used_h.insert(h2);
      step(i + 1);
      used_h.erase(h2);
      current.half_edges.erase(h);
      if (new_vertex) {
        used_v.erase(vb);
        current.vertices.erase(va);
      }
    }
  };
  step(0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<HalfEdgeGraph> enumerate_connected_graphs(int loops, int externals) {
  const int n = 2 * loops - 2 + externals;
  if (n < 1 || loops < 0 || (externals != 2 && externals != 3)) return {};
  if (n > 10) throw BoundExceeded("graph enumeration limited to 10 vertices");
  std::map<std::string, HalfEdgeGraph> unique;

  // External legs per vertex, non-increasing.
  std::vector<int> ext(n, 0);
  std::function<void(int, int, int)> spread_ext = [&](int i, int left, int cap) {
    if (i == n) {
      if (left != 0) return;
      std::vector<int> deg(n);
      for (int k = 0; k < n; ++k) deg[k] = 3 - ext[k];
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
      std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == n) {
          HalfEdgeGraph g;
          int next = 0;
          for (int v = 0; v < n; ++v) g.add_vertex(v);
          for (int v = 0; v < n; ++v)
            for (int k = 0; k < ext[v]; ++k) g.add_half_edge(next++, v);
          for (int u = 0; u < n; ++u)
            for (int w = u; w < n; ++w)
              for (int k = 0; k < m[u][w]; ++k) {
                g.add_half_edge(next, u);
                g.add_half_edge(next + 1, w);
                g.pair(next, next + 1);
                next += 2;
              }
          if (!is_connected(g)) return;
          auto key = canonical_form(g);
          unique.emplace(std::move(key), std::move(g));
          return;
        }
        if (c == n) {
          if (deg[r] != 0) return;
          fill(r + 1, r + 1);
          return;
        }
        const int unit = c == r ? 2 : 1;
        for (int k = 0; unit * k <= deg[r] && k <= deg[c]; ++k) {
          if (c == r && 2 * k > deg[r]) break;
          m[r][c] = k;
          deg[r] -= unit * k;
          if (c != r) deg[c] -= k;
          fill(r, c + 1);
          deg[r] += unit * k;
          if (c != r) deg[c] += k;
        }
        m[r][c] = 0;
      };
      fill(0, 0);
      return;
    }
    for (int k = std::min(cap, left); k >= 0; --k) {
      ext[i] = k;
      spread_ext(i + 1, left - k, k);
    }
    ext[i] = 0;
  };
  spread_ext(0, externals, 3);

  std::vector<HalfEdgeGraph> out;
  for (auto& [key, g] : unique) out.push_back(std::move(g));
  return out;
}

std::vector<std::string> enumerate_primitives(int max_loops) {
  std::vector<std::string> out;
  for (int l = 1; l <= max_loops; ++l)
    for (int e : {2, 3})
      for (const auto& g : enumerate_connected_graphs(l, e))
        if (is_primitive(g)) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rhall
