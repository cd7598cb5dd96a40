#include "greenseq/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

#include "greenseq/error.hpp"

namespace greenseq {

namespace {

constexpr std::size_t kCycleCap = 200000;

bool contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_minus(const VertexSet& s, const VertexSet& removed) {
  VertexSet out;
  std::set_difference(s.begin(), s.end(), removed.begin(), removed.end(), std::back_inserter(out));
  return out;
}

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<int> neighbours_within(const Quiver& q, const VertexSet& within, int v) {
  std::vector<int> out;
  for (int w : within)
    if (w != v && q.entry(v, w) != 0) out.push_back(w);
  return out;
}

Int degree_within(const Quiver& q, const VertexSet& within, int v) {
  Int d = 0;
  for (int w : within)
    if (w != v) d += checked_abs(q.entry(v, w));
  return d;
}

// Connected components of the underlying graph on `within`, optionally
// ignoring the edge between skip_a and skip_b.
std::vector<VertexSet> components(const Quiver& q, const VertexSet& within, int skip_a = 0, int skip_b = 0) {
  std::vector<VertexSet> out;
  std::set<int> unseen(within.begin(), within.end());
  while (!unseen.empty()) {
    VertexSet comp;
    std::vector<int> stack{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : neighbours_within(q, within, v)) {
        if ((v == skip_a && w == skip_b) || (v == skip_b && w == skip_a)) continue;
        if (unseen.erase(w)) stack.push_back(w);
      }
    }
    out.push_back(sorted(std::move(comp)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const VertexSet* component_of(const std::vector<VertexSet>& comps, int v) {
  for (const auto& c : comps)
    if (contains(c, v)) return &c;
  return nullptr;
}

// Biconnected components of the underlying graph on `within`, as vertex sets.
std::vector<VertexSet> blocks(const Quiver& q, const VertexSet& within) {
  std::map<int, int> order;
  std::map<int, int> low;
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexSet> out;
  int counter = 0;
  std::function<void(int, int)> visit = [&](int v, int parent) {
    order[v] = low[v] = ++counter;
    for (int w : neighbours_within(q, within, v)) {
      if (w == parent) continue;
      if (!order.count(w)) {
        edges.emplace_back(v, w);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= order[v]) {
          VertexSet block;
          for (;;) {
            const auto e = edges.back();
            edges.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == std::make_pair(v, w)) break;
          }
          out.push_back(sorted(std::move(block)));
        }
      } else if (order[w] < order[v]) {
        edges.emplace_back(v, w);
        low[v] = std::min(low[v], order[w]);
      }
    }
  };
  for (int v : within)
    if (!order.count(v)) visit(v, 0);
  return out;
}

bool oriented_triangle(const Quiver& q, int a, int b, int c) {
  const Int ab = q.entry(a, b), bc = q.entry(b, c), ca = q.entry(c, a);
  return (ab == 1 && bc == 1 && ca == 1) || (ab == -1 && bc == -1 && ca == -1);
}

bool type_a_block(const Quiver& q, const VertexSet& block) {
  if (block.size() == 2) return checked_abs(q.entry(block[0], block[1])) == 1;
  if (block.size() == 3) return oriented_triangle(q, block[0], block[1], block[2]);
  return false;
}

// Induced cycles of length >= 3 in the underlying simple graph, each listed
// once starting from its smallest vertex. nullopt when the cap is exceeded.
std::optional<std::vector<std::vector<int>>> chordless_cycles(const Quiver& q) {
  const VertexSet all = all_vertices(q);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> on_path(q.size() + 1, false);
  bool overflow = false;
  std::function<void(int)> extend = [&](int start) {
    if (overflow) return;
    const int last = path.back();
    for (int v : neighbours_within(q, all, last)) {
      if (v <= start || on_path[v]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = q.entry(path[i], v) != 0;
      if (chord) continue;
      if (path.size() >= 2 && q.entry(v, start) != 0) {
        if (path[1] < v) {
          out.push_back(path);
          out.back().push_back(v);
          if (out.size() > kCycleCap) overflow = true;
        }
        continue;
      }
      path.push_back(v);
      on_path[v] = true;
      extend(start);
      on_path[v] = false;
      path.pop_back();
    }
  };
  for (int s : all) {
    path = {s};
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  if (overflow) return std::nullopt;
  return out;
}

bool oriented_cycle(const Quiver& q, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  bool forward = true, backward = true;
  for (std::size_t i = 0; i < k; ++i) {
    const Int e = q.entry(cycle[i], cycle[(i + 1) % k]);
    forward &= e == 1;
    backward &= e == -1;
  }
  return forward || backward;
}

bool simple_arrows(const Quiver& q) {
  for (const Arrow& a : q.arrows())
    if (a.multiplicity != 1) return false;
  return true;
}

std::optional<TypeDI> match_type_d_i(const Quiver& q) {
  const VertexSet all = all_vertices(q);
  for (int c : all) {
    std::vector<int> leaves;
    for (int x : q.neighbours(c))
      if (q.degree(x) == 1) leaves.push_back(x);
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        const VertexSet rest = set_minus(all, sorted({leaves[i], leaves[j]}));
        if (is_type_A(q, rest) && is_connecting(q, rest, c)) return TypeDI{leaves[i], leaves[j], c, rest};
      }
  }
  return std::nullopt;
}

// Shared tail of the type II and III checks: removing a, b (and possibly the
// arrow c-d) leaves type A parts around c and d with both connecting.
template <typename Result>
std::optional<Result> split_at(const Quiver& q, int a, int b, int c, int d, bool drop_cd) {
  const VertexSet rest = set_minus(all_vertices(q), sorted({a, b}));
  const auto comps = drop_cd ? components(q, rest, c, d) : components(q, rest);
  if (comps.size() != 2) return std::nullopt;
  const VertexSet* first = component_of(comps, c);
  const VertexSet* second = component_of(comps, d);
  if (first == second) return std::nullopt;
  VertexSet first_set = *first, second_set = *second;
  if (!is_type_A(q, first_set) || !is_type_A(q, second_set)) return std::nullopt;
  if (!is_connecting(q, first_set, c) || !is_connecting(q, second_set, d)) return std::nullopt;
  return Result{a, b, c, d, first_set, second_set};
}

std::optional<TypeDII> match_type_d_ii(const Quiver& q) {
  for (const Arrow& cd : q.arrows()) {
    const int c = cd.source, d = cd.target;
    std::vector<int> middles;
    for (int x = 1; x <= q.size(); ++x)
      if (q.entry(d, x) == 1 && q.entry(x, c) == 1 && q.degree(x) == 2) middles.push_back(x);
    for (std::size_t i = 0; i < middles.size(); ++i)
      for (std::size_t j = i + 1; j < middles.size(); ++j)
        if (auto r = split_at<TypeDII>(q, middles[i], middles[j], c, d, true)) return r;
  }
  return std::nullopt;
}

std::optional<TypeDIII> match_type_d_iii(const Quiver& q) {
  for (int a = 1; a <= q.size(); ++a) {
    if (q.degree(a) != 2) continue;
    for (int d = 1; d <= q.size(); ++d) {
      if (q.entry(d, a) != 1) continue;
      for (int c = 1; c <= q.size(); ++c) {
        if (q.entry(a, c) != 1 || q.entry(c, d) != 0) continue;
        for (int b = 1; b <= q.size(); ++b) {
          if (b == a || q.degree(b) != 2 || q.entry(c, b) != 1 || q.entry(b, d) != 1) continue;
          if (auto r = split_at<TypeDIII>(q, a, b, c, d, false)) return r;
        }
      }
    }
  }
  return std::nullopt;
}

// Rotate/reflect a cycle so it starts at its smallest vertex and follows
// the given arrow direction (forward = arrows cycle[i] -> cycle[i+1]).
std::vector<int> normalized_cycle(std::vector<int> cycle, bool follow_arrows, const Quiver& q) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  if (follow_arrows) {
    if (q.entry(cycle[0], cycle[1]) < 0) std::reverse(cycle.begin() + 1, cycle.end());
  } else if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

// Pieces hanging off the central part: every component of the rest must hold
// exactly one apex, be type A and have the apex connecting.
std::optional<std::vector<VertexSet>> hanging_pieces(const Quiver& q, const VertexSet& central,
                                                     const std::vector<std::optional<int>>& apexes) {
  const VertexSet rest = set_minus(all_vertices(q), central);
  const auto comps = components(q, rest);
  std::vector<VertexSet> pieces(apexes.size());
  std::vector<int> used(comps.size(), 0);
  for (std::size_t i = 0; i < apexes.size(); ++i) {
    if (!apexes[i]) continue;
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (contains(comps[c], *apexes[i])) {
        ++used[c];
        pieces[i] = comps[c];
      }
  }
  for (int u : used)
    if (u != 1) return std::nullopt;
  for (std::size_t i = 0; i < apexes.size(); ++i)
    if (apexes[i] && (!is_type_A(q, pieces[i]) || !is_connecting(q, pieces[i], *apexes[i]))) return std::nullopt;
  return pieces;
}

std::optional<TypeDIV> match_type_d_iv(const Quiver& q, const std::vector<std::vector<int>>& cycles) {
  for (const auto& raw : cycles) {
    if (!oriented_cycle(q, raw)) continue;
    const std::vector<int> cycle = normalized_cycle(raw, true, q);
    const std::size_t k = cycle.size();
    const VertexSet ring = sorted(cycle);
    std::vector<std::optional<int>> spikes(k);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const int from = cycle[i], to = cycle[(i + 1) % k];
      for (int x = 1; x <= q.size(); ++x) {
        if (contains(ring, x) || q.entry(x, from) != 1 || q.entry(to, x) != 1) continue;
        if (spikes[i]) ok = false;
        spikes[i] = x;
      }
    }
    if (!ok) continue;
    VertexSet central = ring;
    for (const auto& s : spikes)
      if (s) central.push_back(*s);
    const std::size_t spike_count = central.size() - ring.size();
    central = sorted(central);
    if (central.size() != ring.size() + spike_count) continue;
    for (std::size_t i = 0; i < k && ok; ++i) {
      VertexSet allowed{cycle[(i + k - 1) % k], cycle[(i + 1) % k]};
      if (spikes[i]) allowed.push_back(*spikes[i]);
      if (spikes[(i + k - 1) % k]) allowed.push_back(*spikes[(i + k - 1) % k]);
      allowed = sorted(allowed);
      ok = sorted(q.neighbours(cycle[i])) == allowed;
    }
    if (!ok) continue;
    auto pieces = hanging_pieces(q, ring, spikes);
    if (!pieces) continue;
    return TypeDIV{cycle, spikes, *pieces};
  }
  return std::nullopt;
}

std::optional<AffineAQuiver> match_affine(const Quiver& q, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::vector<int>> candidates;
  for (const Arrow& a : q.arrows()) {
    if (a.multiplicity > 2) return std::nullopt;
    if (a.multiplicity == 2) candidates.push_back({a.source, a.target});
  }
  // A triangle through a double arrow is a Kronecker pair with its apex.
  auto simple_cycle = [&](const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (std::abs(q.entry(c[i], c[(i + 1) % c.size()])) != 1) return false;
    return true;
  };
  for (const auto& c : cycles)
    if (simple_cycle(c) && !oriented_cycle(q, c)) candidates.push_back(c);
  if (candidates.size() != 1) return std::nullopt;
  const std::vector<int> cycle = normalized_cycle(candidates.front(), false, q);
  const std::size_t len = cycle.size();
  const VertexSet ring = sorted(cycle);
  for (const Arrow& a : q.arrows())
    if (a.multiplicity == 2 && len != 2) return std::nullopt;

  AffineAQuiver out;
  out.cycle = cycle;
  for (std::size_t i = 0; i < len; ++i) {
    const int u = cycle[i], v = cycle[(i + 1) % len];
    const bool forward = q.entry(u, v) > 0;
    out.arrows.push_back({forward ? u : v, forward ? v : u, std::nullopt, {}});
    if (len == 2) {
      out.arrows.push_back(out.arrows.back());
      break;
    }
  }
  // Apexes: x with target -> x -> source; a Kronecker cycle may carry two.
  std::vector<int> apex_pool;
  for (std::size_t i = 0; i < out.arrows.size(); ++i) {
    auto& arrow = out.arrows[i];
    if (len == 2 && i == 1) break;
    std::vector<int> found;
    for (int x = 1; x <= q.size(); ++x)
      if (!contains(ring, x) && q.entry(arrow.target, x) == 1 && q.entry(x, arrow.source) == 1) found.push_back(x);
    const std::size_t limit = len == 2 ? 2 : 1;
    if (found.size() > limit) return std::nullopt;
    if (!found.empty()) arrow.apex = found[0];
    if (len == 2 && found.size() == 2) out.arrows[1].apex = found[1];
  }
  std::vector<std::optional<int>> apexes;
  VertexSet apex_set;
  for (const auto& a : out.arrows) {
    apexes.push_back(a.apex);
    if (a.apex) apex_set.push_back(*a.apex);
  }
  if (sorted(apex_set).size() != apex_set.size()) return std::nullopt;
  for (std::size_t i = 0; i < len; ++i) {
    VertexSet allowed{cycle[(i + len - 1) % len], cycle[(i + 1) % len]};
    for (const auto& a : out.arrows)
      if (a.apex && (a.source == cycle[i] || a.target == cycle[i])) allowed.push_back(*a.apex);
    if (sorted(q.neighbours(cycle[i])) != sorted(allowed)) return std::nullopt;
  }
  auto pieces = hanging_pieces(q, ring, apexes);
  if (!pieces) return std::nullopt;
  for (std::size_t i = 0; i < out.arrows.size(); ++i) out.arrows[i].piece = (*pieces)[i];
  return out;
}

}  // namespace

VertexSet all_vertices(const Quiver& q) {
  VertexSet out(q.size());
  for (int i = 0; i < q.size(); ++i) out[i] = i + 1;
  return out;
}

std::vector<ThreeCycle> three_cycles(const Quiver& q) { return three_cycles(q, all_vertices(q)); }

std::vector<ThreeCycle> three_cycles(const Quiver& q, const VertexSet& within) {
  std::vector<ThreeCycle> out;
  for (std::size_t i = 0; i < within.size(); ++i)
    for (std::size_t j = i + 1; j < within.size(); ++j) {
      if (q.entry(within[i], within[j]) == 0) continue;
      for (std::size_t k = j + 1; k < within.size(); ++k) {
        const int a = within[i], b = within[j], c = within[k];
        if (!oriented_triangle(q, a, b, c)) continue;
        out.push_back(q.entry(a, b) == 1 ? ThreeCycle{a, b, c} : ThreeCycle{a, c, b});
      }
    }
  return out;
}

bool is_connected(const Quiver& q, const VertexSet& within) {
  return within.empty() || components(q, within).size() == 1;
}

bool is_acyclic(const Quiver& q) {
  std::vector<int> indegree(q.size() + 1, 0);
  for (const Arrow& a : q.arrows()) ++indegree[a.target];
  std::vector<int> ready;
  for (int v = 1; v <= q.size(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w = 1; w <= q.size(); ++w)
      if (q.entry(v, w) > 0 && --indegree[w] == 0) ready.push_back(w);
  }
  return removed == q.size();
}

bool is_type_A(const Quiver& q) { return is_type_A(q, all_vertices(q)); }

bool is_type_A(const Quiver& q, const VertexSet& within) {
  if (within.empty() || !is_connected(q, within)) return false;
  for (std::size_t i = 0; i < within.size(); ++i)
    for (std::size_t j = i + 1; j < within.size(); ++j)
      if (checked_abs(q.entry(within[i], within[j])) > 1) return false;
  std::map<int, int> triangles, bridges;
  for (const auto& block : blocks(q, within)) {
    if (!type_a_block(q, block)) return false;
    for (int v : block) ++(block.size() == 3 ? triangles : bridges)[v];
  }
  for (int v : within) {
    const Int deg = degree_within(q, within, v);
    if (deg > 4) return false;
    if (deg == 4 && triangles[v] != 2) return false;
    if (deg == 3 && triangles[v] != 1) return false;
  }
  return true;
}

bool is_connecting(const Quiver& q, const VertexSet& within, int v) {
  const Int deg = degree_within(q, within, v);
  if (deg > 2) return false;
  if (deg < 2) return true;
  for (const auto& t : three_cycles(q, within))
    if (t[0] == v || t[1] == v || t[2] == v) return true;
  return false;
}

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::Acyclic: return "acyclic";
    case Family::TypeA: return "A";
    case Family::TypeD_I: return "D_I";
    case Family::TypeD_II: return "D_II";
    case Family::TypeD_III: return "D_III";
    case Family::TypeD_IV: return "D_IV";
    case Family::AffineA: return "affine_A";
    case Family::Unknown: return "unknown";
  }
  return "unknown";
}

Family family(const Classification& c) { return static_cast<Family>(c.index()); }

Classification classify(const Quiver& q) {
  if (q.size() != 0 && is_acyclic(q)) return AcyclicQuiver{};
  return classify_shape(q);
}

Classification classify_shape(const Quiver& q) {
  if (q.size() == 0) return UnknownQuiver{};
  if (!is_connected(q, all_vertices(q))) return UnknownQuiver{};
  if (is_type_A(q)) return TypeAQuiver{};
  const auto cycles = chordless_cycles(q);
  if (simple_arrows(q)) {
    if (auto m = match_type_d_i(q)) return *m;
    if (auto m = match_type_d_ii(q)) return *m;
    if (auto m = match_type_d_iii(q)) return *m;
    if (cycles)
      if (auto m = match_type_d_iv(q, *cycles)) return *m;
  }
  if (cycles)
    if (auto m = match_affine(q, *cycles)) return *m;
  return UnknownQuiver{};
}

LengthFormula length_formula(const Quiver& q) { return length_formula(q, classify(q)); }

LengthFormula length_formula(const Quiver& q, const Classification& c) {
  LengthFormula f;
  f.family = family(c);
  const int n = q.size();
  std::vector<FormulaTerm> terms{{"n", n}};
  auto add_cycles = [&](Int t) {
    if (t != 0) terms.push_back({"3cycles", t});
    return t;
  };
  Int length = n;
  switch (f.family) {
    case Family::Acyclic:
      break;
    case Family::TypeA:
    case Family::TypeD_I:
      length += add_cycles(static_cast<Int>(three_cycles(q).size()));
      break;
    case Family::AffineA: {
      // Triangles through the double arrow of a Kronecker cycle count too.
      Int cycles = static_cast<Int>(three_cycles(q).size());
      const auto& a = std::get<AffineAQuiver>(c);
      if (a.cycle.size() == 2)
        for (const auto& arrow : a.arrows) cycles += arrow.apex ? 1 : 0;
      length += add_cycles(cycles);
      break;
    }
    case Family::TypeD_II: {
      const auto& d = std::get<TypeDII>(c);
      length += add_cycles(static_cast<Int>(three_cycles(q, d.first).size() + three_cycles(q, d.second).size())) + 1;
      break;
    }
    case Family::TypeD_III:
      length += add_cycles(static_cast<Int>(three_cycles(q).size())) + 2;
      break;
    case Family::TypeD_IV: {
      const auto& d = std::get<TypeDIV>(c);
      Int pieces = 0;
      for (const auto& p : d.pieces)
        if (!p.empty()) pieces += static_cast<Int>(three_cycles(q, p).size());
      length += add_cycles(pieces);
      const std::size_t k = d.cycle.size();
      Int deg4 = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (q.degree(d.cycle[i]) == 4) ++deg4;
      terms.push_back({"deg4", deg4});
      terms.push_back({"k", static_cast<Int>(k)});
      length += deg4 + static_cast<Int>(k) - 2;
      break;
    }
    case Family::Unknown:
      fail(ErrorKind::UnsupportedClass, "quiver is outside the supported families");
  }
  f.length = static_cast<int>(length);
  f.breakdown = std::move(terms);
  return f;
}

int min_length(const Quiver& q) { return length_formula(q).length; }

std::pair<int, int> affine_parameters(const Quiver& q, std::size_t node_budget) {
  if (family(classify(q)) != Family::AffineA && family(classify(q)) != Family::Acyclic)
    fail(ErrorKind::PreconditionViolated, "quiver is not of affine type A");
  // Best-first descent on the number of 3-cycles until an acyclic member appears.
  using Item = std::pair<std::size_t, std::size_t>;  // (3-cycles, insertion order)
  std::vector<Quiver> pool{q};
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  std::set<std::vector<Int>> seen;
  auto key = [](const Quiver& x) {
    std::vector<Int> k;
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < x.size(); ++j) k.push_back(x.exchange_matrix()(i, j));
    return k;
  };
  open.push({three_cycles(q).size(), 0});
  seen.insert(key(q));
  while (!open.empty()) {
    const Quiver current = pool[open.top().second];
    open.pop();
    if (is_acyclic(current)) {
      std::vector<std::vector<int>> cycles;
      for (const Arrow& a : current.arrows())
        if (a.multiplicity == 2) cycles.push_back({a.source, a.target});
      if (auto found = chordless_cycles(current))
        for (auto& c : *found) cycles.push_back(std::move(c));
      if (cycles.size() != 1) fail(ErrorKind::PreconditionViolated, "acyclic member has no unique cycle");
      const auto& cycle = cycles.front();
      if (cycle.size() == 2) return {1, 1};
      int forward = 0, backward = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        (current.entry(cycle[i], cycle[(i + 1) % cycle.size()]) > 0 ? forward : backward) += 1;
      return {std::max(forward, backward), std::min(forward, backward)};
    }
    for (int k = 1; k <= current.size(); ++k) {
      Quiver next = mutate(current, k);
      if (!seen.insert(key(next)).second) continue;
      if (seen.size() > node_budget) fail(ErrorKind::ResourceLimit, "no acyclic member found within budget");
      open.push({three_cycles(next).size(), pool.size()});
      pool.push_back(std::move(next));
    }
  }
  fail(ErrorKind::ResourceLimit, "mutation search exhausted without an acyclic member");
}

BranchDecomposition branch_decomposition(const Quiver& q) {
  const VertexSet all = all_vertices(q);
  VertexSet core;
  for (const auto& block : blocks(q, all))
    if (!type_a_block(q, block)) core.insert(core.end(), block.begin(), block.end());
  core = sorted(core);
  if (core.empty() && !all.empty()) core = {all.front()};
  for (;;) {
    bool grew = false;
    for (const auto& comp : components(q, set_minus(all, core))) {
      VertexSet attach;
      for (int v : comp)
        for (int x : neighbours_within(q, core, v)) attach.push_back(x);
      attach = sorted(attach);
      if (attach.size() == 1 && is_type_A(q, sorted([&] {
            VertexSet b = comp;
            b.push_back(attach.front());
            return b;
          }())))
        continue;
      core = sorted([&] {
        VertexSet c = core;
        c.insert(c.end(), comp.begin(), comp.end());
        return c;
      }());
      grew = true;
      break;
    }
    if (!grew) break;
  }
  return branch_decomposition(q, core);
}

BranchDecomposition branch_decomposition(const Quiver& q, const VertexSet& core_in) {
  const VertexSet core = sorted(core_in);
  for (int v : core)
    if (v < 1 || v > q.size()) fail(ErrorKind::IndexOutOfRange, "core vertex " + std::to_string(v));
  BranchDecomposition out{core, {}};
  for (const auto& comp : components(q, set_minus(all_vertices(q), core))) {
    VertexSet attach;
    for (int v : comp)
      for (int x : neighbours_within(q, core, v)) attach.push_back(x);
    attach = sorted(attach);
    if (attach.size() != 1) fail(ErrorKind::NotABranchQuiver, "a component meets the core in " + std::to_string(attach.size()) + " vertices");
    VertexSet vertices = comp;
    vertices.push_back(attach.front());
    vertices = sorted(vertices);
    if (!is_type_A(q, vertices)) fail(ErrorKind::NotABranchQuiver, "a pendant part is not of type A");
    out.branches.push_back({vertices, attach.front()});
  }
  return out;
}

int branch_length(const Quiver& q, const BranchDecomposition& d, int core_length) {
  int total = core_length;
  for (const Branch& b : d.branches)
    total += static_cast<int>(b.vertices.size() + three_cycles(q, b.vertices).size()) - 1;
  return total;
}

}  // namespace greenseq
