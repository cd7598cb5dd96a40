#include "greenseq/construct.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "greenseq/disk.hpp"
#include "greenseq/error.hpp"

namespace greenseq {

namespace {

bool contains(const VertexSet& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

GreenSequence to_global(const GreenSequence& local, const VertexSet& vertices) {
  GreenSequence out;
  out.reserve(local.size());
  for (int v : local) out.push_back(vertices[v - 1]);
  return out;
}

GreenSequence concat(GreenSequence a, const GreenSequence& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Sources first, smallest label among the ready ones.
GreenSequence source_order(const Quiver& q) {
  const int n = q.size();
  std::vector<int> indegree(n + 1, 0);
  for (const Arrow& a : q.arrows()) indegree[a.target] += 1;
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indegree[v] == 0) ready.push(v);
  GreenSequence out;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    out.push_back(v);
    for (const Arrow& a : q.arrows())
      if (a.source == v && --indegree[a.target] == 0) ready.push(a.target);
  }
  if (static_cast<int>(out.size()) != n) fail(ErrorKind::PreconditionViolated, "quiver has an oriented cycle");
  return out;
}

// Vertices reachable from `start` without using the two removed edges.
VertexSet side_of(const Quiver& q, int start, std::pair<int, int> cut1, std::pair<int, int> cut2) {
  auto cut = [&](int u, int v) {
    auto same = [&](std::pair<int, int> e) { return (e.first == u && e.second == v) || (e.first == v && e.second == u); };
    return same(cut1) || same(cut2);
  };
  VertexSet seen{start};
  std::vector<int> todo{start};
  while (!todo.empty()) {
    const int u = todo.back();
    todo.pop_back();
    for (int v : q.neighbours(u))
      if (!cut(u, v) && !contains(seen, v)) {
        seen.push_back(v);
        todo.push_back(v);
      }
  }
  return sorted(seen);
}

struct CycleEdge {
  int from = 0, to = 0;  // ring[i], ring[i+1]
  bool clockwise = false;
  std::optional<int> apex;
};

AffineComponents components_for(const Quiver& q, const std::vector<int>& ring, const std::vector<CycleEdge>& edges) {
  const std::size_t len = ring.size();
  std::size_t start = len;
  for (std::size_t i = 0; i < len; ++i)
    if (edges[i].clockwise && !edges[(i + len - 1) % len].clockwise) {
      start = i;
      break;
    }
  if (start == len) fail(ErrorKind::PreconditionViolated, "cycle is oriented");

  struct Run {
    bool clockwise;
    std::vector<std::size_t> edges;  // indices into `edges`, ring order
  };
  std::vector<Run> runs;
  for (std::size_t step = 0; step < len; ++step) {
    const std::size_t i = (start + step) % len;
    if (runs.empty() || runs.back().clockwise != edges[i].clockwise) runs.push_back({edges[i].clockwise, {}});
    runs.back().edges.push_back(i);
  }

  std::vector<AffineComponent> cw, ccw;
  // Apex of the arrow between consecutive path vertices.
  std::map<std::pair<int, int>, std::optional<int>> apex_of;
  for (const auto& e : edges) {
    apex_of[{e.from, e.to}] = e.apex;
    apex_of[{e.to, e.from}] = e.apex;
  }
  for (const Run& run : runs) {
    AffineComponent c;
    if (run.clockwise) {
      c.path.push_back(edges[run.edges.front()].from);
      for (std::size_t i : run.edges) c.path.push_back(edges[i].to);
    } else {
      c.path.push_back(edges[run.edges.back()].to);
      for (auto it = run.edges.rbegin(); it != run.edges.rend(); ++it) c.path.push_back(edges[*it].from);
    }
    for (std::size_t t = 1; t < c.path.size(); ++t)
      if (auto z = apex_of[{c.path[t - 1], c.path[t]}]) c.apexes.push_back(*z);
    (run.clockwise ? cw : ccw).push_back(std::move(c));
  }

  // Vertices that close a clockwise final; they stay out of the
  // counterclockwise finals.
  VertexSet closers;
  for (auto& r : cw) {
    // (z_1, z_2, s(a_2), ..., z_d, s(a_d))
    for (std::size_t t = 1; t < r.path.size(); ++t) {
      const auto z = apex_of[{r.path[t - 1], r.path[t]}];
      if (!z) fail(ErrorKind::PreconditionViolated, "clockwise arrow outside a 3-cycle");
      r.initial.push_back(*z);
      if (t >= 2) r.initial.push_back(r.path[t - 1]);
    }
    r.final = r.initial;
    r.final.erase(std::remove_if(r.final.begin(), r.final.end(), [&](int v) { return contains(r.path, v); }), r.final.end());
    const int end = r.path.back();
    for (const auto& s : ccw)
      if (s.path.back() == end) {
        const int j = s.path[s.path.size() - 2];
        if (apex_of[{j, end}]) {
          r.final.push_back(j);
          closers.push_back(j);
        }
      }
  }
  for (auto& s : ccw) {
    s.initial = s.path;
    s.final = sorted(s.apexes);
    VertexSet fed;
    for (int i : s.path) {
      bool from_apex = false;
      for (int z : s.apexes) from_apex |= q.entry(z, i) > 0;
      if (from_apex && !contains(closers, i)) fed.push_back(i);
    }
    fed = sorted(fed);
    s.final.insert(s.final.end(), fed.begin(), fed.end());
  }

  AffineComponents out;
  std::vector<std::size_t> order(cw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cw[a].path.front() < cw[b].path.front(); });
  for (std::size_t i : order) {
    const auto match = std::find_if(ccw.begin(), ccw.end(), [&](const AffineComponent& s) { return s.path.front() == cw[i].path.front(); });
    if (match == ccw.end()) fail(ErrorKind::ConstructionInvariantViolated, "unpaired clockwise component");
    out.clockwise.push_back(cw[i]);
    out.counterclockwise.push_back(*match);
  }
  if (out.counterclockwise.size() != ccw.size()) fail(ErrorKind::ConstructionInvariantViolated, "unpaired counterclockwise component");
  return out;
}

// Orientations (as rings listing clockwise order) whose clockwise arrows all
// lie in 3-cycles; forward first.
std::vector<std::vector<CycleEdge>> admissible_orientations(const Quiver& q) {
  const Classification c = classify_shape(q);
  if (family(c) != Family::AffineA) fail(ErrorKind::PreconditionViolated, "not an affine type A quiver");
  const auto& a = std::get<AffineAQuiver>(c);
  if (a.cycle.size() < 3) fail(ErrorKind::PreconditionViolated, "the cycle is a Kronecker pair");
  for (const auto& arrow : a.arrows) {
    if (arrow.apex && arrow.piece != VertexSet{*arrow.apex})
      fail(ErrorKind::PreconditionViolated, "attachment at apex " + std::to_string(*arrow.apex) + " is not a single vertex");
  }
  std::vector<std::vector<CycleEdge>> out;
  const std::size_t len = a.cycle.size();
  for (const bool forward : {true, false}) {
    std::vector<int> ring = a.cycle;
    if (!forward) std::reverse(ring.begin(), ring.end());
    std::vector<CycleEdge> edges;
    bool covered = true;
    for (std::size_t i = 0; i < len; ++i) {
      CycleEdge e{ring[i], ring[(i + 1) % len], q.entry(ring[i], ring[(i + 1) % len]) > 0, std::nullopt};
      for (const auto& arrow : a.arrows)
        if ((arrow.source == e.from && arrow.target == e.to) || (arrow.source == e.to && arrow.target == e.from)) e.apex = arrow.apex;
      if (e.clockwise && !e.apex) covered = false;
      edges.push_back(e);
    }
    if (covered) out.push_back(std::move(edges));
  }
  if (out.empty()) fail(ErrorKind::PreconditionViolated, "quiver is a direct sum of two type A quivers");
  return out;
}

std::vector<int> ring_of(const std::vector<CycleEdge>& edges) {
  std::vector<int> ring;
  for (const auto& e : edges) ring.push_back(e.from);
  return ring;
}

GreenSequence affine_dispatch(const Quiver& q, const AffineAQuiver& a, bool& used_search) {
  const std::size_t len = a.cycle.size();
  if (len >= 3) {
    // A clockwise and a counterclockwise arrow with no apex split the quiver.
    std::optional<CycleArrow> forward, backward;
    for (std::size_t i = 0; i < len; ++i) {
      const CycleArrow& arrow = a.arrows[i];
      if (arrow.apex) continue;
      const bool is_forward = arrow.source == a.cycle[i];
      auto& slot = is_forward ? forward : backward;
      if (!slot) slot = arrow;
    }
    if (forward && backward) {
      const VertexSet first = side_of(q, forward->source, {forward->source, forward->target}, {backward->source, backward->target});
      VertexSet second;
      for (int v = 1; v <= q.size(); ++v)
        if (!contains(first, v)) second.push_back(v);
      if (!contains(first, backward->source) || !contains(second, forward->target) || !contains(second, backward->target))
        fail(ErrorKind::ConstructionInvariantViolated, "direct sum split does not separate the cycle");
      const Construction c1 = min_mgs(full_subquiver(q, first));
      const Construction c2 = min_mgs(full_subquiver(q, second));
      used_search = c1.used_search || c2.used_search;
      return concat(to_global(c1.sequence, first), to_global(c2.sequence, second));
    }
  }
  VertexSet core(a.cycle.begin(), a.cycle.end());
  for (const auto& arrow : a.arrows)
    if (arrow.apex) core.push_back(*arrow.apex);
  core = sorted(core);
  const Quiver restricted = full_subquiver(q, core);
  GreenSequence local;
  try {
    local = affine_mgs(restricted);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionViolated) throw;
    // Kronecker cycles with apexes fall outside the component construction.
    const SearchCertificate cert = shortest_mgs(restricted, min_length(restricted));
    if (!cert.witness) fail(ErrorKind::ConstructionInvariantViolated, "no sequence of formula length on the affine core");
    local = *cert.witness;
    used_search = true;
  }
  return attach_branch_mgs(q, core, to_global(local, core));
}

}  // namespace

Quiver direct_sum(const DirectSumSpec& spec) {
  const int n1 = spec.first.size(), n2 = spec.second.size();
  if (spec.tails.size() != spec.heads.size()) fail(ErrorKind::BadIndex, "tails and heads differ in length");
  std::vector<Arrow> arrows = spec.first.arrows();
  for (Arrow a : spec.second.arrows()) arrows.push_back({a.source + n1, a.target + n1, a.multiplicity});
  std::map<std::pair<int, int>, Int> links;
  for (std::size_t i = 0; i < spec.tails.size(); ++i) {
    const int t = spec.tails[i], h = spec.heads[i];
    if (t < 1 || t > n1) fail(ErrorKind::BadIndex, "tail " + std::to_string(t) + " outside the first quiver");
    if (h < 1 || h > n2) fail(ErrorKind::BadIndex, "head " + std::to_string(h) + " outside the second quiver");
    links[{t, h + n1}] += 1;
  }
  for (const auto& [th, m] : links) arrows.push_back({th.first, th.second, m});
  return Quiver::from_arrows(n1 + n2, arrows);
}

GreenSequence concat_mgs(const DirectSumSpec& spec, const GreenSequence& first_mgs, const GreenSequence& second_mgs) {
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < spec.tails.size(); ++i)
    if (!pairs.insert({spec.tails[i], spec.heads[i]}).second)
      fail(ErrorKind::HypothesisViolated, "parallel arrows " + std::to_string(spec.tails[i]) + " -> " + std::to_string(spec.heads[i]));
  GreenSequence out = first_mgs;
  for (int v : second_mgs) out.push_back(v + spec.first.size());
  return out;
}

GreenSequence attach_branch_mgs(const Quiver& q, const VertexSet& core_in, const GreenSequence& core_mgs) {
  VertexSet inside = sorted(core_in);
  if (inside.empty()) fail(ErrorKind::NotABranchQuiver, "empty core");
  for (int v : inside)
    if (v < 1 || v > q.size()) fail(ErrorKind::IndexOutOfRange, "core vertex " + std::to_string(v));
  GreenSequence seq = core_mgs;
  std::vector<bool> in(q.size() + 1, false);
  for (int v : inside) in[v] = true;
  std::size_t covered = inside.size();
  auto inner_neighbours = [&](int v) {
    std::vector<int> out;
    for (int u : q.neighbours(v))
      if (in[u]) out.push_back(u);
    return out;
  };
  while (covered < static_cast<std::size_t>(q.size())) {
    int v = 0;
    for (int cand = 1; cand <= q.size() && !v; ++cand)
      if (!in[cand] && !inner_neighbours(cand).empty()) v = cand;
    if (!v) fail(ErrorKind::NotABranchQuiver, "part of the quiver is not connected to the core");
    const auto touch = inner_neighbours(v);
    if (touch.size() != 1) fail(ErrorKind::NotABranchQuiver, "vertex " + std::to_string(v) + " meets the core more than once");
    const int x = touch.front();
    if (std::abs(q.entry(x, v)) != 1) fail(ErrorKind::NotABranchQuiver, "multiple arrow at vertex " + std::to_string(v));
    // Partner closing an oriented 3-cycle with x and v.
    int w = 0;
    for (int cand : q.neighbours(v)) {
      if (in[cand] || cand == x) continue;
      const Int xv = q.entry(x, v), vw = q.entry(v, cand), wx = q.entry(cand, x);
      if (xv == vw && vw == wx) w = cand;
    }
    if (w) {
      if (inner_neighbours(w) != std::vector<int>{x}) fail(ErrorKind::NotABranchQuiver, "vertex " + std::to_string(w) + " meets the core more than once");
      // Triangle x -> first -> second -> x.
      const int first = q.entry(x, v) > 0 ? v : w;
      const int second = first == v ? w : v;
      GreenSequence next{second};
      next.insert(next.end(), seq.begin(), seq.end());
      next.push_back(first);
      next.push_back(second);
      seq = std::move(next);
      in[v] = in[w] = true;
      covered += 2;
    } else {
      if (q.entry(x, v) > 0) {
        seq.push_back(v);
      } else {
        seq.insert(seq.begin(), v);
      }
      in[v] = true;
      covered += 1;
    }
  }
  return seq;
}

AffineComponents affine_components(const Quiver& q) {
  const auto orientations = admissible_orientations(q);
  return components_for(q, ring_of(orientations.front()), orientations.front());
}

GreenSequence affine_sequence(const AffineComponents& c) {
  GreenSequence out;
  for (const auto& r : c.clockwise) out = concat(std::move(out), r.initial);
  for (const auto& s : c.counterclockwise) out = concat(std::move(out), s.initial);
  for (const auto& s : c.counterclockwise) out = concat(std::move(out), s.final);
  for (const auto& r : c.clockwise) out = concat(std::move(out), r.final);
  return out;
}

GreenSequence affine_mgs(const Quiver& q) {
  const auto orientations = admissible_orientations(q);
  std::string reason;
  for (const auto& edges : orientations) {
    const GreenSequence s = affine_sequence(components_for(q, ring_of(edges), edges));
    const Verdict v = check_maximal_green(q, s);
    if (v.valid) return s;
    reason = v.reason;
  }
  fail(ErrorKind::ConstructionInvariantViolated, "component sequence is not maximal green: " + reason);
}

GreenSequence type_d_ii_core(const TypeDII& d) { return {d.d, d.a, d.b, d.c, d.d}; }
GreenSequence type_d_iii_core(const TypeDIII& d) { return {d.a, d.c, d.b, d.d, d.c, d.a}; }

Construction min_mgs(const Quiver& q) {
  const Classification c = classify(q);
  Construction out;
  switch (family(c)) {
    case Family::Acyclic:
      out.sequence = source_order(q);
      break;
    case Family::TypeA: {
      const int root = 1;
      out.sequence = attach_branch_mgs(q, {root}, {root});
      break;
    }
    case Family::TypeD_I: {
      const auto& d = std::get<TypeDI>(c);
      const VertexSet core = sorted({d.a, d.b, d.c});
      out.sequence = attach_branch_mgs(q, core, to_global(source_order(full_subquiver(q, core)), core));
      break;
    }
    case Family::TypeD_II: {
      const auto& d = std::get<TypeDII>(c);
      out.sequence = attach_branch_mgs(q, {d.a, d.b, d.c, d.d}, type_d_ii_core(d));
      break;
    }
    case Family::TypeD_III: {
      const auto& d = std::get<TypeDIII>(c);
      out.sequence = attach_branch_mgs(q, {d.a, d.b, d.c, d.d}, type_d_iii_core(d));
      break;
    }
    case Family::TypeD_IV: {
      const auto& d = std::get<TypeDIV>(c);
      VertexSet central(d.cycle.begin(), d.cycle.end());
      for (const auto& b : d.spikes)
        if (b) central.push_back(*b);
      out.sequence = attach_branch_mgs(q, sorted(central), type_IV_central_mgs(q, d));
      break;
    }
    case Family::AffineA:
      out.sequence = affine_dispatch(q, std::get<AffineAQuiver>(c), out.used_search);
      break;
    case Family::Unknown:
      fail(ErrorKind::UnsupportedClass, "quiver is outside the supported families");
  }
  out.length = static_cast<int>(out.sequence.size());
  const Verdict v = check_maximal_green(q, out.sequence);
  if (!v.valid) fail(ErrorKind::ConstructionInvariantViolated, std::string(family_tag(family(c))) + " construction failed: " + v.reason);
  const int expected = length_formula(q, c).length;
  if (out.length != expected)
    fail(ErrorKind::ConstructionInvariantViolated,
         "constructed length " + std::to_string(out.length) + " differs from the formula " + std::to_string(expected));
  return out;
}

}  // namespace greenseq
