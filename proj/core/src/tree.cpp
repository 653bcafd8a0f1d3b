#include "whitefact/tree.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "whitefact/io.hpp"

namespace whitefact {

TreeVertex TreeVertex::u(Word rep) { return TreeVertex(Kind::U, 0, std::move(rep)); }

TreeVertex TreeVertex::c(std::size_t factor, const Word& rep) {
  rep.system()->factor(factor);  // range check
  return TreeVertex(Kind::C, factor, rep.strip_leading(factor));
}

std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b) {
  if (a.kind_ != b.kind_) return a.kind_ == TreeVertex::Kind::U ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
  if (auto c = a.factor_ <=> b.factor_; c != 0) return c;
  return a.rep_ <=> b.rep_;
}

TreeVertex v_canon(TreeVertex::Kind kind, std::size_t factor, const Word& rep) {
  return kind == TreeVertex::Kind::U ? TreeVertex::u(rep) : TreeVertex::c(factor, rep);
}

TreeVertex v_act(const TreeVertex& v, const Word& g) {
  return v_canon(v.kind(), v.factor(), v.rep() * g);
}

std::vector<TreeVertex> neighbours(const TreeVertex& v) {
  const FactorSystem& sys = *v.rep().system();
  std::vector<TreeVertex> out;
  if (v.is_u()) {
    for (std::size_t i = 1; i <= sys.rank(); ++i) out.push_back(TreeVertex::c(i, v.rep()));
    return out;
  }
  const FactorGroup& g = sys.factor(v.factor());
  if (!g.finite()) throw DomainError("oracle requires finite factors");
  for (const auto& h : g.elements())
    out.push_back(TreeVertex::u(Word::letter(v.rep().system(), h) * v.rep()));
  return out;
}

namespace {

// Appends U(suffix_1(c) t), C(.), ..., U(c t): the chain from U(t) to U(c t)
// without its first vertex. Intermediate C-vertices are C(f, suffix t) with f
// the factor of the syllable being prepended.
void append_chain(std::vector<TreeVertex>& path, const Word& c, const Word& t) {
  const std::size_t m = c.length();
  for (std::size_t k = 0; k < m; ++k) {
    const Word tail = c.suffix(k) * t;
    const std::size_t f = c.syllables()[m - 1 - k].factor;
    path.push_back(TreeVertex::c(f, tail));
    path.push_back(TreeVertex::u(c.suffix(k + 1) * t));
  }
}

// Geodesic from a base vertex (U(1) or C(i,1)) to q, whose rep is given
// relative to that base.
std::vector<TreeVertex> based_geodesic(const TreeVertex& base, const TreeVertex& q) {
  const SystemRef& sys = q.rep().system();
  const Word one(sys);
  std::vector<TreeVertex> path{base};
  if (base.is_u()) {
    append_chain(path, q.rep(), one);
    if (q.is_c()) path.push_back(q);
    return path;
  }
  const std::size_t i = base.factor();
  if (q.is_c() && q.factor() == i && q.rep().empty()) return path;
  // For a C target the chain runs to U(w), w = q.rep; for a U target to U(w).
  const Word& w = q.rep();
  Word t(sys);
  if (w.trailing_factor() == i) t = w.suffix(1);
  const Word c = w.strip_trailing(i);
  path.push_back(TreeVertex::u(t));
  append_chain(path, c, t);
  if (q.is_c()) path.push_back(q);
  return path;
}

}  // namespace

std::vector<TreeVertex> geodesic(const TreeVertex& p, const TreeVertex& q) {
  require_same_system(p.rep(), q.rep());
  if (p.is_c() && q.is_u()) {
    auto path = geodesic(q, p);
    std::reverse(path.begin(), path.end());
    return path;
  }
  const Word shift = p.rep();
  const Word back = shift.inverse();
  const TreeVertex base = v_act(p, back);
  auto path = based_geodesic(base, v_act(q, back));
  for (auto& v : path) v = v_act(v, shift);
  return path;
}

std::size_t distance(const TreeVertex& p, const TreeVertex& q) {
  require_same_system(p.rep(), q.rep());
  const Word w = q.rep() * p.rep().inverse();
  if (p.is_u() && q.is_u()) return 2 * w.length();
  if (p.is_u() != q.is_u()) {
    const std::size_t i = p.is_c() ? p.factor() : q.factor();
    const Word rel = p.is_u() ? w : w.inverse();
    // rel connects U-side to C-side: C(i, rel) seen from U(1).
    return 2 * rel.strip_leading(i).length() + 1;
  }
  const std::size_t i = p.factor(), j = q.factor();
  const Word core = w.strip_leading(j).strip_trailing(i);
  if (i == j && w.strip_leading(j).empty()) return 0;
  return 2 * core.length() + 2;
}

bool lies_between(const TreeVertex& x, const TreeVertex& p, const TreeVertex& q) {
  const auto path = geodesic(p, q);
  return std::find(path.begin(), path.end(), x) != path.end();
}

bool stabilises(const TreeVertex& v, const Word& h) { return v_act(v, h) == v; }

std::size_t Ball::index_of(const TreeVertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return vertices.size();
  return static_cast<std::size_t>(it - vertices.begin());
}

Ball bfs_ball(const TreeVertex& center, std::size_t radius) {
  if (!center.rep().system()->all_finite()) throw DomainError("oracle requires finite factors");
  std::map<TreeVertex, std::size_t> depth{{center, 0}};
  std::deque<TreeVertex> frontier{center};
  while (!frontier.empty()) {
    TreeVertex v = frontier.front();
    frontier.pop_front();
    const std::size_t d = depth.at(v);
    if (d == radius) continue;
    for (auto& w : neighbours(v)) {
      if (depth.emplace(w, d + 1).second) frontier.push_back(std::move(w));
    }
  }
  Ball ball{center, radius, {}, {}, {}};
  for (const auto& [v, d] : depth) {
    ball.vertices.push_back(v);
    ball.depth.push_back(d);
  }
  ball.adjacency.resize(ball.vertices.size());
  for (std::size_t k = 0; k < ball.vertices.size(); ++k) {
    for (const auto& w : neighbours(ball.vertices[k])) {
      const std::size_t idx = ball.index_of(w);
      if (idx < ball.vertices.size()) ball.adjacency[k].push_back(idx);
    }
    std::sort(ball.adjacency[k].begin(), ball.adjacency[k].end());
  }
  return ball;
}

std::vector<std::size_t> ball_distances(const Ball& ball, std::size_t source) {
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(ball.vertices.size(), unreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : ball.adjacency[u]) {
      if (dist[w] == unreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::string vertex_name(const TreeVertex& v) {
  const std::string word = word_to_json(v.rep()).dump();
  if (v.is_u()) return "U:" + word;
  return "C" + std::to_string(v.factor()) + ":" + word;
}

}  // namespace whitefact
