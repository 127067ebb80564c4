#include "knotpoly/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace knotpoly {

std::vector<std::array<ArcEnd, 2>> arc_endpoints(const Diagram& d) {
  std::vector<std::vector<ArcEnd>> hits(d.narcs);
  for (int c = 0; c < d.n(); ++c)
    for (int p = 0; p < 4; ++p) {
      int a = d.crossings[c].arcs[p];
      if (a < 0 || a >= d.narcs) throw std::invalid_argument("arc id out of range");
      hits[a].push_back({c, p});
    }
  std::vector<std::array<ArcEnd, 2>> out(d.narcs);
  for (int a = 0; a < d.narcs; ++a) {
    if (hits[a].size() != 2) throw std::invalid_argument("arc does not occur exactly twice");
    std::sort(hits[a].begin(), hits[a].end());
    out[a] = {hits[a][0], hits[a][1]};
  }
  return out;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> errors;
  std::vector<int> count(std::max(d.narcs, 0), 0);
  for (int c = 0; c < d.n(); ++c) {
    for (int p = 0; p < 4; ++p) {
      int a = d.crossings[c].arcs[p];
      if (a < 0 || a >= d.narcs) {
        errors.push_back("crossing " + std::to_string(c) + " port " + std::to_string(p) +
                         ": arc id out of range");
        continue;
      }
      ++count[a];
    }
    if (d.crossings[c].over_diag != 0 && d.crossings[c].over_diag != 1)
      errors.push_back("crossing " + std::to_string(c) + ": bad over_diag");
  }
  for (int a = 0; a < d.narcs; ++a) {
    if (count[a] == 1) errors.push_back("dangling arc " + std::to_string(a));
    else if (count[a] != 2)
      errors.push_back("arc " + std::to_string(a) + " occurs " + std::to_string(count[a]) +
                       " times");
  }
  if (d.free_loops < 0) errors.push_back("negative free loop count");
  return errors;
}

namespace {

// directed step: moving along `arc` toward endpoint index `end`
struct Dart {
  int arc;
  int end;
  friend bool operator==(const Dart&, const Dart&) = default;
};

int other_end(const std::vector<std::array<ArcEnd, 2>>& ends, int arc, ArcEnd at) {
  return ends[arc][0] == at ? 1 : 0;
}

}  // namespace

Orientation orient(const Diagram& d, const std::vector<bool>& flip) {
  auto ends = arc_endpoints(d);
  Orientation o;
  o.incoming.assign(d.n(), {false, false, false, false});
  o.arc_component.assign(d.narcs, -1);

  int comp = 0;
  for (int a0 = 0; a0 < d.narcs; ++a0) {
    if (o.arc_component[a0] >= 0) continue;
    bool rev = comp < static_cast<int>(flip.size()) && flip[comp];
    Dart start{a0, rev ? 0 : 1};
    Dart cur = start;
    do {
      o.arc_component[cur.arc] = comp;
      ArcEnd head = ends[cur.arc][cur.end];
      o.incoming[head.crossing][head.port] = true;
      int q = head.port ^ 2;  // the strand exits at the opposite port
      int b = d.crossings[head.crossing].arcs[q];
      cur = Dart{b, other_end(ends, b, {head.crossing, q})};
    } while (!(cur == start));
    ++comp;
  }

  o.crossing_sign.assign(d.n(), 0);
  o.writhe = 0;
  for (int c = 0; c < d.n(); ++c) {
    int od = d.crossings[c].over_diag;
    int over_in = o.incoming[c][od] ? od : od + 2;
    int under_in = o.incoming[c][(od + 1) % 4] ? (od + 1) % 4 : (od + 3) % 4;
    o.crossing_sign[c] = (under_in == (over_in + 1) % 4) ? 1 : -1;
    o.writhe += o.crossing_sign[c];
  }
  o.n_components = comp + d.free_loops;
  return o;
}

Orientation orient(const Diagram& d) { return orient(d, {}); }

Orientation orientation_from_incoming(const Diagram& d,
                                      const std::vector<std::array<bool, 4>>& incoming) {
  auto ends = arc_endpoints(d);
  Orientation o;
  o.incoming = incoming;
  o.arc_component.assign(d.narcs, -1);
  int comp = 0;
  for (int a0 = 0; a0 < d.narcs; ++a0) {
    if (o.arc_component[a0] >= 0) continue;
    int end = incoming[ends[a0][0].crossing][ends[a0][0].port] ? 0 : 1;
    Dart start{a0, end};
    Dart cur = start;
    do {
      o.arc_component[cur.arc] = comp;
      ArcEnd head = ends[cur.arc][cur.end];
      if (!o.incoming[head.crossing][head.port])
        throw std::invalid_argument("orientation_from_incoming: inconsistent directions");
      int q = head.port ^ 2;
      int b = d.crossings[head.crossing].arcs[q];
      cur = Dart{b, other_end(ends, b, {head.crossing, q})};
    } while (!(cur == start));
    ++comp;
  }
  o.crossing_sign.assign(d.n(), 0);
  o.writhe = 0;
  for (int c = 0; c < d.n(); ++c) {
    int od = d.crossings[c].over_diag;
    int over_in = o.incoming[c][od] ? od : od + 2;
    int under_in = o.incoming[c][(od + 1) % 4] ? (od + 1) % 4 : (od + 3) % 4;
    o.crossing_sign[c] = (under_in == (over_in + 1) % 4) ? 1 : -1;
    o.writhe += o.crossing_sign[c];
  }
  o.n_components = comp + d.free_loops;
  return o;
}

int component_count(const Diagram& d) { return orient(d).n_components; }

int writhe(const Diagram& d) { return orient(d).writhe; }

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (auto& c : m.crossings) c.over_diag ^= 1;
  return m;
}

Diagram connected_sum(const Diagram& a, const Diagram& b, int arc_a, int arc_b) {
  if (a.n() == 0) {
    Diagram r = b;
    r.free_loops += std::max(a.free_loops - 1, 0);
    return r;
  }
  if (b.n() == 0) {
    Diagram r = a;
    r.free_loops += std::max(b.free_loops - 1, 0);
    return r;
  }
  if (arc_a < 0 || arc_a >= a.narcs || arc_b < 0 || arc_b >= b.narcs)
    throw std::invalid_argument("connected_sum: splice arc out of range");

  Orientation oa = orient(a), ob = orient(b);
  auto ea = arc_endpoints(a), eb = arc_endpoints(b);

  Diagram r;
  r.narcs = a.narcs + b.narcs;
  r.free_loops = a.free_loops + b.free_loops;
  r.crossings = a.crossings;
  for (const auto& c : b.crossings) {
    Crossing nc = c;
    for (auto& arc : nc.arcs) arc += a.narcs;
    r.crossings.push_back(nc);
  }

  auto head_of = [](const Orientation& o, const std::array<ArcEnd, 2>& e) {
    return o.incoming[e[0].crossing][e[0].port] ? e[0] : e[1];
  };
  ArcEnd ha = head_of(oa, ea[arc_a]);
  ArcEnd hb = head_of(ob, eb[arc_b]);
  hb.crossing += a.n();

  // rewire: arc_a now runs tail(a) -> head(b), arc_b runs tail(b) -> head(a)
  r.crossings[hb.crossing].arcs[hb.port] = arc_a;
  r.crossings[ha.crossing].arcs[ha.port] = arc_b + a.narcs;
  return r;
}

bool is_connected(const Diagram& d) {
  if (d.n() == 0) return d.free_loops <= 1;
  if (d.free_loops > 0) return false;
  auto ends = arc_endpoints(d);
  std::vector<bool> seen(d.n(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int found = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int p = 0; p < 4; ++p) {
      int a = d.crossings[c].arcs[p];
      for (const auto& e : {ends[a][0], ends[a][1]}) {
        if (!seen[e.crossing]) {
          seen[e.crossing] = true;
          ++found;
          q.push(e.crossing);
        }
      }
    }
  }
  return found == d.n();
}

bool is_alternating(const Diagram& d) {
  if (d.n() == 0) return true;
  auto ends = arc_endpoints(d);
  std::vector<bool> visited(d.narcs, false);
  for (int a0 = 0; a0 < d.narcs; ++a0) {
    if (visited[a0]) continue;
    Dart start{a0, 1};
    Dart cur = start;
    int prev = -1, first = -1;
    do {
      visited[cur.arc] = true;
      ArcEnd head = ends[cur.arc][cur.end];
      int over = d.crossings[head.crossing].port_is_over(head.port) ? 1 : 0;
      if (first < 0) first = over;
      else if (over == prev) return false;
      prev = over;
      int q = head.port ^ 2;
      int b = d.crossings[head.crossing].arcs[q];
      cur = Dart{b, other_end(ends, b, {head.crossing, q})};
    } while (!(cur == start));
    if (prev == first) return false;  // wrap-around must alternate as well
  }
  return true;
}

Faces faces(const Diagram& d) {
  auto ends = arc_endpoints(d);
  Faces f;
  f.dart_face.assign(d.narcs, {-1, -1});
  f.corner_face.assign(d.n(), {-1, -1, -1, -1});

  auto next_dart = [&](Dart cur) {
    ArcEnd head = ends[cur.arc][cur.end];
    int q = (head.port + 1) % 4;  // counterclockwise turn walks the left face
    int b = d.crossings[head.crossing].arcs[q];
    return Dart{b, other_end(ends, b, {head.crossing, q})};
  };

  int face_id = 0;
  for (int a = 0; a < d.narcs; ++a)
    for (int e = 0; e < 2; ++e) {
      if (f.dart_face[a][e] >= 0) continue;
      Dart start{a, e};
      Dart cur = start;
      do {
        f.dart_face[cur.arc][cur.end] = face_id;
        ArcEnd head = ends[cur.arc][cur.end];
        f.corner_face[head.crossing][head.port] = face_id;
        cur = next_dart(cur);
      } while (!(cur == start));
      ++face_id;
    }
  f.count = face_id;
  return f;
}

namespace {

// 2-coloring of faces with opposite colors across every arc
std::vector<int> face_colors(const Diagram& d, const Faces& f) {
  std::vector<std::vector<int>> adj(f.count);
  for (int a = 0; a < d.narcs; ++a) {
    int u = f.dart_face[a][0], v = f.dart_face[a][1];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(f.count, -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        q.push(v);
      } else if (color[v] == color[u]) {
        throw std::logic_error("checkerboard: face coloring conflict");
      }
    }
  }
  return color;
}

CheckerboardGraph checkerboard_impl(const Diagram& d, bool dual) {
  if (!is_connected(d)) throw std::invalid_argument("checkerboard: diagram not connected");
  if (!is_alternating(d)) throw std::invalid_argument("checkerboard: diagram not alternating");
  if (d.n() == 0) return {1, {}};

  auto ends = arc_endpoints(d);
  Faces f = faces(d);
  std::vector<int> color = face_colors(d, f);
  Orientation o = orient(d);

  // shade the face to the left of the under-strand exiting crossing 0
  int od = d.crossings[0].over_diag;
  int u1 = (od + 1) % 4, u2 = (od + 3) % 4;
  int under_out = o.incoming[0][u1] ? u2 : u1;
  int a = d.crossings[0].arcs[under_out];
  int away_end = other_end(ends, a, {0, under_out});
  int shaded = color[f.dart_face[a][away_end]];
  if (dual) shaded = 1 - shaded;

  std::vector<int> vid(f.count, -1);
  int nv = 0;
  for (int i = 0; i < f.count; ++i)
    if (color[i] == shaded) vid[i] = nv++;

  CheckerboardGraph g;
  g.n_vertices = nv;
  for (int c = 0; c < d.n(); ++c) {
    const auto& corners = f.corner_face[c];
    int cd = d.crossings[c].over_diag;
    std::array<int, 2> pair;
    int sign;
    if (color[corners[cd]] == shaded) {
      pair = {corners[cd], corners[(cd + 2) % 4]};
      sign = 1;
    } else {
      pair = {corners[(cd + 1) % 4], corners[(cd + 3) % 4]};
      sign = -1;
    }
    if (color[pair[0]] != shaded || color[pair[1]] != shaded)
      throw std::logic_error("checkerboard: corner coloring broken");
    g.edges.push_back({vid[pair[0]], vid[pair[1]], sign});
  }
  return g;
}

}  // namespace

CheckerboardGraph checkerboard(const Diagram& d) { return checkerboard_impl(d, false); }
CheckerboardGraph checkerboard_dual(const Diagram& d) { return checkerboard_impl(d, true); }

std::string to_pd_code(const Diagram& d) {
  Orientation o = orient(d);
  std::ostringstream out;
  for (int c = 0; c < d.n(); ++c) {
    int od = d.crossings[c].over_diag;
    int u1 = (od + 1) % 4, u2 = (od + 3) % 4;
    int anchor = o.incoming[c][u1] ? u1 : u2;
    if (c) out << " ";
    out << "X[";
    for (int k = 0; k < 4; ++k) {
      if (k) out << ",";
      out << d.crossings[c].arcs[(anchor + k) % 4] + 1;
    }
    out << "]";
  }
  return out.str();
}

Diagram from_pd_code(const std::string& line) {
  Diagram d;
  std::vector<int> labels;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("PD code at position " + std::to_string(i) + ": " + why);
  };
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',') {
      ++i;
      continue;
    }
    if (line[i] != 'X') fail("expected X[...]");
    ++i;
    if (i >= line.size() || line[i] != '[') fail("expected [");
    ++i;
    Crossing c;
    c.over_diag = 1;  // position 0 is the incoming under-strand
    for (int k = 0; k < 4; ++k) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j == i) fail("expected arc label");
      c.arcs[k] = std::stoi(line.substr(i, j - i));
      i = j;
      if (k < 3) {
        if (i >= line.size() || line[i] != ',') fail("expected ,");
        ++i;
      }
    }
    if (i >= line.size() || line[i] != ']') fail("expected ]");
    ++i;
    d.crossings.push_back(c);
    for (int a : c.arcs) labels.push_back(a);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (auto& c : d.crossings)
    for (auto& a : c.arcs)
      a = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), a) - labels.begin());
  d.narcs = static_cast<int>(labels.size());
  auto errors = validate(d);
  if (!errors.empty()) throw std::invalid_argument("PD code: " + errors.front());
  return d;
}

}  // namespace knotpoly
