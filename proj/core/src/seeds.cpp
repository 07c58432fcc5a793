#include "islide/seeds.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "islide/error.hpp"
#include "islide/graph_ops.hpp"
#include "islide/independence.hpp"
#include "islide/isomorphism.hpp"
#include "islide/reconfig.hpp"

namespace islide {

namespace {

constexpr std::array<std::string_view, 20> kIdNames = {
    "C_1kl", "C_22l_a", "C_22l_b", "C_23l_a", "C_23l_b", "C_244", "C_2k5",
    "C_2kl", "G_334",   "C_335",   "C_33l",   "C_344",   "C_34l", "C_355",
    "C_444", "C_jk5",   "C_jkl",   "HOUSE",   "LINE_ROOT", "PLANAR_DUAL"};

std::string w(int i) { return "w" + std::to_string(i); }
std::string v(int i) { return "v" + std::to_string(i); }
std::string u(int i) { return "u" + std::to_string(i); }
std::string d(int i) { return "D" + std::to_string(i); }

// Sort key for vertex names: hub and rim, then subdivision vertices, then
// path vertices, then apexes.
std::tuple<int, int, std::string> name_key(const std::string& name) {
  static const std::string order = "wuvz";
  auto pos = order.find(name.front());
  int rank = pos == std::string::npos ? 4 : static_cast<int>(pos);
  std::size_t i = 1;
  int number = -1;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
    number = (number < 0 ? 0 : number * 10) + (name[i] - '0');
    ++i;
  }
  return {rank, number, name.substr(i)};
}

// Graph over named vertices; edits are by name so derived constructions can
// subdivide and delete without tracking indices.
class NamedBuilder {
 public:
  void add(const std::string& name) {
    if (!adj_.emplace(name, std::set<std::string>{}).second) {
      throw Error(ErrorKind::InvalidArgument, "vertex " + name + " already present");
    }
  }
  void join(const std::string& a, const std::string& b) {
    require(a);
    require(b);
    if (a == b) throw Error(ErrorKind::InvalidArgument, "loop at " + a);
    adj_[a].insert(b);
    adj_[b].insert(a);
  }
  void unjoin(const std::string& a, const std::string& b) {
    require(a);
    require(b);
    if (!adj_[a].count(b)) throw Error(ErrorKind::InvalidArgument, "no edge " + a + "-" + b);
    adj_[a].erase(b);
    adj_[b].erase(a);
  }
  void subdivide(const std::string& a, const std::string& b, const std::string& mid) {
    unjoin(a, b);
    add(mid);
    join(a, mid);
    join(mid, b);
  }
  void remove(const std::string& name) {
    require(name);
    for (const auto& other : adj_[name]) adj_[other].erase(name);
    adj_.erase(name);
  }
  void complement() {
    for (auto& [a, nb] : adj_) {
      std::set<std::string> flipped;
      for (const auto& [b, unused] : adj_) {
        if (b != a && !nb.count(b)) flipped.insert(b);
      }
      nb = std::move(flipped);
    }
  }

  std::vector<std::string> sorted_names() const {
    std::vector<std::string> names;
    for (const auto& [name, unused] : adj_) names.push_back(name);
    std::sort(names.begin(), names.end(),
              [](const auto& a, const auto& b) { return name_key(a) < name_key(b); });
    return names;
  }

  Graph finish(const std::vector<std::string>& names) const {
    if (names.size() > static_cast<std::size_t>(kMaxVertices)) {
      throw Error(ErrorKind::Capacity, "seed would need " + std::to_string(names.size()) + " vertices");
    }
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(names.size()));
    for (const auto& [a, nb] : adj_) {
      for (const auto& b : nb) g.add_edge(index.at(a), index.at(b));
    }
    return g;
  }

 private:
  void require(const std::string& name) const {
    if (!adj_.count(name)) throw Error(ErrorKind::InvalidArgument, "no vertex " + name);
  }
  std::map<std::string, std::set<std::string>> adj_;
};

struct Plan {
  NamedBuilder b;
  std::vector<std::pair<std::string, std::array<std::string, 3>>> labels;
  bool alpha_equal = false;

  void label(const std::string& name, const std::string& x, const std::string& y, const std::string& z) {
    labels.push_back({name, {x, y, z}});
  }
  void drop_label(const std::string& name) {
    labels.erase(std::remove_if(labels.begin(), labels.end(),
                                [&](const auto& l) { return l.first == name; }),
                 labels.end());
  }
  void rim_subdivide(const std::string& a, const std::string& c, const std::string& mid) {
    b.subdivide(a, c, mid);
    b.join(mid, "w0");
  }
};

// Hub w0 joined to the rim cycle w1 .. w_rim.
void add_wheel(Plan& p, int rim) {
  p.b.add(w(0));
  for (int i = 1; i <= rim; ++i) p.b.add(w(i));
  for (int i = 1; i <= rim; ++i) {
    p.b.join(w(0), w(i));
    p.b.join(w(i), w(i % rim + 1));
  }
}

void add_path(Plan& p, int len) {
  for (int i = 1; i <= len; ++i) p.b.add(v(i));
  for (int i = 1; i < len; ++i) p.b.join(v(i), v(i + 1));
}

Plan plan_1kl(int k, int l) {
  Plan p;
  add_wheel(p, k + 1);
  add_path(p, l - 2);
  for (int i = 1; i <= l - 2; ++i) p.b.join(v(i), w(2));
  p.b.join(v(1), w(1));
  p.b.join(v(l - 2), w(3));
  p.label("X", w(0), w(1), w(2));
  p.label("Y", w(0), w(2), w(3));
  p.label("A1", w(0), w(k + 1), w(1));
  for (int i = 2; i <= k - 1; ++i) p.label("A" + std::to_string(i), w(0), w(k + 2 - i), w(k + 3 - i));
  p.label("B1", w(2), w(1), v(1));
  for (int i = 2; i <= l - 2; ++i) p.label("B" + std::to_string(i), w(2), v(i - 1), v(i));
  p.label("B" + std::to_string(l - 1), w(2), v(l - 2), w(3));
  p.alpha_equal = true;
  return p;
}

void label_w5_frame(Plan& p) {
  p.label("X", w(0), w(1), w(2));
  p.label("Y", w(0), w(3), w(4));
  p.label("A", w(0), w(2), w(3));
  p.label("B", w(0), w(1), w(4));
}

Plan plan_22l_a(int l) {
  Plan p;
  add_wheel(p, 4);
  add_path(p, l - 3);
  for (int i = 1; i <= l - 4; ++i) p.b.join(w(1), v(i));
  p.b.join(v(l - 5), v(l - 3));
  p.b.join(w(2), v(1));
  p.b.join(w(3), v(l - 3));
  p.b.join(w(4), v(l - 4));
  p.b.join(w(4), v(l - 3));
  p.b.add("z");
  for (const auto& t : {w(1), w(4), v(l - 4)}) p.b.join("z", t);
  label_w5_frame(p);
  p.label(d(1), w(1), w(2), v(1));
  for (int i = 2; i <= l - 4; ++i) p.label(d(i), w(1), v(i - 1), v(i));
  p.label(d(l - 3), v(l - 5), v(l - 4), v(l - 3));
  p.label(d(l - 2), w(4), v(l - 4), v(l - 3));
  p.label(d(l - 1), w(3), w(4), v(l - 3));
  return p;
}

Plan plan_22l_b() {
  Plan p;
  add_wheel(p, 4);
  add_path(p, 2);
  p.b.join(w(1), v(1));
  p.b.join(w(2), v(1));
  p.b.join(w(2), v(2));
  p.b.join(w(3), v(2));
  p.b.join(w(4), v(1));
  p.b.join(w(4), v(2));
  p.b.add("z1");
  p.b.add("z2");
  for (const auto& t : {v(1), w(1), w(4)}) p.b.join("z1", t);
  for (const auto& t : {v(2), w(2), w(3)}) p.b.join("z2", t);
  label_w5_frame(p);
  p.label(d(1), w(1), w(2), v(1));
  p.label(d(2), w(2), v(1), v(2));
  p.label(d(3), w(4), v(1), v(2));
  p.label(d(4), w(3), w(4), v(2));
  return p;
}

Plan plan_23l(int l) {
  Plan p = l >= 6 ? plan_22l_a(l) : plan_22l_b();
  p.b.remove(l >= 6 ? "z" : "z1");
  p.rim_subdivide(w(1), w(4), w(5));
  p.drop_label("B");
  p.alpha_equal = l >= 6;
  return p;
}

// Replaces rim edge w_first-w1 by a path through w_{first+1} .. w_{first+count}.
void extend_rim_before_w1(Plan& p, int first, int count) {
  for (int i = first + 1; i <= first + count; ++i) p.rim_subdivide(w(i - 1), w(1), w(i));
}

// Replaces rim edge w2-w3 by a path w2, u1 .. u_count, w3.
void extend_rim_w2_w3(Plan& p, int count, int already = 0) {
  for (int i = already + 1; i <= already + count; ++i) {
    p.rim_subdivide(i == 1 ? w(2) : u(i - 1), w(3), u(i));
  }
}

Plan plan_2k5(int k) {
  Plan p = plan_23l(5);
  extend_rim_before_w1(p, 5, k - 3);
  p.alpha_equal = false;
  return p;
}

Plan plan_2kl(int k, int l) {
  Plan p = plan_23l(l);
  extend_rim_before_w1(p, 5, k - 3);
  p.alpha_equal = true;
  return p;
}

Plan plan_244() {
  Plan p;
  add_wheel(p, 6);
  p.b.join(w(1), w(4));
  p.b.add("v");
  for (int i = 1; i <= 4; ++i) p.b.join("v", w(i));
  p.b.add("z");
  for (const auto& t : {std::string("v"), w(2), w(3)}) p.b.join("z", t);
  p.b.add("z'");
  for (const auto& t : {w(0), w(1), w(4)}) p.b.join("z'", t);
  p.label("X", w(0), w(1), w(2));
  p.label("Y", w(0), w(3), w(4));
  p.label("A", w(0), w(2), w(3));
  p.label("B1", w(0), w(1), w(6));
  p.label("B2", w(0), w(5), w(6));
  p.label("B3", w(0), w(4), w(5));
  p.label(d(1), w(1), w(2), "v");
  p.label(d(2), w(1), w(4), "v");
  p.label(d(3), w(3), w(4), "v");
  return p;
}

// The seed graph itself is given here; the complement seed is its complement.
Plan plan_334() {
  Plan p;
  for (int i = 0; i <= 8; ++i) p.b.add(v(i));
  const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5},
      {5, 2}, {3, 6}, {6, 4}, {1, 7}, {7, 4}, {0, 7}, {7, 8}};
  for (auto [a, c] : edges) p.b.join(v(a), v(c));
  p.b.complement();
  p.label("X", v(2), v(6), v(8));
  p.label("Y", v(3), v(5), v(8));
  p.label("A1", v(2), v(4), v(8));
  p.label("A2", v(4), v(5), v(8));
  p.label("B1", v(1), v(6), v(8));
  p.label("B2", v(1), v(3), v(8));
  p.label("C1", v(2), v(6), v(7));
  p.label("C2", v(5), v(6), v(7));
  p.label("C3", v(3), v(5), v(7));
  return p;
}

void label_w7_frame(Plan& p) {
  p.label("X", w(0), w(1), w(2));
  p.label("Y", w(0), w(4), w(5));
}

Plan plan_335() {
  Plan p;
  add_wheel(p, 6);
  add_path(p, 2);
  for (const auto& t : {w(1), w(2), w(5)}) p.b.join(v(1), t);
  for (const auto& t : {w(2), w(4), w(5)}) p.b.join(v(2), t);
  label_w7_frame(p);
  p.label(d(1), w(1), w(2), v(1));
  p.label(d(2), w(2), v(1), v(2));
  p.label(d(3), v(1), v(2), w(5));
  p.label(d(4), v(2), w(4), w(5));
  p.alpha_equal = true;
  return p;
}

Plan plan_33l(int l) {
  Plan p;
  add_wheel(p, 6);
  add_path(p, l - 3);
  for (int i = 1; i <= l - 4; ++i) p.b.join(w(1), v(i));
  p.b.join(w(2), v(1));
  p.b.join(w(4), v(l - 3));
  p.b.join(w(5), v(l - 4));
  p.b.join(w(5), v(l - 3));
  p.b.join(v(l - 5), v(l - 3));
  label_w7_frame(p);
  p.label(d(1), w(1), w(2), v(1));
  for (int i = 2; i <= l - 4; ++i) p.label(d(i), w(1), v(i - 1), v(i));
  p.label(d(l - 3), v(l - 5), v(l - 4), v(l - 3));
  p.label(d(l - 2), v(l - 4), v(l - 3), w(5));
  p.label(d(l - 1), v(l - 3), w(4), w(5));
  p.alpha_equal = true;
  return p;
}

Plan plan_344() {
  Plan p = plan_244();
  p.rim_subdivide(w(2), w(3), u(1));
  p.b.remove("z");
  p.drop_label("A");
  p.alpha_equal = false;
  return p;
}

Plan plan_34l(int l) {
  Plan p = plan_344();
  extend_rim_before_w1(p, 6, l - 4);
  p.drop_label("B1");
  return p;
}

Plan plan_355() {
  Plan p = plan_335();
  extend_rim_before_w1(p, 6, 2);
  return p;
}

Plan plan_444() {
  Plan p = plan_344();
  p.rim_subdivide(u(1), w(3), u(2));
  return p;
}

Plan plan_jk5(int j, int k) {
  Plan p = plan_335();
  extend_rim_before_w1(p, 6, k - 3);
  extend_rim_w2_w3(p, j - 3);
  p.alpha_equal = true;
  return p;
}

Plan plan_jkl(int j, int k, int l) {
  Plan p = plan_33l(l);
  extend_rim_before_w1(p, 6, k - 3);
  extend_rim_w2_w3(p, j - 3);
  p.alpha_equal = true;
  return p;
}

bool covers(ConstructionId id, const ThetaSpec& s) {
  const int j = s.j, k = s.k, l = s.l;
  switch (id) {
    case ConstructionId::C_1kl: return j == 1 && k >= 3;
    case ConstructionId::C_22l_a: return j == 2 && k == 2 && l >= 6;
    case ConstructionId::C_22l_b: return j == 2 && k == 2 && l == 5;
    case ConstructionId::C_23l_a: return j == 2 && k == 3 && l >= 6;
    case ConstructionId::C_23l_b: return j == 2 && k == 3 && l == 5;
    case ConstructionId::C_244: return j == 2 && k == 4 && l == 4;
    case ConstructionId::C_2k5: return j == 2 && (k == 4 || k == 5) && l == 5;
    case ConstructionId::C_2kl: return j == 2 && k >= 4 && l >= 6;
    case ConstructionId::G_334: return j == 3 && k == 3 && l == 4;
    case ConstructionId::C_335: return j == 3 && k == 3 && l == 5;
    case ConstructionId::C_33l: return j == 3 && k == 3 && l >= 6;
    case ConstructionId::C_344: return j == 3 && k == 4 && l == 4;
    case ConstructionId::C_34l: return j == 3 && k == 4 && l >= 5;
    case ConstructionId::C_355: return j == 3 && k == 5 && l == 5;
    case ConstructionId::C_444: return j == 4 && k == 4 && l == 4;
    case ConstructionId::C_jk5: return j >= 4 && k <= 5 && l == 5;
    case ConstructionId::C_jkl: return j >= 3 && l >= 6;
    case ConstructionId::LINE_ROOT: return j == 1 && k == 2 && l >= 3;
    case ConstructionId::HOUSE:
    case ConstructionId::PLANAR_DUAL: return false;
  }
  return false;
}

Plan make_plan(ConstructionId id, const ThetaSpec& s) {
  switch (id) {
    case ConstructionId::C_1kl: return plan_1kl(s.k, s.l);
    case ConstructionId::C_22l_a: return plan_22l_a(s.l);
    case ConstructionId::C_22l_b: return plan_22l_b();
    case ConstructionId::C_23l_a:
    case ConstructionId::C_23l_b: return plan_23l(s.l);
    case ConstructionId::C_244: return plan_244();
    case ConstructionId::C_2k5: return plan_2k5(s.k);
    case ConstructionId::C_2kl: return plan_2kl(s.k, s.l);
    case ConstructionId::G_334: return plan_334();
    case ConstructionId::C_335: return plan_335();
    case ConstructionId::C_33l: return plan_33l(s.l);
    case ConstructionId::C_344: return plan_344();
    case ConstructionId::C_34l: return plan_34l(s.l);
    case ConstructionId::C_355: return plan_355();
    case ConstructionId::C_444: return plan_444();
    case ConstructionId::C_jk5: return plan_jk5(s.j, s.k);
    case ConstructionId::C_jkl: return plan_jkl(s.j, s.k, s.l);
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "no complement-triangle plan for " + std::string(to_string(id)));
}

std::string set_string(VertexSet s) {
  std::string out = "{";
  for (int x : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(x);
  }
  return out + "}";
}

}  // namespace

std::string_view to_string(ConstructionId id) { return kIdNames[static_cast<std::size_t>(id)]; }

ConstructionId parse_construction_id(std::string_view name) {
  for (std::size_t i = 0; i < kIdNames.size(); ++i) {
    if (kIdNames[i] == name) return static_cast<ConstructionId>(i);
  }
  throw Error(ErrorKind::Parse, "unknown construction id " + std::string(name));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Realizable: return "Realizable";
    case Verdict::NotRealizable: return "NotRealizable";
    case Verdict::InvalidSpec: return "InvalidSpec";
  }
  return "?";
}

int ConstructionTrace::vertex(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

VertexSet ConstructionTrace::label(std::string_view name) const {
  for (const auto& [label_name, set] : expected_labels) {
    if (label_name == name) return set;
  }
  throw Error(ErrorKind::InvalidArgument, "no label " + std::string(name));
}

std::string exception_name(const ThetaSpec& s) {
  using T = std::tuple<int, int, int>;
  static const std::map<T, std::string> names = {
      {{1, 2, 2}, "diamond = theta(1,2,2)"}, {{2, 2, 2}, "K_{2,3} = theta(2,2,2)"},
      {{2, 2, 3}, "kappa = theta(2,2,3)"},   {{2, 2, 4}, "theta(2,2,4)"},
      {{2, 3, 3}, "theta(2,3,3)"},           {{2, 3, 4}, "theta(2,3,4)"},
      {{3, 3, 3}, "theta(3,3,3)"}};
  auto it = names.find({s.j, s.k, s.l});
  return it == names.end() ? std::string{} : it->second;
}

std::vector<ConstructionId> applicable_constructions(const ThetaSpec& spec) {
  std::vector<ConstructionId> out;
  if (!spec.valid() || !exception_name(spec).empty()) return out;
  // Enum order runs from specific to general within each family.
  for (std::size_t i = 0; i < kIdNames.size(); ++i) {
    auto id = static_cast<ConstructionId>(i);
    if (covers(id, spec)) out.push_back(id);
  }
  return out;
}

std::pair<Graph, ConstructionTrace> build_construction(ConstructionId id, const ThetaSpec& spec) {
  if (!spec.valid()) throw Error(ErrorKind::InvalidArgument, to_string(spec) + ": " + spec.invalid_reason());
  if (!covers(id, spec)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(to_string(id)) + " does not cover " + to_string(spec));
  }
  if (spec.vertex_count() > kMaxVertices) {
    throw Error(ErrorKind::Capacity, to_string(spec) + " has more than 64 vertices");
  }
  ConstructionTrace trace;
  trace.id = id;
  trace.params = {spec.j, spec.k, spec.l};
  trace.expected_order = spec.vertex_count();

  if (id == ConstructionId::LINE_ROOT) {
    Graph root = line_graph_root(theta(spec));
    for (int x = 0; x < root.order(); ++x) trace.names.push_back("r" + std::to_string(x));
    trace.expected_i = 2;
    trace.alpha_equal = true;
    return {root, trace};
  }

  Plan plan = make_plan(id, spec);
  trace.names = plan.b.sorted_names();
  Graph gbar = plan.b.finish(trace.names);
  for (const auto& [name, members] : plan.labels) {
    VertexSet s;
    for (const auto& m : members) {
      int x = trace.vertex(m);
      if (x < 0) throw Error(ErrorKind::InvalidArgument, "label " + name + " uses missing vertex " + m);
      s.insert(x);
    }
    trace.expected_labels.emplace_back(name, s);
  }
  trace.alpha_equal = plan.alpha_equal;
  return {gbar, trace};
}

SeedResult build_theta_seed_complement(const ThetaSpec& spec, const SeedOptions& opts) {
  SeedResult r;
  if (!spec.valid()) {
    r.verdict = Verdict::InvalidSpec;
    r.message = spec.invalid_reason();
    return r;
  }
  if (auto name = exception_name(spec); !name.empty()) {
    r.verdict = Verdict::NotRealizable;
    r.message = name;
    return r;
  }
  auto arms = applicable_constructions(spec);
  auto id = opts.force_general ? arms.back() : arms.front();
  auto [gbar, trace] = build_construction(id, spec);
  r.verdict = Verdict::Realizable;
  r.gbar = std::move(gbar);
  r.trace = std::move(trace);
  r.message = std::string(to_string(id));
  return r;
}

const VerificationClause* VerificationReport::failure() const {
  for (const auto& c : clauses) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerificationReport verify_seed(const ThetaSpec& spec, const Graph& gbar, const ConstructionTrace& trace) {
  VerificationReport rep;
  rep.spec = spec;
  rep.id = trace.id;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.clauses.push_back({std::move(name), ok, std::move(detail)});
  };

  const Graph g = complement(gbar);
  const auto report = independence_report(g);
  rep.i = report.i;
  rep.alpha = report.alpha;
  rep.i_set_count = static_cast<int>(report.i_sets.size());
  rep.alpha_set_count = static_cast<int>(report.alpha_sets.size());

  add("i-value", report.i == trace.expected_i,
      "i(G) = " + std::to_string(report.i) + ", expected " + std::to_string(trace.expected_i));
  add("i-graph-order", rep.i_set_count == trace.expected_order,
      std::to_string(rep.i_set_count) + " i-sets, expected " + std::to_string(trace.expected_order));

  const auto ig = build_slide_graph(g, report.i_sets);
  const Graph target = theta(spec);
  bool iso = ig.order() <= kMaxVertices && is_isomorphic(ig.skeleton(), target);
  add("i-graph-isomorphic", iso,
      iso ? "isomorphic to " + to_string(spec)
          : "i-graph has " + std::to_string(ig.order()) + " nodes and " + std::to_string(ig.size()) +
                " edges; " + to_string(spec) + " has " + std::to_string(target.order()) + " and " +
                std::to_string(target.size()));

  std::string missing;
  for (const auto& [name, s] : trace.expected_labels) {
    bool triangle = trace.expected_i != 3 || (s.size() == 3 && gbar.is_clique(s));
    if (!triangle || ig.index_of(s) < 0) missing += (missing.empty() ? "" : ", ") + name + "=" + set_string(s);
  }
  add("labels-present", missing.empty(), missing.empty() ? "all labelled sets are i-sets" : "missing " + missing);

  for (const char* pole : {"X", "Y"}) {
    auto it = std::find_if(trace.expected_labels.begin(), trace.expected_labels.end(),
                           [&](const auto& l) { return l.first == pole; });
    if (it == trace.expected_labels.end()) continue;
    int idx = ig.index_of(it->second);
    int deg = idx < 0 ? -1 : static_cast<int>(ig.adjacency[idx].size());
    add(std::string("pole-") + pole, deg == 3, std::string(pole) + " has degree " + std::to_string(deg));
  }

  if (trace.expected_i == 3) {
    bool same = triangle_isets_of_complement(gbar) == report.i_sets;
    add("complement-triangles", same,
        same ? "i-sets are the maximal-clique triangles of the complement seed"
             : "maximal-clique triangles differ from the i-sets");
  }

  if (trace.alpha_equal) {
    const auto ag = build_slide_graph(g, report.alpha_sets);
    bool ok = ag.order() <= kMaxVertices && is_isomorphic(ag.skeleton(), target);
    add("alpha-graph-isomorphic", ok,
        ok ? "alpha-graph isomorphic to " + to_string(spec)
           : "alpha-graph has " + std::to_string(ag.order()) + " nodes");
  }
  if (trace.id == ConstructionId::C_22l_a || trace.id == ConstructionId::C_22l_b) {
    const auto ag = build_slide_graph(g, report.alpha_sets);
    bool differs = ag.order() != ig.order() || ag.size() != ig.size() ||
                   ag.order() > kMaxVertices || !is_isomorphic(ag.skeleton(), ig.skeleton());
    add("alpha-graph-differs", differs,
        "alpha-graph has " + std::to_string(ag.order()) + " nodes, alpha = " + std::to_string(report.alpha));
  }
  if (trace.id == ConstructionId::C_23l_b) {
    add("alpha-value", report.alpha == 4, "alpha(G) = " + std::to_string(report.alpha));
  }

  rep.passed = rep.failure() == nullptr;
  return rep;
}

std::vector<VerificationReport> verify_theta_seed(const ThetaSpec& spec, const VerifyOptions& opts) {
  if (!spec.valid()) throw Error(ErrorKind::InvalidArgument, to_string(spec) + ": " + spec.invalid_reason());
  if (auto name = exception_name(spec); !name.empty()) {
    throw Error(ErrorKind::InvalidArgument, to_string(spec) + " is not realizable (" + name + ")");
  }
  auto arms = applicable_constructions(spec);
  std::vector<ConstructionId> chosen;
  if (opts.cross_check) {
    chosen = arms;
  } else {
    chosen.push_back(opts.force_general ? arms.back() : arms.front());
  }
  std::vector<VerificationReport> out;
  for (auto id : chosen) {
    auto [gbar, trace] = build_construction(id, spec);
    out.push_back(verify_seed(spec, gbar, trace));
  }
  return out;
}

std::vector<ThetaSpec> theta_specs_up_to(int max_vertices) {
  std::vector<ThetaSpec> out;
  for (int j = 1; j <= max_vertices; ++j) {
    for (int k = j; j + 2 * k - 1 <= max_vertices; ++k) {
      for (int l = k; j + k + l - 1 <= max_vertices; ++l) {
        ThetaSpec s{j, k, l};
        if (s.valid()) out.push_back(s);
      }
    }
  }
  return out;
}

namespace {

// Edge partition into cliques with every vertex in at most two of them.
class KrauszSearch {
 public:
  explicit KrauszSearch(const Graph& h) : h_(h), count_(h.order(), 0) {
    for (int x = 0; x < h.order(); ++x) uncovered_.push_back(h.row(x));
  }

  std::optional<std::vector<VertexSet>> solve() {
    if (recurse()) return parts_;
    return std::nullopt;
  }

 private:
  bool recurse() {
    int a = -1;
    for (int x = 0; x < h_.order(); ++x) {
      if (uncovered_[x] != 0) {
        a = x;
        break;
      }
    }
    if (a < 0) return true;
    const int b = std::countr_zero(uncovered_[a]);
    if (count_[a] >= 2 || count_[b] >= 2) return false;
    std::uint64_t eligible = 0;
    for (int x = 0; x < h_.order(); ++x) {
      if (count_[x] < 2) eligible |= std::uint64_t{1} << x;
    }
    const std::uint64_t cand = uncovered_[a] & uncovered_[b] & eligible;
    const std::uint64_t base = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    return grow(base, cand);
  }

  // Larger cliques are tried first: each candidate is included before it is skipped.
  bool grow(std::uint64_t clique, std::uint64_t cand) {
    if (cand == 0) return place(VertexSet{clique});
    const int c = std::countr_zero(cand);
    const std::uint64_t rest = cand & (cand - 1);
    if (grow(clique | (std::uint64_t{1} << c), rest & uncovered_[c])) return true;
    return grow(clique, rest);
  }

  bool place(VertexSet k) {
    for (int x : k) uncovered_[x] &= ~(k.bits() & ~(std::uint64_t{1} << x));
    for (int x : k) ++count_[x];
    parts_.push_back(k);
    bool ok = true;
    for (int x : k) {
      if (count_[x] == 2 && uncovered_[x] != 0) ok = false;
    }
    if (ok && recurse()) return true;
    parts_.pop_back();
    for (int x : k) --count_[x];
    for (int x : k) uncovered_[x] |= k.bits() & ~(std::uint64_t{1} << x);
    return false;
  }

  const Graph& h_;
  std::vector<std::uint64_t> uncovered_;
  std::vector<int> count_;
  std::vector<VertexSet> parts_;
};

}  // namespace

Graph line_graph_root(const Graph& h) {
  if (!h.is_connected()) throw Error(ErrorKind::NotConnected, "line-graph root needs a connected graph");
  if (h.order() == 1) return Graph(2, {{0, 1}});
  auto parts = KrauszSearch(h).solve();
  if (!parts) throw Error(ErrorKind::NotALineGraph, "no Krausz partition exists");

  // Each h-vertex becomes an edge between its two parts, or between its one
  // part and a fresh pendant vertex.
  const int p = static_cast<int>(parts->size());
  std::vector<std::vector<int>> where(h.order());
  for (int i = 0; i < p; ++i) {
    for (int x : (*parts)[i]) where[x].push_back(i);
  }
  int pendants = 0;
  for (const auto& w : where) pendants += w.size() == 1 ? 1 : 0;
  if (p + pendants > kMaxVertices) throw Error(ErrorKind::Capacity, "root would exceed 64 vertices");
  Graph root(p + pendants);
  int next = p;
  for (const auto& w : where) {
    if (w.size() == 2) {
      root.add_edge(w[0], w[1]);
    } else {
      root.add_edge(w[0], next++);
    }
  }
  if (!is_isomorphic(line_graph(root), h)) {
    throw Error(ErrorKind::Verification, "recovered root does not reproduce the input");
  }
  return root;
}

Graph seed_from_line_graph(const Graph& h) {
  if (!h.is_connected()) throw Error(ErrorKind::NotConnected, "input graph is not connected");
  if (h.is_clique(h.vertices())) return h;
  if (auto hit = find_induced(h, diamond_graph())) {
    std::string where;
    for (int x : *hit) where += (where.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorKind::ContainsDiamond, "induced diamond on vertices " + where);
  }
  return complement(line_graph_root(h));
}

Graph apply_deletion(const Graph& gbar, VertexSet t) {
  if (t.size() != 3 || !t.is_subset_of(gbar.vertices()) || !gbar.is_clique(t)) {
    throw Error(ErrorKind::NotATriangle, set_string(t) + " is not a triangle");
  }
  VertexSet common = gbar.vertices();
  for (int x : t) common &= gbar.neighbors(x);
  if (!common.empty()) {
    throw Error(ErrorKind::NotATriangle, set_string(t) + " is not a maximal clique");
  }
  if (gbar.order() >= kMaxVertices) throw Error(ErrorKind::Capacity, "no room for an apex vertex");
  Graph out = gbar;
  int apex = out.add_vertex();
  for (int x : t) out.add_edge(apex, x);
  return out;
}

PlanarSeed planar_seed(const Graph& g, const RotationSystem& rot) {
  for (int x = 0; x < g.order(); ++x) {
    if (g.degree(x) != 3) throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(x) + " has degree " + std::to_string(g.degree(x)));
  }
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "input graph is not connected");
  if (!is_bipartite(g)) throw Error(ErrorKind::NotBipartite, "input graph is not bipartite");
  auto dual = planar_dual_embedding(g, rot);
  PlanarSeed out{complement(dual.dual), dual, {}};
  auto& trace = out.trace;
  trace.id = ConstructionId::PLANAR_DUAL;
  trace.params = {g.order()};
  for (std::size_t f = 0; f < dual.faces.size(); ++f) trace.names.push_back("f" + std::to_string(f));
  for (int x = 0; x < g.order(); ++x) {
    VertexSet around;
    for (std::size_t f = 0; f < dual.faces.size(); ++f) {
      const auto& face = dual.faces[f];
      if (std::find(face.begin(), face.end(), x) != face.end()) around.insert(static_cast<int>(f));
    }
    trace.expected_labels.emplace_back("v" + std::to_string(x), around);
  }
  trace.expected_order = g.order();
  trace.expected_i = 3;
  trace.alpha_equal = true;
  return out;
}

Graph house_seed() {
  enum { a, b, c, d_, e };
  return Graph(5, {{a, b}, {b, c}, {c, d_}, {c, e}, {d_, e}});
}

ConstructionTrace house_seed_trace() {
  ConstructionTrace t;
  t.id = ConstructionId::HOUSE;
  t.params = {1, 2, 3};
  t.names = {"a", "b", "c", "d", "e"};
  t.expected_labels = {{"ac", VertexSet::of({0, 2})}, {"ad", VertexSet::of({0, 3})}, {"ae", VertexSet::of({0, 4})},
                       {"bd", VertexSet::of({1, 3})}, {"be", VertexSet::of({1, 4})}};
  t.expected_order = 5;
  t.expected_i = 2;
  t.alpha_equal = false;
  return t;
}

}  // namespace islide
