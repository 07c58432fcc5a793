#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "islide/generators.hpp"
#include "islide/graph.hpp"
#include "islide/planar.hpp"

namespace islide {

enum class ConstructionId {
  C_1kl,
  C_22l_a,
  C_22l_b,
  C_23l_a,
  C_23l_b,
  C_244,
  C_2k5,
  C_2kl,
  G_334,
  C_335,
  C_33l,
  C_344,
  C_34l,
  C_355,
  C_444,
  C_jk5,
  C_jkl,
  HOUSE,
  LINE_ROOT,
  PLANAR_DUAL,
};

std::string_view to_string(ConstructionId id);
ConstructionId parse_construction_id(std::string_view name);

/// How a seed was built. `names[v]` names vertex v of the complement seed
/// (of the seed itself for HOUSE); labelled sets are the expected i-sets.
struct ConstructionTrace {
  ConstructionId id = ConstructionId::C_1kl;
  std::vector<int> params;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, VertexSet>> expected_labels;
  int expected_order = 0;
  int expected_i = 3;
  bool alpha_equal = false;

  /// Index of a named vertex; -1 when absent.
  int vertex(std::string_view name) const;
  /// Expected set by label; throws InvalidArgument when absent.
  VertexSet label(std::string_view name) const;
};

enum class Verdict { Realizable, NotRealizable, InvalidSpec };
std::string_view to_string(Verdict v);

struct SeedResult {
  Verdict verdict = Verdict::InvalidSpec;
  std::optional<Graph> gbar;  // complement seed, Realizable only
  std::optional<ConstructionTrace> trace;
  std::string message;        // exception name or invalid-spec reason
};

/// Theta graphs that are not i-graphs: (1,2,2), (2,2,2), (2,2,3), (2,2,4),
/// (2,3,3), (2,3,4), (3,3,3). Returns the exception's name, or empty.
std::string exception_name(const ThetaSpec& spec);

/// Every construction whose parameter range covers `spec`, most specific first.
std::vector<ConstructionId> applicable_constructions(const ThetaSpec& spec);

/// Complement seed from one specific construction. Throws InvalidArgument
/// when the construction does not cover `spec`.
std::pair<Graph, ConstructionTrace> build_construction(ConstructionId id, const ThetaSpec& spec);

struct SeedOptions {
  bool force_general = false;  // take the least specific applicable arm
};

SeedResult build_theta_seed_complement(const ThetaSpec& spec, const SeedOptions& opts = {});

struct VerificationClause {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  ThetaSpec spec;
  ConstructionId id = ConstructionId::C_1kl;
  bool passed = false;
  int i = 0;
  int alpha = 0;
  int i_set_count = 0;
  int alpha_set_count = 0;
  std::vector<VerificationClause> clauses;

  /// First failing clause, or nullptr.
  const VerificationClause* failure() const;
};

/// Checks a built seed against its trace: i-value, i-graph order, i-graph
/// isomorphic to the theta graph, labelled sets present, alpha-graph relation,
/// and the complement-triangle description of the i-sets.
VerificationReport verify_seed(const ThetaSpec& spec, const Graph& gbar, const ConstructionTrace& trace);

struct VerifyOptions {
  bool force_general = false;
  bool cross_check = false;  // verify every applicable arm, all must pass
};

/// Builds and verifies. Throws InvalidArgument for exceptions and invalid specs.
std::vector<VerificationReport> verify_theta_seed(const ThetaSpec& spec, const VerifyOptions& opts = {});

/// Valid theta specs with j + k + l - 1 <= max_vertices, in lexicographic order.
std::vector<ThetaSpec> theta_specs_up_to(int max_vertices);

/// Root graph F with line_graph(F) isomorphic to `h`, from a Krausz
/// partition. For K_3 the triangle-free root K_{1,3} is returned.
/// Throws NotConnected or NotALineGraph.
Graph line_graph_root(const Graph& h);

/// Seed G with i-graph isomorphic to `h`: h itself when complete, else the
/// complement of h's root. Throws NotConnected, ContainsDiamond or
/// NotALineGraph.
Graph seed_from_line_graph(const Graph& h);

/// Complement seed plus one vertex adjacent exactly to `t`, which removes t
/// from the complement's i-sets. Throws NotATriangle unless t is a triangle
/// of gbar that is a maximal clique.
Graph apply_deletion(const Graph& gbar, VertexSet t);

struct PlanarSeed {
  Graph seed;  // complement of the dual
  PlanarDual dual;
  ConstructionTrace trace;  // one label per primal vertex: its three faces
};

/// Seed for a cubic connected bipartite plane graph. Throws NotCubic,
/// NotConnected, NotBipartite, or the planar_dual errors.
PlanarSeed planar_seed(const Graph& g, const RotationSystem& rot);

/// The five-vertex seed of the house: path a-b-c plus triangle c, d, e.
Graph house_seed();
ConstructionTrace house_seed_trace();

}  // namespace islide
