#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qclust/grassmannian.hpp"
#include "qclust/int_matrix.hpp"
#include "qclust/qp_mutation.hpp"

namespace qclust {

enum class Route { Mutation, Dt, Both };

Route parse_route(const std::string& s);
const char* route_name(Route r);

struct SessionOptions {
  int degree_cap = 12;
  std::optional<IntVec> cone_bound;  // fixed cone bound; unset means dims + 2, raised on demand
  std::vector<int> primes = kDefaultPrimes;
  Route route = Route::Both;
  double budget = kDefaultCountBudget;
  int jobs = 1;
};

struct SessionSpec {
  IntMatrix lambda;
  IntMatrix btilde;
  int n = 0;
  QPData qp;  // from_btilde of the mutable part with W = 0 when the session has no quiver
  bool explicit_qp = false;
  std::vector<int> ks;
  IntVec lam;
  SessionOptions options;
};

/// Validates dimensions, compatibility, ks range and that the quiver realizes the mutable part of B̃.
SessionSpec parse_session(const nlohmann::json& j);
SessionSpec load_session(const std::string& path);

struct CommandResult {
  std::string text;       // stdout
  nlohmann::json report;  // --json
  bool ok = true;
};

CommandResult cmd_mutate(const SessionSpec& s);
CommandResult cmd_expand(const SessionSpec& s);
CommandResult cmd_count(const SessionSpec& s);

/// Pentagon, Pochhammer series and inverse checks at the given cone depth; with a
/// session, also the framed-extraction identity for its cluster monomial.
CommandResult cmd_identity_check(const SessionSpec* s, int depth);

}  // namespace qclust
