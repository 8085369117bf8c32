#include "qclust/session.hpp"

#include <fstream>
#include <future>
#include <sstream>

#include "qclust/decorated_rep.hpp"
#include "qclust/dt_series.hpp"
#include "qclust/error.hpp"
#include "qclust/seed.hpp"

namespace qclust {

using nlohmann::json;

Route parse_route(const std::string& s) {
  if (s == "mutation") return Route::Mutation;
  if (s == "dt") return Route::Dt;
  if (s == "both") return Route::Both;
  throw Error(Errc::InvalidInput, "route must be mutation, dt or both, got '" + s + "'");
}

const char* route_name(Route r) {
  switch (r) {
    case Route::Mutation: return "mutation";
    case Route::Dt: return "dt";
    case Route::Both: return "both";
  }
  return "?";
}

namespace {

IntMatrix matrix_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw Error(Errc::InvalidInput, std::string(what) + " must be a nonempty array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(Errc::InvalidInput, std::string(what) + " rows must be arrays");
    rows.push_back(r.get<std::vector<long>>());
    if (rows.back().size() != rows.front().size())
      throw Error(Errc::DimensionMismatch, std::string(what) + " has rows of different lengths");
  }
  return IntMatrix::from_rows(rows);
}

IntVec vec_from(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, std::string(what) + " must be an array");
  return j.get<IntVec>();
}

IntVec uniform_or_vec(const json& j, std::size_t n, const char* what) {
  if (j.is_number_integer()) return IntVec(n, j.get<long>());
  IntVec v = vec_from(j, what);
  if (v.size() != n) throw Error(Errc::DimensionMismatch, std::string(what) + " must have one entry per mutable vertex");
  return v;
}

IntMatrix mutable_block(const IntMatrix& bt, int n) {
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = bt(i, j);
  return b;
}

IntVec head(const IntVec& v, std::size_t n) { return IntVec(v.begin(), v.begin() + static_cast<long>(n)); }

std::string ks_string(const std::vector<int>& ks) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
  os << ')';
  return os.str();
}

void render_matrix(std::ostream& os, const char* name, const IntMatrix& m) {
  os << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) os << "  " << to_string(m.row(i)) << "\n";
}

std::string lefschetz_text(const LefschetzDecomposition& d) {
  std::ostringstream os;
  os << "N=" << d.center << " {";
  bool first = true;
  for (const auto& [k, c] : d.mult) {
    os << (first ? "" : ", ") << k << ":" << c.get_str();
    first = false;
  }
  os << "}";
  return os.str();
}

bool acyclic_at_either_end(const SessionSpec& s) {
  if (is_acyclic(s.qp.quiver)) return true;
  QPData end = s.qp;
  for (int k : s.ks) end = mutate_qp(end, k);
  return is_acyclic(end.quiver);
}

DtRouteResult run_dt(const SessionSpec& s) {
  const DecRep h = h1_gamma_sum(s.qp, s.ks, head(s.lam, s.n));
  const IntVec* fixed = s.options.cone_bound ? &*s.options.cone_bound : nullptr;
  return dt_cluster_monomial(s.lambda, s.btilde, s.ks, s.lam, h.dims, fixed);
}

}  // namespace

SessionSpec parse_session(const json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "session must be a JSON object");
  for (const char* key : {"lambda", "btilde", "n"})
    if (!j.contains(key)) throw Error(Errc::InvalidInput, std::string("session is missing '") + key + "'");
  SessionSpec s;
  s.lambda = matrix_from(j.at("lambda"), "lambda");
  s.btilde = matrix_from(j.at("btilde"), "btilde");
  s.n = j.at("n").get<int>();
  const std::size_t m = s.lambda.rows();
  if (s.lambda.cols() != m) throw Error(Errc::DimensionMismatch, "lambda must be square");
  if (s.btilde.rows() != m) throw Error(Errc::DimensionMismatch, "btilde must have as many rows as lambda");
  if (s.n < 1 || static_cast<std::size_t>(s.n) != s.btilde.cols() || static_cast<std::size_t>(s.n) > m)
    throw Error(Errc::DimensionMismatch, "n must equal the number of btilde columns and be at most m");
  check_compatible(s.lambda, s.btilde);

  if (j.contains("options")) {
    const json& o = j.at("options");
    if (o.contains("degree_cap")) s.options.degree_cap = o.at("degree_cap").get<int>();
    if (o.contains("cone_bound")) s.options.cone_bound = uniform_or_vec(o.at("cone_bound"), s.n, "cone_bound");
    if (o.contains("primes")) s.options.primes = o.at("primes").get<std::vector<int>>();
    if (o.contains("route")) s.options.route = parse_route(o.at("route").get<std::string>());
    if (o.contains("budget")) s.options.budget = o.at("budget").get<double>();
    if (o.contains("jobs")) s.options.jobs = o.at("jobs").get<int>();
  }

  const IntMatrix b = mutable_block(s.btilde, s.n);
  Quiver q;
  if (j.contains("quiver")) {
    const json& jq = j.at("quiver");
    const int verts = jq.at("vertices").get<int>();
    if (verts != s.n) throw Error(Errc::DimensionMismatch, "quiver must have n vertices (the mutable part)");
    q = Quiver(verts);
    for (const auto& a : jq.at("arrows")) {
      const auto t = a.get<std::vector<int>>();
      if (t.size() != 3) throw Error(Errc::InvalidInput, "arrows are [id, src, tgt] triples");
      if (t[0] < 1) throw Error(Errc::InvalidInput, "arrow ids are positive");
      q.add_arrow(t[1], t[2], t[0]);
    }
    if (!(exchange_matrix(q, s.n) == b))
      throw Error(Errc::InconsistentLattice, "quiver does not realize the mutable part of btilde");
    s.explicit_qp = true;
  } else {
    q = from_btilde(b);
  }
  Potential w(s.options.degree_cap);
  if (j.contains("potential")) {
    for (const auto& t : j.at("potential")) {
      if (!t.is_array() || t.size() != 3) throw Error(Errc::InvalidInput, "potential terms are [num, den, [arrow ids]]");
      const long num = t.at(0).get<long>(), den = t.at(1).get<long>();
      if (den == 0) throw Error(Errc::InvalidInput, "potential coefficient with zero denominator");
      mpq_class c(num, den);
      c.canonicalize();
      w.add(t.at(2).get<Word>(), c);
    }
    s.explicit_qp = true;
  }
  s.qp = make_qp(q, w);

  if (j.contains("ks")) s.ks = j.at("ks").get<std::vector<int>>();
  for (int k : s.ks)
    if (k < 1 || k > s.n) throw Error(Errc::InvalidInput, "ks entries must lie in 1..n");
  s.lam = j.contains("lam") ? vec_from(j.at("lam"), "lam") : IntVec(m, 0);
  if (s.lam.size() != m) throw Error(Errc::DimensionMismatch, "lam must have m entries");
  return s;
}

SessionSpec load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open session file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_session(j);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed session: ") + e.what());
  }
}

CommandResult cmd_mutate(const SessionSpec& s) {
  const QuantumSeed seed = mutate_along(initial_seed(s.lambda, s.btilde), s.ks);
  CommandResult r;
  std::ostringstream os;
  os << "ks " << ks_string(s.ks) << "\n";
  render_matrix(os, "lambda", seed.lambda);
  render_matrix(os, "btilde", seed.btilde);
  json vars = json::array();
  for (std::size_t i = 0; i < seed.vars.size(); ++i) {
    const std::string v = seed.vars[i].to_string();
    os << "x" << i + 1 << " = " << v << "\n";
    vars.push_back(v);
  }
  r.text = os.str();
  r.report = {{"command", "mutate"}, {"ks", s.ks}, {"lambda", seed.lambda.to_string()},
              {"btilde", seed.btilde.to_string()}, {"vars", vars}, {"ok", true}};
  return r;
}

CommandResult cmd_expand(const SessionSpec& s) {
  const Route route = s.options.route;
  const bool parallel = s.options.jobs > 1 && route == Route::Both;
  const auto policy = parallel ? std::launch::async : std::launch::deferred;
  std::future<ClusterMonomialResult> seed_f;
  std::future<DtRouteResult> dt_f;
  if (route != Route::Dt)
    seed_f = std::async(policy, [&] { return cluster_monomial(initial_seed(s.lambda, s.btilde), s.ks, s.lam); });
  if (route != Route::Mutation) dt_f = std::async(policy, [&] { return run_dt(s); });

  std::optional<ClusterMonomialResult> mres;
  std::optional<DtRouteResult> dres;
  if (seed_f.valid()) mres = seed_f.get();
  if (dt_f.valid()) dres = dt_f.get();

  CommandResult r;
  json rep = {{"command", "expand"}, {"route", route_name(route)}, {"ks", s.ks}, {"lam", s.lam}};
  std::ostringstream os;
  const TorusElement& elem = mres ? mres->element : dres->element;
  const IntVec& g = mres ? mres->g_vector : dres->g_vector;
  os << "route " << route_name(route) << "\n";
  os << "element " << elem.to_string() << "\n";
  os << "g-vector " << to_string(g) << "\n";
  rep["element"] = elem.to_string();
  rep["g_vector"] = g;
  if (mres) {
    os << "F-coefficients\n";
    json f = json::array();
    for (const auto& [gamma, c] : mres->f_coefficients) {
      os << "  " << to_string(head(gamma, s.n)) << " " << c.to_string() << "\n";
      f.push_back({{"gamma", head(gamma, s.n)}, {"coefficient", c.to_string()}});
    }
    rep["f_coefficients"] = f;
  }
  if (dres) {
    os << "cone bound " << to_string(dres->bound) << "\n";
    rep["cone_bound"] = dres->bound;
  }

  const bool positive = is_positive(elem);
  os << "positive " << (positive ? "yes" : "no") << "\n";
  rep["positive"] = positive;
  r.ok = positive;

  bool lefschetz_ok = true;
  json lef = json::array();
  os << "Lefschetz\n";
  for (const auto& [e, c] : elem.terms()) {
    const LefschetzResult lr = lefschetz_decompose(c);
    os << "  " << to_string(e) << " ";
    if (lr.value) {
      os << lefschetz_text(*lr.value) << "\n";
      lef.push_back({{"exponent", e}, {"decomposition", lefschetz_text(*lr.value)}});
    } else {
      lefschetz_ok = false;
      os << "FAIL " << lefschetz_failure_name(lr.failure) << "\n";
      lef.push_back({{"exponent", e}, {"failure", lefschetz_failure_name(lr.failure)}});
    }
  }
  rep["lefschetz"] = lef;
  rep["lefschetz_ok"] = lefschetz_ok;
  r.ok = r.ok && lefschetz_ok;

  if (mres && dres) {
    const bool agree = mres->element == dres->element && mres->g_vector == dres->g_vector;
    if (!agree) os << "dt element " << dres->element.to_string() << "\n";
    os << (agree ? "AGREE" : "DISAGREE") << "\n";
    rep["agree"] = agree;
    r.ok = r.ok && agree;
  }
  rep["ok"] = r.ok;
  r.text = os.str();
  r.report = rep;
  return r;
}

CommandResult cmd_count(const SessionSpec& s) {
  const ClusterMonomialResult mres = cluster_monomial(initial_seed(s.lambda, s.btilde), s.ks, s.lam);
  const DecRep h = h1_gamma_sum(s.qp, s.ks, head(s.lam, s.n));
  ClusterMonomialResult trimmed = mres;
  trimmed.f_coefficients.clear();
  for (const auto& [gamma, c] : mres.f_coefficients) trimmed.f_coefficients[head(gamma, s.n)] = c;
  const bool hard = acyclic_at_either_end(s);
  const CrosscheckReport rep = coefficient_crosscheck(trimmed, h, hard, s.options.primes, s.options.budget, s.options.jobs);

  CommandResult r;
  std::ostringstream os;
  os << "ks " << ks_string(s.ks) << " lam " << to_string(s.lam) << "\n";
  os << "module dims " << to_string(h.dims) << "\n";
  os << "mode " << (hard ? "hard" : "report") << "\n";
  os << rep.to_string();
  r.ok = rep.passed();
  os << (r.ok ? "PASS" : "FAIL") << "\n";
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json counts = json::object();
    for (const auto& [q, c] : row.table.counts) counts[std::to_string(q)] = c.get_str();
    json jr = {{"gamma", row.gamma},       {"quotient", row.table.gamma}, {"coefficient", row.coefficient.to_string()},
               {"counts", counts},         {"counted", row.counted},      {"match", row.match},
               {"euler_match", row.euler_match}, {"pure", row.pure}};
    if (row.table.interpolated) jr["serre"] = row.table.interpolated->to_string("T");
    if (row.match) jr["shift"] = row.shift;
    if (!row.skipped.empty()) jr["note"] = row.skipped;
    rows.push_back(jr);
  }
  r.report = {{"command", "count"}, {"ks", s.ks},   {"lam", s.lam},  {"dims", h.dims},
              {"mode", hard ? "hard" : "report"}, {"rows", rows}, {"ok", r.ok}};
  r.text = os.str();
  return r;
}

CommandResult cmd_identity_check(const SessionSpec* s, int depth) {
  CommandResult r;
  std::ostringstream os;
  json checks = json::array();
  auto record = [&](const std::string& name, bool pass) {
    os << (pass ? "PASS " : "FAIL ") << name << "\n";
    checks.push_back({{"name", name}, {"pass", pass}});
    r.ok = r.ok && pass;
  };

  const FormPtr a2 = make_form(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
  const IntMatrix id2 = IntMatrix::identity(2);
  const IntVec box{depth, depth};
  const ConeSeries e1 = pochhammer(a2, id2, {1, 0}, 1, box);
  const ConeSeries e2 = pochhammer(a2, id2, {0, 1}, 1, box);
  const ConeSeries e12 = pochhammer(a2, id2, {1, 1}, 1, box);
  record("pentagon E(X[0,1]) E(X[1,0]) = E(X[1,0]) E(X[1,1]) E(X[0,1]) to depth " + std::to_string(depth),
         factorization_check(e2 * e1, {e1, e12, e2}));
  record("inverse E(X[1,0]) E(X[1,0])^-1 = 1", e1 * pochhammer(a2, id2, {1, 0}, -1, box) ==
                                                   ConeSeries::one(a2, id2, box));
  bool series = true;
  for (int k = 0; k <= depth && k <= 12; ++k) {
    const RatLaurent want = RatLaurent::inverse_pochhammer(k).shifted(k * k);
    series = series && e1.coeff({k, 0}) == want;
  }
  record("Pochhammer coefficients T^(k^2/2)/((1-T)...(1-T^k))", series);

  if (s) {
    const ClusterMonomialResult mres = cluster_monomial(initial_seed(s->lambda, s->btilde), s->ks, s->lam);
    const DecRep h = h1_gamma_sum(s->qp, s->ks, head(s->lam, s->n));
    const FormPtr form = make_form(s->lambda);
    const ConeSeries a = dt_product(s->btilde, form, s->ks, h.dims + IntVec(s->n, 1));
    IntVec frame = head(mres.g_vector, s->n);
    for (auto& x : frame) x = -x;
    const ConeSeries fe = framed_extract(a, frame);
    bool ok = true;
    std::map<IntVec, QLaurent> got, want;
    for (const auto& [gamma, c] : fe.coeffs) {
      if (c.is_zero()) continue;
      if (!leq(gamma, h.dims) || !c.is_laurent()) {
        ok = false;
        break;
      }
      got[gamma] = c.to_laurent();
    }
    for (const auto& [gamma, c] : mres.f_coefficients) want[head(gamma, s->n)] = c;
    record("framed extraction with framing -g reproduces the F-polynomial for ks " + ks_string(s->ks),
           ok && got == want);
  }
  r.text = os.str();
  r.report = {{"command", "identity-check"}, {"depth", depth}, {"checks", checks}, {"ok", r.ok}};
  return r;
}

}  // namespace qclust
