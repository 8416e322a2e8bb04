#include "fewroots/commands.hpp"

#include "fewroots/errors.hpp"
#include "fewroots/lenstra.hpp"
#include "fewroots/newton.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fewroots {

namespace {

void check_precision(const RunConfig& config) {
  if (config.precision < kMinDigits)
    throw InvalidParameter("precision must be at least " + std::to_string(kMinDigits) + " digits");
}

FieldSpec local_field(const RunConfig& config) {
  Prime p(config.prime.value_or(2));
  auto d = config.d, e = config.e, f = config.f;
  auto divide = [](long a, long b, const char* what) {
    if (b < 1 || a % b != 0) throw InvalidParameter(std::string("cannot derive ") + what + " from d");
    return a / b;
  };
  if (d && e && !f) f = divide(*d, *e, "f");
  if (d && f && !e) e = divide(*d, *f, "e");
  if (!d && !e && !f) e = f = 1;
  if (!d && e && !f) f = 1;
  if (!d && f && !e) e = 1;
  if (d && !e && !f) {
    if (*d != 1) throw InvalidParameter("degree d > 1 needs --e or --f to fix the ramification data");
    e = f = 1;
  }
  if (!d) d = *e * *f;
  return FieldSpec::local(p, *d, *e, *f);
}

FieldSpec global_field(const RunConfig& config) {
  if (config.e || config.f) throw InvalidParameter("--e and --f apply to local fields only");
  return FieldSpec::global(config.d.value_or(1), config.delta.value_or(1));
}

Json system_summary(const SparseSystem& system) {
  std::vector<std::size_t> counts = system.term_counts();
  return {{"n", system.n()}, {"k", system.k()}, {"m", system.m()}, {"term_counts", counts}};
}

Json field_json(const FieldSpec& fs) {
  if (fs.kind() == FieldSpec::Kind::kGlobal)
    return {{"kind", "global"}, {"d", fs.d()}, {"delta", fs.delta()}};
  return {{"kind", "local"}, {"p", fs.p().value()}, {"d", fs.d()}, {"e", fs.e()}, {"f", fs.f()},
          {"q", to_string(fs.q())}};
}

std::vector<BoundReport> local_reports(const SparseSystem& system, const FieldSpec& fs, int digits) {
  auto m = static_cast<long>(system.m()), n = static_cast<long>(system.n()), k = static_cast<long>(system.k());
  return {local_bound_thm1(fs, m, n, k, digits), local_bound_cor2_1(system, fs, CpForm::kAuto, digits)};
}

std::vector<BoundReport> global_reports(const SparseSystem& system, const FieldSpec& fs, int digits) {
  auto m = static_cast<long>(system.m()), n = static_cast<long>(system.n()), k = static_cast<long>(system.k());
  return {global_bound_thm1(fs, m, n, k, digits), global_bound_cor3_1(system, fs.d(), fs.delta(), digits)};
}

bool single_term_binomials(const SparseSystem& system) {
  if (!system.is_square()) return false;
  for (auto c : system.term_counts())
    if (c != 2) return false;
  return true;
}

// x^{u} a + x^{v} b = 0  <=>  x^{u - v} = -b / a.
std::pair<IntegerMatrix, std::vector<Rational>> binomial_data(const SparseSystem& system) {
  IntegerMatrix a;
  std::vector<Rational> c;
  for (const auto& f : system.polynomials()) {
    auto it = f.terms().begin();
    const auto& [u, cu] = *it++;
    const auto& [v, cv] = *it;
    IntegerVector row;
    for (std::size_t i = 0; i < u.size(); ++i) row.emplace_back(u[i] - v[i]);
    a.push_back(std::move(row));
    c.push_back(-cv / cu);
  }
  return {a, c};
}

SparseSystem random_trinomial(std::mt19937_64& rng, Prime p) {
  auto pick = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<long> exps;
  while (exps.size() < 3) {
    long a = pick(0, 30);
    if (std::find(exps.begin(), exps.end(), a) == exps.end()) exps.push_back(a);
  }
  SparsePolynomial f(1);
  for (long a : exps) {
    long c = 0;
    while (c == 0) c = pick(-20, 20);
    Rational coeff = c;
    for (long i = pick(0, 3); i > 0; --i) coeff *= p.value();
    f.add_term({a}, coeff);
  }
  return SparseSystem(1, {f});
}

Json check_entry(const RootCount& count, const Integer& compared, const BoundReport& bound) {
  bool pass = compared <= bound.integer_bound;
  return {{"oracle", to_string(count.method)},
          {"region", count.region},
          {"count", to_string(compared)},
          {"bound", to_string(bound.formula_id)},
          {"integer_bound", to_string(bound.integer_bound)},
          {"pass", pass}};
}

Json verify_instance(const SparseSystem& system, const RunConfig& config, std::size_t& violations) {
  Prime p(config.prime.value_or(2));
  const int digits = config.precision;
  Json checks = Json::array();
  auto record = [&](Json entry) {
    if (!entry["pass"].get<bool>()) ++violations;
    checks.push_back(std::move(entry));
  };
  FieldSpec qp = FieldSpec::local(p, 1, 1, 1);
  auto local = local_reports(system, qp, digits);
  auto global = global_reports(system, FieldSpec::global(1, 1), digits);

  if (system.n() == 1 && system.k() == 1) {
    RootCount rc = count_univariate_padic(system[0], p);
    Integer with_mult = 0;
    for (const auto& [mult, count] : rc.factor_counts) with_mult += Integer(mult) * count;
    for (const auto& b : local) record(check_entry(rc, with_mult, b));
  }
  if (system.n() <= kSearchMaxVars) {
    RootCount rc = rational_root_search(system, config.height_cap);
    for (const auto& b : local) record(check_entry(rc, rc.count, b));
    for (const auto& b : global) record(check_entry(rc, rc.count, b));
  }
  if (single_term_binomials(system)) {
    auto [a, c] = binomial_data(system);
    BinomialCount bc = count_binomial_system(a, c, p);
    Json entry = {{"oracle", to_string(bc.roots.method)}, {"region", bc.roots.region},
                  {"count", to_string(bc.roots.count)}, {"bound", "smirnov"}};
    if (bc.valuation) {
      Integer smirnov = smirnov_bound(system, p, *bc.valuation);
      entry["valuation"] = to_json(*bc.valuation);
      entry["integer_bound"] = to_string(smirnov);
      entry["pass"] = smirnov == bc.roots.count;
    } else {
      entry["pass"] = false;
    }
    record(std::move(entry));
  }
  return {{"system", to_json(system)}, {"summary", system_summary(system)}, {"checks", std::move(checks)}};
}

}  // namespace

CommandResult cmd_bound(const RunConfig& config) {
  check_precision(config);
  SparseSystem system = parse_system(config.input);
  Json reports = Json::array();
  Json out = {{"command", "bound"}, {"system", system_summary(system)}};
  auto m = static_cast<long>(system.m()), n = static_cast<long>(system.n());
  if (config.global) {
    FieldSpec fs = global_field(config);
    out["field"] = field_json(fs);
    for (auto& r : global_reports(system, fs, config.precision)) {
      if (config.prime && *config.prime != 2)
        r.notes.push_back("--prime " + std::to_string(*config.prime) + " ignored: the global bounds embed into Q_2");
      reports.push_back(to_json(r));
    }
    if (config.affine) {
      auto ab = affine_bound(FormulaId::kThm1Global, fs, m, n, config.precision);
      reports.push_back(to_json(ab.exact_sum));
      reports.push_back(to_json(ab.relaxation));
    }
  } else {
    if (config.delta) throw InvalidParameter("--delta applies to global queries only");
    FieldSpec fs = local_field(config);
    out["field"] = field_json(fs);
    for (const auto& r : local_reports(system, fs, config.precision)) reports.push_back(to_json(r));
    if (config.affine) {
      auto ab = affine_bound(FormulaId::kThm1Local, fs, m, n, config.precision);
      reports.push_back(to_json(ab.exact_sum));
      reports.push_back(to_json(ab.relaxation));
    }
  }
  out["reports"] = std::move(reports);
  return {kExitOk, std::move(out)};
}

CommandResult cmd_facets(const RunConfig& config) {
  SparseSystem system = parse_system(config.input);
  Prime p(config.prime.value_or(2));
  for (std::size_t i = 0; i < system.k(); ++i)
    if (system[i].term_count() < 2)
      throw InvalidParameter("polynomial " + std::to_string(i + 1) +
                             " has a single term: its Newton polytope has dimension 0 and no roots exist");
  Polytope sigma = sigma_hat(system, p);
  Json facets = Json::array();
  for (const auto& lf : lower_facets(sigma))
    facets.push_back({{"normal", to_json(lf.normal.normal)}, {"face", to_json(lf.face)}});
  Json out = {{"command", "facets"},
              {"prime", p.value()},
              {"system", system_summary(system)},
              {"sigma_hat_dim", sigma.affine_dim()},
              {"facet_count", facets.size()},
              {"lower_facets", std::move(facets)}};
  if (system.is_square()) {
    Json cands = Json::array();
    Integer total = 0;
    for (const auto& r : candidate_valuations(system, p)) {
      Integer b = smirnov_bound(system, p, r);
      total += b;
      cands.push_back({{"valuation", to_json(r)}, {"smirnov_bound", to_string(b)}});
    }
    out["candidate_valuations"] = std::move(cands);
    out["smirnov_total"] = to_string(total);
  }
  return {kExitOk, std::move(out)};
}

CommandResult cmd_verify(const RunConfig& config) {
  check_precision(config);
  std::vector<SparseSystem> instances;
  if (!config.input.empty()) {
    instances.push_back(parse_system(config.input));
  } else if (config.random_instances > 0) {
    std::mt19937_64 rng(config.seed);
    Prime p(config.prime.value_or(2));
    for (long i = 0; i < config.random_instances; ++i) instances.push_back(random_trinomial(rng, p));
  } else {
    throw InvalidParameter("verify needs an input system or --random N");
  }
  std::size_t violations = 0;
  Json results = Json::array();
  for (const auto& s : instances) results.push_back(verify_instance(s, config, violations));
  Json out = {{"command", "verify"},
              {"prime", config.prime.value_or(2)},
              {"height_cap", config.height_cap},
              {"seed", config.seed},
              {"instances", std::move(results)},
              {"violations", violations},
              {"pass", violations == 0}};
  return {violations == 0 ? kExitOk : kExitVerifyFailed, std::move(out)};
}

CommandResult cmd_lenstra(const RunConfig& config) {
  if (config.command == Command::kLenstraDm) {
    LcmProfile prof = d_m(config.lenstra_m, config.lenstra_t);
    return {kExitOk, {{"command", "lenstra dm"}, {"m", prof.m}, {"t", prof.t}, {"value", to_string(prof.value)}}};
  }
  GammaVector g = gamma(config.lenstra_set, config.lenstra_t);
  return {kExitOk, {{"command", "lenstra gamma"}, {"A", g.A}, {"t", g.t}, {"coefficients", to_json(g.coefficients)}}};
}

CommandResult run(const RunConfig& config) {
  auto error = [](int code, const std::string& kind, const char* what) {
    return CommandResult{code, {{"error", kind}, {"message", what}}};
  };
  try {
    switch (config.command) {
      case Command::kBound: return cmd_bound(config);
      case Command::kFacets: return cmd_facets(config);
      case Command::kVerify: return cmd_verify(config);
      case Command::kLenstraDm:
      case Command::kLenstraGamma: return cmd_lenstra(config);
    }
    return error(kExitInternal, "internal", "unknown command");
  } catch (const ParseError& e) {
    return error(kExitParseError, "parse", e.what());
  } catch (const InvalidParameter& e) {
    return error(kExitInvalid, "invalid_parameter", e.what());
  } catch (const CapExceeded& e) {
    return error(kExitInvalid, "cap_exceeded", e.what());
  } catch (const InternalError& e) {
    return error(kExitInternal, "internal", e.what());
  }
}

namespace {

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_text(const Json& out, std::ostringstream& os) {
  if (out.contains("error")) {
    os << "error (" << str(out["error"]) << "): " << str(out["message"]) << "\n";
    return;
  }
  const std::string cmd = str(out["command"]);
  if (cmd == "bound") {
    os << "system: n=" << out["system"]["n"] << " k=" << out["system"]["k"] << " m=" << out["system"]["m"] << "\n";
    for (const auto& r : out["reports"]) {
      os << str(r["formula_id"]) << ": " << str(r["integer_bound"]) << "  (raw " << str(r["raw"]) << ")\n";
      for (const auto& n : r["notes"]) os << "  note: " << str(n) << "\n";
    }
  } else if (cmd == "facets") {
    os << "lower facets: " << out["facet_count"] << "\n";
    for (const auto& f : out["lower_facets"]) os << "  normal " << f["normal"].dump() << "\n";
    if (out.contains("candidate_valuations")) {
      for (const auto& c : out["candidate_valuations"])
        os << "  valuation " << c["valuation"].dump() << ": " << str(c["smirnov_bound"]) << "\n";
      os << "smirnov total: " << str(out["smirnov_total"]) << "\n";
    }
  } else if (cmd == "verify") {
    std::size_t i = 0;
    for (const auto& inst : out["instances"]) {
      ++i;
      for (const auto& c : inst["checks"])
        os << "#" << i << " " << str(c["oracle"]) << " " << str(c["count"]) << " vs " << str(c["bound"]) << " "
           << (c.contains("integer_bound") ? str(c["integer_bound"]) : "-") << ": "
           << (c["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    os << "violations: " << out["violations"] << "\n";
  } else if (cmd == "lenstra dm") {
    os << "d_" << out["m"] << "(" << out["t"] << ") = " << str(out["value"]) << "\n";
  } else {
    os << "gamma:";
    for (const auto& c : out["coefficients"]) os << " " << str(c);
    os << "\n";
  }
}

}  // namespace

std::string render(const CommandResult& result, OutputFormat format) {
  if (format == OutputFormat::kJson) return result.output.dump(2) + "\n";
  std::ostringstream os;
  render_text(result.output, os);
  return os.str();
}

}  // namespace fewroots
