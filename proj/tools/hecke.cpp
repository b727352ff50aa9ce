// Command-line front end: coset types, structure constants, stability fits,
// orbit counts, canonical representatives and the invariant suites.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/cache.hpp"
#include "hecke/coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/orbit.hpp"
#include "hecke/structure_constants.hpp"
#include "hecke/supports.hpp"
#include "hecke/verify.hpp"

using namespace hecke;
using ordered_json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kBudget = 3 };

struct Table {
  std::string name;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  // Printed as "key  value" lines in table format.
  bool key_value = false;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const std::vector<Table>& tables, Format format, std::ostream& os) {
  if (format == Format::json) {
    ordered_json doc = ordered_json::object();
    for (const auto& t : tables) {
      if (t.key_value) {
        ordered_json obj = ordered_json::object();
        for (const auto& r : t.rows) obj[r[0]] = r[1];
        doc[t.name] = obj;
      } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : t.rows) {
          ordered_json obj = ordered_json::object();
          for (std::size_t i = 0; i < t.headers.size(); ++i) obj[t.headers[i]] = r[i];
          arr.push_back(obj);
        }
        doc[t.name] = arr;
      }
    }
    os << doc.dump(2) << '\n';
    return;
  }
  bool first = true;
  for (const auto& t : tables) {
    if (!first) os << '\n';
    first = false;
    if (format == Format::csv) {
      std::vector<std::string> head = t.key_value ? std::vector<std::string>{"key", "value"}
                                                  : t.headers;
      for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << csv_field(head[i]);
      os << '\n';
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
        os << '\n';
      }
      continue;
    }
    std::vector<std::size_t> width(t.key_value ? 2 : t.headers.size(), 0);
    if (!t.key_value)
      for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
    for (const auto& r : t.rows)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        s += r[i];
        if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << s << '\n';
    };
    if (!t.key_value) line(t.headers);
    for (const auto& r : t.rows) line(r);
  }
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

struct Common {
  std::string budget = std::to_string(Budget::kDefaultElements);
  int shards = 1;
  std::uint64_t seed = 20140601;
  std::string cache;
  std::string format = "table";
  bool force = false;

  RunConfig config() const {
    RunConfig c;
    try {
      std::size_t used = 0;
      c.budget_elements = std::stoull(budget, &used);
      if (used != budget.size()) throw std::invalid_argument(budget);
    } catch (const std::exception&) {
      throw ParseError("--budget must be a positive integer");
    }
    if (c.budget_elements < 1) throw ParseError("--budget must be at least 1");
    if (shards < 1) throw ParseError("--shards must be at least 1");
    c.shards = shards;
    c.seed = seed;
    c.cache_path = cache;
    c.format = parse_format(format);
    c.force = force;
    if (force) c.budget_elements = UINT64_MAX;
    return c;
  }
};

Method auto_method(int n) { return n <= 3 ? Method::conv : Method::factor; }

std::vector<Method> parse_methods(const std::string& text, int n) {
  if (text == "auto") return {auto_method(n)};
  if (text == "all") return {Method::conv, Method::factor, Method::mainlemma, Method::orbit};
  return {parse_method(text)};
}

// Cached value if present, otherwise computed and appended.
BigInt struct_constant(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
                       Method method, const RunConfig& cfg) {
  std::optional<ResultCache> cache;
  if (!cfg.cache_path.empty()) {
    cache.emplace(cfg.cache_path);
    if (auto hit = cache->find(mu, lambda, nu, n, method)) return hit->entry.b;
  }
  const auto start = std::chrono::steady_clock::now();
  StructEntry e = compute_entry(mu, lambda, nu, n, method, cfg.count_options());
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (cache) cache->append({e, kToolVersion, static_cast<std::int64_t>(ms)});
  return e.b;
}

int cmd_coset_type(const std::string& perm, int n, const RunConfig& cfg) {
  const Permutation x = Permutation::parse(perm);
  if (n < 1) throw ParseError("--n must be at least 1");
  if (x.largest_moved_point() > 2 * n)
    throw DomainError("permutation moves " + std::to_string(x.largest_moved_point()) +
                      ", beyond 2n = " + std::to_string(2 * n));
  const Partition full = coset_type(x, n);
  const Partition stable = full.stabilized();
  if (cfg.format == Format::table) {
    std::cout << full.to_string() << " / stable " << stable.to_string() << '\n';
    return kOk;
  }
  Table t{"coset_type", {"permutation", "n", "coset_type", "stable"}, {}, false};
  t.add({x.to_string(), std::to_string(n), full.to_compact(), stable.to_compact()});
  emit({t}, cfg.format, std::cout);
  return kOk;
}

int cmd_structconst(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
                    const std::string& method_text, const RunConfig& cfg) {
  if (n < 1) throw ParseError("--n must be at least 1");
  std::vector<Method> methods = parse_methods(method_text, n);
  const bool all = method_text == "all";
  const int m_v = mu.weight() + lambda.weight() + nu.weight();
  if (all && n < m_v) std::erase(methods, Method::orbit);

  Table t{"structconst", {"mu", "lambda", "nu", "n", "method", "b"}, {}, false};
  std::optional<BigInt> agreed;
  bool disagree = false;
  for (Method m : methods) {
    const BigInt b = struct_constant(mu, lambda, nu, n, m, cfg);
    if (agreed && *agreed != b) disagree = true;
    agreed = b;
    t.add({mu.to_compact(), lambda.to_compact(), nu.to_compact(), std::to_string(n),
           to_string(m), to_decimal(b)});
  }
  if (disagree) {
    emit({t}, cfg.format, std::cerr);
    std::cerr << "error: methods disagree\n";
    return kViolation;
  }
  emit({t}, cfg.format, std::cout);
  return kOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("--range must look like a..b");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &u1), b = std::stoi(hi, &u2);
    if (u1 != lo.size() || u2 != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ParseError("--range must look like a..b");
  }
}

int cmd_fit(const Partition& mu, const Partition& lambda, const Partition& nu,
            const std::string& range, const std::string& method_text, const RunConfig& cfg) {
  const auto [a, b] = parse_range(range);
  if (a < 2 || b < a) throw ParseError("--range needs 2 <= a <= b");
  if (a == b) throw ParseError("insufficient points: the range holds a single n");

  std::vector<FitPoint> points;
  for (int n = a; n <= b; ++n) {
    const Method m = method_text == "auto" ? auto_method(n) : parse_method(method_text);
    points.push_back({n, struct_constant(mu, lambda, nu, n, m, cfg)});
  }
  const int bound = mu.weight() + lambda.weight();
  const FitResult fit = fit_stability(points, nu.weight(), bound);

  Table pts{"points", {"n", "b", "g"}, {}, false};
  for (std::size_t i = 0; i < points.size(); ++i)
    pts.add({std::to_string(points[i].n), to_decimal(points[i].b),
             rational_str(fit.normalized[i].second)});
  Table sum{"fit", {}, {}, true};
  if (!fit.stable) {
    sum.add({"result", "no stable window"});
  } else {
    sum.add({"f(n)", fit.f.to_string()});
    sum.add({"window", std::to_string(fit.window_start) + ".." + std::to_string(fit.window_end)});
    sum.add({"degree", std::to_string(fit.f.degree()) + " (bound " + std::to_string(bound) +
                           (fit.within_bound ? ", within)" : ", exceeded)")});
    sum.add({"integral", fit.f.is_integral() ? "yes" : "no"});
    sum.add({"remark b/(2^(n-1) n!)", fit.remark.to_string()});
    sum.add({"remark identity", fit.remark_holds ? "holds" : "fails"});
    std::string res = fit.residuals.empty() ? "none" : "";
    for (const auto& [n, r] : fit.residuals)
      res += (res.empty() ? "" : ", ") + std::to_string(n) + ": " + rational_str(r);
    sum.add({"residuals before window", res});
  }
  emit({pts, sum}, cfg.format, std::cout);
  return kOk;
}

int cmd_orbits_pair(const std::string& xs, const std::string& ys, int n,
                    const std::string& action_text, const std::vector<int>& predict,
                    const RunConfig& cfg) {
  Action action;
  if (action_text == "revert")
    action = Action::revert;
  else if (action_text == "straight")
    action = Action::straight;
  else
    throw ParseError("--action must be revert or straight");
  const PermPair p{Permutation::parse(xs), Permutation::parse(ys)};
  Orbit orbit = orbit_of(p, n, action, cfg.budget());
  OrbitRecord& rec = orbit.record;

  Table sum{"orbit", {}, {}, true};
  sum.add({"pair", to_string(p)});
  sum.add({"action", to_string(action)});
  sum.add({"n", std::to_string(n)});
  sum.add({"size", to_decimal(rec.size_at[n])});
  sum.add({"representative", to_string(rec.representative)});
  sum.add({"magnitude", std::to_string(rec.magnitude)});
  sum.add({"product weight", std::to_string(rec.product_weight)});
  sum.add({"least rank", std::to_string(rec.min_rank)});
  Table pred{"predicted", {"n", "anchor", "k", "predicted", "bfs"}, {}, false};
  for (Anchor anchor : {Anchor::magnitude, Anchor::min_rank}) {
    const char* name = anchor == Anchor::magnitude ? "magnitude" : "least rank";
    std::string k;
    try {
      k = to_decimal(extract_k(rec, anchor, cfg.budget()));
    } catch (const ConsistencyError& e) {
      k = std::string("n/a (") + e.what() + ")";
    }
    sum.add({std::string("k at ") + name, k});
    for (int m : predict) {
      std::string value;
      try {
        value = to_decimal(predicted_size(rec, m, anchor));
      } catch (const std::exception& e) {
        value = "n/a";
      }
      if (!rec.size_at.contains(m)) rec.size_at[m] = orbit_size(rec.representative, m, action,
                                                                cfg.budget());
      pred.add({std::to_string(m), name, k, value, to_decimal(rec.size_at[m])});
    }
  }
  std::vector<Table> out{sum};
  if (!predict.empty()) out.push_back(pred);
  emit(out, cfg.format, std::cout);
  return kOk;
}

int cmd_orbits_count(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
                     const std::string& target_text, const RunConfig& cfg) {
  Target target;
  if (target_text == "full")
    target = Target::full;
  else if (target_text == "restricted")
    target = Target::restricted;
  else
    throw ParseError("--target must be full or restricted");
  const OrbitCount count = count_orbits(mu, lambda, nu, n, target, cfg.budget());
  Table t{"orbits", {"orbit", "representative", "size", "magnitude", "product_weight"}, {}, false};
  for (std::size_t i = 0; i < count.orbits.size(); ++i) {
    const auto& o = count.orbits[i];
    t.add({std::to_string(i + 1), to_string(o.representative), to_decimal(o.size),
           std::to_string(o.magnitude), std::to_string(o.product_weight)});
  }
  Table sum{"summary", {}, {}, true};
  sum.add({"orbits", std::to_string(count.count())});
  sum.add({"|V(n)|", to_decimal(count.total)});
  emit({t, sum}, cfg.format, std::cout);
  return kOk;
}

int cmd_rep(const Partition& mu, std::optional<int> n, const RunConfig& cfg) {
  const Permutation x = canonical_rep(mu);
  Table sum{"rep", {}, {}, true};
  sum.add({"mu", mu.to_string()});
  sum.add({"weight", std::to_string(mu.weight())});
  sum.add({"representative", x.to_string()});
  sum.add({"stable coset type", stable_coset_type(x).to_string()});
  sum.add({"k", to_decimal(centralizer_constant(mu))});
  if (n) sum.add({"|K^w(" + std::to_string(*n) + ")|", to_decimal(restricted_class_size(mu, *n))});
  emit({sum}, cfg.format, std::cout);
  return kOk;
}

int cmd_verify(const std::string& suite, int n_max, int cases, const RunConfig& cfg) {
  VerifyOptions o;
  o.n_max = n_max;
  o.seed = cfg.seed;
  o.random_cases = cases;
  o.count = cfg.count_options();
  const VerifyReport r = run_verify(suite, o);
  Table sum{"verify", {}, {}, true};
  sum.add({"suite", suite});
  sum.add({"n-max", std::to_string(n_max)});
  sum.add({"seed", std::to_string(cfg.seed)});
  sum.add({"checks", std::to_string(r.checks)});
  sum.add({"failures", std::to_string(r.failures.size() + r.dropped)});
  sum.add({"result", r.ok() ? "pass" : "fail"});
  std::vector<Table> out{sum};
  if (!r.ok()) {
    Table f{"failures", {"module", "invariant", "counterexample"}, {}, false};
    for (const auto& x : r.failures) f.add({x.module, x.invariant, x.counterexample});
    out.push_back(f);
  }
  emit(out, cfg.format, std::cout);
  return r.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure constants of the hyperoctahedral double-coset algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  Common common;
  app.add_option("--budget", common.budget, "Maximum elements enumerated per pass")
      ->capture_default_str();
  app.add_option("--shards", common.shards, "Rank-range shards per counting pass")
      ->capture_default_str();
  app.add_option("--seed", common.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--cache", common.cache, "JSON Lines result cache");
  app.add_option("--format", common.format, "table, json or csv")->capture_default_str();
  app.add_flag("--force", common.force, "Lift the budget and rank guards");

  std::string perm, mu_text = "-", lam_text = "-", nu_text = "-", method = "auto";
  std::string range, target = "full", x_text, y_text, action = "revert", suite = "all";
  int n = 0, n_max = 3, cases = 10000;
  std::vector<int> predict;

  auto* coset = app.add_subcommand("coset-type", "Coset type of a permutation of [2n]");
  coset->add_option("permutation", perm, "Cycle or one-line form")->required();
  coset->add_option("--n", n, "Number of couples")->required();

  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("--mu", mu_text, "Stable coset type, e.g. 3,2,1 or -")->required();
    sub->add_option("--lam", lam_text, "Stable coset type")->required();
    sub->add_option("--nu", nu_text, "Stable coset type")->required();
  };

  auto* sc = app.add_subcommand("structconst", "Structure constant b^nu_{mu lambda}(n)");
  add_triple(sc);
  sc->add_option("--n", n)->required();
  sc->add_option("--method", method, "auto, conv, factor, mainlemma, orbit or all")
      ->capture_default_str();

  auto* fit = app.add_subcommand("fit", "Fit the normalized constants to a polynomial in n");
  add_triple(fit);
  fit->add_option("--range", range, "a..b")->required();
  fit->add_option("--method", method)->capture_default_str();

  auto* orb = app.add_subcommand("orbits", "Reverted orbits of V(n), or the orbit of one pair");
  orb->add_option("--mu", mu_text);
  orb->add_option("--lam", lam_text);
  orb->add_option("--nu", nu_text);
  orb->add_option("--n", n)->required();
  orb->add_option("--target", target, "full or restricted")->capture_default_str();
  auto* ox = orb->add_option("--x", x_text, "First entry of a pair");
  auto* oy = orb->add_option("--y", y_text, "Second entry of a pair");
  ox->needs(oy);
  oy->needs(ox);
  orb->add_option("--action", action, "revert or straight")->capture_default_str();
  orb->add_option("--predict", predict, "Compare the orbit-size formula at these n");

  auto* rep = app.add_subcommand("rep", "Canonical representative of a stable coset type");
  rep->add_option("--mu", mu_text)->required();
  auto* rep_n = rep->add_option("--n", n, "Also report |K^w_mu(n)|");

  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  ver->add_option("--suite", suite, "supports, cosets, orbits, hecke or all")
      ->capture_default_str();
  ver->add_option("--n-max", n_max)->capture_default_str();
  ver->add_option("--cases", cases, "Randomized cases per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const RunConfig cfg = common.config();
    if (coset->parsed()) return cmd_coset_type(perm, n, cfg);
    const Partition mu = Partition::parse(mu_text);
    const Partition lam = Partition::parse(lam_text);
    const Partition nu = Partition::parse(nu_text);
    if (sc->parsed()) return cmd_structconst(mu, lam, nu, n, method, cfg);
    if (fit->parsed()) return cmd_fit(mu, lam, nu, range, method, cfg);
    if (orb->parsed()) {
      if (!x_text.empty()) return cmd_orbits_pair(x_text, y_text, n, action, predict, cfg);
      return cmd_orbits_count(mu, lam, nu, n, target, cfg);
    }
    if (rep->parsed())
      return cmd_rep(mu, rep_n->count() ? std::optional<int>(n) : std::nullopt, cfg);
    if (ver->parsed()) return cmd_verify(suite, n_max, cases, cfg);
  } catch (const ResourceError& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: invariant violated: " << e.what() << '\n';
    return kViolation;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
