#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kron/cache.hpp"
#include "kron/diamond.hpp"
#include "kron/engine.hpp"
#include "kron/error.hpp"
#include "kron/fanhex.hpp"
#include "kron/hrep.hpp"
#include "kron/lattice.hpp"
#include "kron/semiinv.hpp"

using namespace kron;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitDisagree = 4;

enum class Format { Json, Text, Hrep };

struct Globals {
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string format = "text";
  bool timings = false;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "hrep") return Format::Hrep;
    return Format::Text;
  }
  EnumOptions enum_options() const {
    EnumOptions o;
    o.jobs = jobs;
    return o;
  }
};

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw_parse("not an integer list: '" + text + "'");
    }
  }
  return out;
}

LambdaWeight parse_lambda_weight(const std::string& text) {
  IntVec v = parse_int_list(text);
  if (v.empty() || v.size() > 2) throw_parse("lambda weight must have one or two entries: '" + text + "'");
  return {v[0], v.size() > 1 ? v[1] : 0};
}

void require_format(const Globals& g, std::initializer_list<Format> allowed, const std::string& cmd) {
  for (Format f : allowed)
    if (g.fmt() == f) return;
  throw_parse("format '" + g.format + "' is not supported by '" + cmd + "'");
}

json labels_json(const Diamond& d) {
  json a = json::array();
  for (int v = 0; v < d.size(); ++v) a.push_back(d.display_label(v));
  return a;
}

int cmd_coeff(const Globals& g, const std::string& mu, const std::string& nu, const std::string& lam, int l,
              const std::string& method) {
  require_format(g, {Format::Json, Format::Text}, "coeff");
  KroneckerQuery q{Partition::parse(mu), Partition::parse(nu), Partition::parse(lam), l};
  MethodReport r = kronecker(q, parse_method(method), g.enum_options());
  if (g.fmt() == Format::Json) {
    std::cout << r.to_json(q, g.timings) << "\n";
  } else {
    std::cout << "g = " << r.value() << "\n";
    std::cout << "sigma = " << r.sigma.str() << " (l = " << r.l << ")\n";
    if (r.count_lambda) std::cout << "counts: lambda " << *r.count_lambda << ", lambda^omega " << *r.count_lambda_omega << "\n";
    if (r.polytope) std::cout << "polytope: " << *r.polytope << "\n";
    if (r.characters) std::cout << "characters: " << *r.characters << "\n";
    if (r.lr) std::cout << "lr: " << *r.lr << "\n";
    if (g.timings)
      for (const auto& [k, v] : r.timings_ms) std::cout << "time " << k << ": " << v << " ms\n";
    std::cout << (r.agree() ? "methods agree" : "METHODS DISAGREE") << "\n";
  }
  return r.agree() ? 0 : kExitDisagree;
}

int cmd_truncated(const Globals& g, const std::string& mu, const std::string& nu, int l) {
  require_format(g, {Format::Json, Format::Text}, "truncated");
  SchurExpansion e = truncated_product(Partition::parse(mu), Partition::parse(nu), l, g.enum_options());
  std::cout << (g.fmt() == Format::Json ? e.to_json() : e.to_text()) << "\n";
  return 0;
}

int cmd_cone(const Globals& g, int l) {
  ConeSystem c = cone_inequalities(l);
  if (g.fmt() == Format::Json) {
    std::cout << c.to_json() << "\n";
  } else {
    std::cout << c.to_hrep().emit();
  }
  return 0;
}

int cmd_enumerate(const Globals& g, int l, const std::string& sigma, const std::string& lam) {
  const Weight w = Weight::parse(sigma);
  if (l == 0) l = w.l;
  std::optional<LambdaWeight> lw;
  if (!lam.empty()) lw = parse_lambda_weight(lam);
  PolytopeSection s = diamond_section(l, w, lw);
  if (g.fmt() == Format::Hrep) {
    std::cout << s.to_hrep().emit();
    return 0;
  }
  LatticePointSet pts = enumerate(s, g.enum_options());
  const Diamond& d = build_diamond(l);
  if (g.fmt() == Format::Json) {
    json j;
    j["l"] = l;
    j["sigma"] = w.str();
    if (lw) j["lambda"] = {lw->a, lw->b};
    j["vertices"] = labels_json(d);
    j["count"] = pts.points.size();
    json ps = json::array(), lws = json::array();
    for (const auto& p : pts.points) {
      ps.push_back(p);
      LambdaWeight x = d.lambda_of(p);
      lws.push_back({x.a, x.b});
    }
    j["points"] = ps;
    j["lambda_weights"] = lws;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << emit_points(pts.points);
  }
  return 0;
}

int emit_report(const Globals& g, const VerifyReport& r) {
  if (g.fmt() == Format::Json) {
    std::cout << r.to_json() << "\n";
  } else {
    std::cout << r.relation << " l=" << r.l << " trials=" << r.trials << " checks=" << r.checks
              << " failures=" << r.failures.size() << "\n";
    for (const auto& f : r.failures)
      std::cout << "  " << f.check << " " << f.vertex << " trial " << f.trial << ": " << f.lhs << " != " << f.rhs << "\n";
  }
  return r.ok() ? 0 : kExitDisagree;
}

int cmd_verify_fan(const Globals& g) {
  UnimodularFan fan = diamond2_fan();
  FanCheck chk = check_unimodular_fan(fan);
  json failures = json::array();
  for (const auto& d : chk.diagnostics) failures.push_back(d);
  bool closed = false;
  if (chk.ok) {
    HilbertSeries h = fan_hilbert(fan);
    HilbertSeries c = diamond2_closed_form();
    closed = h.numerator == c.numerator && h.denominator == c.denominator;
    if (!closed) failures.push_back("fan series differs from the closed form");
  }
  json j;
  j["relation"] = "diamond2 fan";
  j["checks"] = fan.cones.size();
  j["failures"] = failures;
  if (g.fmt() == Format::Json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "fan unimodular and face-compatible: " << (chk.ok ? "yes" : "no") << "\n";
    std::cout << "closed form reproduced: " << (closed ? "yes" : "no") << "\n";
    for (const auto& f : failures) std::cout << "  " << f.get<std::string>() << "\n";
  }
  return failures.empty() ? 0 : kExitDisagree;
}

int cmd_verify_tu(const Globals& g, int l) {
  TuReport r = check_tu_blocks(l);
  if (g.fmt() == Format::Json) {
    json j = json::parse(r.to_json());
    j["checks"] = r.blocks.size();
    std::cout << j.dump() << "\n";
  } else {
    const Diamond& d = build_diamond(l);
    std::cout << "phi blocks for l=" << l << ": " << r.blocks.size() << (r.ok ? ", all pass" : ", FAILURE") << "\n";
    for (const auto& b : r.blocks) {
      std::cout << "  " << (b.ok ? "ok  " : "FAIL") << " cols";
      for (int c : b.cols) std::cout << " " << d.vertex(c).label();
      std::cout << "\n";
    }
  }
  return r.ok ? 0 : kExitDisagree;
}

int cmd_verify_cross(const Globals& g, int n_max, int l_max) {
  CrossReport r = cross_validate(n_max, l_max, g.enum_options());
  if (g.fmt() == Format::Json) {
    json j = json::parse(r.to_json());
    j["checks"] = r.checked;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "checked " << r.checked << " triples, " << (r.agree ? "all agree" : "DISAGREEMENT") << "\n";
    if (!r.agree) std::cout << r.first_discrepancy << "\n";
  }
  return r.agree ? 0 : kExitDisagree;
}

int cmd_hilbert(const Globals& g) {
  UnimodularFan fan = diamond2_fan();
  HilbertSeries h = fan_hilbert(fan);
  HilbertSeries c = diamond2_closed_form();
  const Diamond& d = build_diamond(2);
  std::vector<std::string> names;
  for (int v = 0; v < d.size(); ++v) names.push_back("x" + std::to_string(diamond2_alias_of_index(v)));
  const bool same = h.numerator == c.numerator && h.denominator == c.denominator;
  if (g.fmt() == Format::Json) {
    json j;
    j["quiver"] = "diamond2";
    j["variables"] = names;
    j["series"] = h.str(names);
    j["closed_form"] = c.str(names);
    j["identical"] = same;
    j["equivalent"] = h.equivalent(c);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << h.str(names) << "\n";
  }
  return same ? 0 : kExitDisagree;
}

int cmd_phi(const Globals& g, int l, const std::string& gtext) {
  const Diamond& d = build_diamond(l);
  const auto pts = hex_vertices(l);
  json points = json::array();
  for (const auto& [i, j] : pts) points.push_back({i, j});
  if (gtext.empty()) {
    IntMatrix m = phi_matrix(l);
    if (g.fmt() == Format::Json) {
      json j;
      j["l"] = l;
      j["hex_vertices"] = points;
      j["columns"] = labels_json(d);
      j["matrix"] = m;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << emit_points(m);
    }
    return 0;
  }
  IntVec gv = parse_int_list(gtext);
  if (static_cast<int>(gv.size()) != d.size()) throw_parse("g must have " + std::to_string(d.size()) + " entries");
  IntVec h = phi_apply(l, gv);
  const bool in_hex = hex_membership(l, h);
  IntVec w = restrict_to_flag(l, sigma_hat_weight(l, h));
  if (g.fmt() == Format::Json) {
    json j;
    j["l"] = l;
    j["g"] = gv;
    j["hex_vertices"] = points;
    j["h"] = h;
    j["in_hexagon_cone"] = in_hex;
    j["sigma"] = Weight::from_flat(l, w).str();
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t p = 0; p < pts.size(); ++p)
      if (h[p] != 0) std::cout << "(" << pts[p].first << "," << pts[p].second << ") " << h[p] << "\n";
    std::cout << "in hexagon cone: " << (in_hex ? "yes" : "no") << "\n";
    std::cout << "sigma: " << Weight::from_flat(l, w).str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker coefficients from diamond-quiver polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration and batch verification")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "hrep"}));
  app.add_flag("--timings", g.timings, "Include timings in coefficient reports");

  std::string mu, nu, lam, sigma, method = "polytope", gtext;
  int l = 0, trials = 50, n_max = 6, l_max = 3;
  std::uint64_t seed = 1;

  auto* coeff = app.add_subcommand("coeff", "Kronecker coefficient g^lambda_{mu,nu}");
  coeff->add_option("--mu", mu)->required();
  coeff->add_option("--nu", nu)->required();
  coeff->add_option("--lam", lam)->required();
  coeff->add_option("--l", l, "Arm length (default: max length of mu, nu)");
  coeff->add_option("--method", method)->check(CLI::IsMember({"polytope", "characters", "lr", "all"}));

  auto* trunc = app.add_subcommand("truncated", "2-truncated Kronecker product");
  trunc->add_option("--mu", mu)->required();
  trunc->add_option("--nu", nu)->required();
  trunc->add_option("--l", l);

  auto* cone = app.add_subcommand("cone", "Inequalities of the diamond g-vector cone");
  cone->add_option("--l", l)->required()->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("enumerate", "Lattice points of a weight section");
  en->add_option("--l", l);
  en->add_option("--sigma", sigma, "Weight 's(-1),...,s(-l);s(1),...,s(l)'")->required();
  en->add_option("--lam", lam, "Optional lambda-weight 'a,b'");

  auto* verify = app.add_subcommand("verify", "Randomized and exhaustive verification suites");
  verify->require_subcommand(1);
  auto* vex = verify->add_subcommand("exchange", "Exchange relations at every mutable vertex");
  auto* vgr = verify->add_subcommand("groups", "Torus, unipotent, transposition, SL and rescaling actions");
  for (auto* sc : {vex, vgr}) {
    sc->add_option("--l", l)->required()->check(CLI::PositiveNumber);
    sc->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    sc->add_option("--seed", seed);
  }
  auto* vfan = verify->add_subcommand("fan", "The l = 2 unimodular fan and its Hilbert series");
  auto* vtu = verify->add_subcommand("tu", "Ghouila-Houri check of the phi blocks");
  vtu->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  auto* vcross = verify->add_subcommand("cross", "Polytope, character and LR agreement");
  vcross->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  vcross->add_option("--l-max", l_max)->check(CLI::PositiveNumber);

  auto* hil = app.add_subcommand("hilbert", "Hilbert series");
  auto* hil2 = hil->add_subcommand("diamond2", "Series of the l = 2 diamond cone");
  hil->require_subcommand(1);

  auto* phi = app.add_subcommand("phi", "The comparison map onto the hexagon cone");
  phi->add_option("--l", l)->required()->check(CLI::PositiveNumber);
  phi->add_option("--g", gtext, "Comma-separated g-vector in canonical vertex order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  std::optional<PersistentCache> cache;
  int rc = 0;
  try {
    cache = PersistentCache::from_env();
    if (cache) cache->load();
    if (*coeff) rc = cmd_coeff(g, mu, nu, lam, l, method);
    else if (*trunc) rc = cmd_truncated(g, mu, nu, l);
    else if (*cone) rc = cmd_cone(g, l);
    else if (*en) rc = cmd_enumerate(g, l, sigma, lam);
    else if (*vex) rc = emit_report(g, verify_exchange(l, trials, seed, g.jobs));
    else if (*vgr) rc = emit_report(g, verify_group_actions(l, trials, seed, g.jobs));
    else if (*vfan) rc = cmd_verify_fan(g);
    else if (*vtu) rc = cmd_verify_tu(g, l);
    else if (*vcross) rc = cmd_verify_cross(g, n_max, l_max);
    else if (*hil2) rc = cmd_hilbert(g);
    else if (*phi) rc = cmd_phi(g, l, gtext);
    if (cache) cache->save();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
