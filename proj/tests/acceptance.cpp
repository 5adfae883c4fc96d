// One PASS/FAIL line per acceptance criterion, with wall time against its
// budget. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "diamond2_laurent.hpp"
#include "kron/cluster.hpp"
#include "kron/diamond.hpp"
#include "kron/engine.hpp"
#include "kron/error.hpp"
#include "kron/fanhex.hpp"
#include "kron/lattice.hpp"
#include "kron/semiinv.hpp"
#include "kron/symfunc.hpp"

using namespace kron;

namespace {

unsigned hw_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

// Accumulates failed sub-checks for one criterion.
struct Ledger {
  std::vector<std::string> failed;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failed.size() < 5) failed.push_back(what);
    if (!ok && failed.size() == 5) failed.push_back("...");
  }
  bool ok() const { return failed.empty(); }
};

IntVec alias_vec(std::initializer_list<std::pair<int, int>> terms) {
  IntVec g(6, 0);
  for (auto [a, c] : terms) g[static_cast<std::size_t>(diamond2_index_of_alias(a))] += c;
  return g;
}

IntVec unit(int n, int i) {
  IntVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

void c1(Ledger& lg) {
  EnumOptions opt;
  opt.jobs = hw_jobs();
  auto pts = enumerate(diamond_section(2, Weight::parse("-1,-1;1,1")), opt).points;
  const Diamond& d = build_diamond(2);
  // Reference order with the expected lambda-weights.
  const std::vector<std::pair<IntVec, LambdaWeight>> expect = {
      {alias_vec({{1, 1}, {5, 1}}), {3, 0}},          {alias_vec({{2, 1}, {6, 1}}), {0, 3}},
      {alias_vec({{2, 1}, {5, 1}}), {2, 1}},          {alias_vec({{1, 1}, {6, 1}}), {1, 2}},
      {alias_vec({{6, 1}, {1, 2}, {2, -1}}), {2, 1}}, {alias_vec({{3, 1}, {4, 1}, {1, -1}}), {1, 2}},
  };
  std::set<IntVec> want;
  for (const auto& [g, lw] : expect) {
    want.insert(g);
    lg.expect(d.lambda_of(g) == lw, "lambda-weight of a listed point");
  }
  lg.expect(std::set<IntVec>(pts.begin(), pts.end()) == want && pts.size() == 6, "the six listed points");
  lg.expect(truncated_product({2, 1}, {2, 1}, 0, opt).to_text() == "s[3] + s[2,1]", "truncated product");
  lg.expect(kronecker({{2, 1}, {2, 1}, {3}, 0}, Method::Polytope, opt).value() == 1, "g^(3) = 1");
  lg.expect(kronecker({{2, 1}, {2, 1}, {2, 1}, 0}, Method::Polytope, opt).value() == 1, "g^(2,1) = 1");
}

void c2(Ledger& lg) {
  EnumOptions opt;
  opt.jobs = hw_jobs();
  CrossReport rep = cross_validate(8, 3, opt);
  lg.expect(rep.agree, "cross validation n <= 8, l <= 3: " + rep.first_discrepancy);
  lg.expect(rep.checked > 1000, "triple count");
  std::printf("    C2 exhaustive: %zu triples\n", rep.checked);
}

void c2_random(Ledger& lg) {
  std::mt19937_64 rng(20240607);
  EnumOptions opt;
  opt.jobs = hw_jobs();
  for (int t = 0; t < 50; ++t) {
    const int n = 4 + static_cast<int>(rng() % 9);
    std::vector<Partition> len4;
    for (const auto& p : partitions_of(n, 4))
      if (p.length() == 4) len4.push_back(p);
    const auto any = partitions_of(n, 4);
    const auto lams = partitions_of(n, 2);
    const Partition mu = len4[rng() % len4.size()];
    const Partition nu = any[rng() % any.size()];
    const Partition lam = lams[rng() % lams.size()];
    std::string detail;
    const bool ok = triple_agrees({mu, nu, lam, 4}, opt, &detail);
    lg.expect(ok, "l = 4 case " + mu.paren() + nu.paren() + lam.paren() + " " + detail);
  }
}

void c3(Ledger& lg) {
  EnumOptions opt;
  opt.jobs = hw_jobs();
  for (auto [j, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
    const int i = j + k;
    std::vector<int> nu{j + 1, j, j - 1, k + 1, k, k - 1};
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    KroneckerQuery q{Partition{i + 1, i, i - 1}, Partition(nu), Partition{3 * j, 3 * k}, 0};
    MethodReport r = kronecker(q, Method::All, opt);
    const std::string tag = "(j,k) = (" + std::to_string(j) + "," + std::to_string(k) + ")";
    lg.expect(r.polytope == 2, tag + " polytope");
    lg.expect(r.characters == 2, tag + " characters");
    lg.expect(r.lr == 2, tag + " lr");
  }
}

void c4(Ledger& lg) {
  for (int l = 1; l <= 6; ++l) {
    const Diamond& d = build_diamond(l);
    const IntMatrix b = d.quiver().b_matrix();
    const std::string tag = " l=" + std::to_string(l);
    if (d.num_mutable() > 0) lg.expect(rank(b) == d.num_mutable(), "B full rank" + tag);
    const auto& sig = d.sigma_tilde().rows;
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t c = 0; c < sig[0].size(); ++c) {
        long long s = 0;
        for (std::size_t v = 0; v < sig.size(); ++v) s += b[r][v] * sig[v][c];
        lg.expect(s == 0, "B . sigma~ = 0" + tag);
      }
    ConeSystem cs = cone_inequalities(l);
    lg.expect(static_cast<int>(cs.rows.size()) == 3 * l * l - 2 * l + 1, "row count" + tag);
    if (l <= 4) {
      auto certs = irredundancy_certificates(cs.rows, cs.dim);
      for (std::size_t r = 0; r < cs.rows.size(); ++r) {
        bool ok = certs[r].has_value();
        if (ok) {
          for (std::size_t o = 0; o < cs.rows.size(); ++o) {
            mpq_class v = 0;
            for (std::size_t c = 0; c < cs.rows[o].size(); ++c) v += (*certs[r])[c] * static_cast<long>(cs.rows[o][c]);
            ok = ok && (o == r ? v < 0 : v > 0);
          }
        }
        lg.expect(ok, "row " + cs.provenance[r] + " irredundant" + tag);
      }
    }
    if (l >= 2 && l <= 5)
      for (const auto& m : u_invariant_gvectors(l)) lg.expect(cs.contains(m.g), m.name + tag);
  }
}

void c5(Ledger& lg) {
  for (int l = 2; l <= 4; ++l) {
    VerifyReport ex = verify_exchange(l, 50, 7, hw_jobs());
    lg.expect(ex.ok() && ex.checks == static_cast<std::size_t>(50 * build_diamond(l).num_mutable()),
              "exchange l=" + std::to_string(l) + " " + ex.to_json());
    VerifyReport ga = verify_group_actions(l, 50, 11, hw_jobs());
    lg.expect(ga.ok(), "group actions l=" + std::to_string(l) + " " + ga.to_json());
  }
}

void c6(Ledger& lg) {
  auto rep = oracle::diamond2_laurent_checks();
  for (const auto& c : rep.checks) lg.expect(c.ok, c.name);
}

void c7(Ledger& lg) {
  UnimodularFan fan = diamond2_fan();
  FanCheck chk = check_unimodular_fan(fan);
  lg.expect(chk.ok, "fan unimodular with face intersections");
  HilbertSeries hs = fan_hilbert(fan);
  HilbertSeries closed = diamond2_closed_form();
  hs.canonicalize();
  closed.canonicalize();
  lg.expect(hs.numerator == closed.numerator && hs.denominator == closed.denominator, "canonical forms coincide");

  const Diamond& d = build_diamond(2);
  IntVec grading;
  for (const auto& v : d.vertices()) grading.push_back(v.i);
  auto coeffs = hs.expand(grading, 9);
  std::map<std::vector<long long>, std::vector<IntVec>> by_sigma;
  bool unit_coeffs = true;
  for (const auto& [g, c] : coeffs) {
    unit_coeffs = unit_coeffs && c == 1;
    by_sigma[d.sigma_of(g).flat()].push_back(g);
  }
  lg.expect(unit_coeffs, "series coefficients are 0/1");
  for (long long a = -3; a <= 0; ++a)
    for (long long b = -3; b <= 0; ++b)
      for (long long c = 0; c <= 3; ++c)
        for (long long e = 0; e <= 3; ++e) {
          Weight w(2, {a, b}, {c, e});
          if (!w.balanced()) continue;
          auto pts = enumerate(diamond_section(2, w)).points;
          auto got = by_sigma[w.flat()];
          std::sort(got.begin(), got.end());
          lg.expect(got == pts, "slice " + w.str());
        }
}

void c8(Ledger& lg) {
  std::mt19937_64 rng(8);
  for (int l = 1; l <= 3; ++l) {
    const Diamond& d = build_diamond(l);
    const std::string tag = " l=" + std::to_string(l);
    lg.expect(rank(phi_matrix(l)) == l * (l + 1), "phi full rank" + tag);
    TuReport tu = check_tu_blocks(l);
    lg.expect(tu.ok, "Ghouila-Houri blocks" + tag + " " + tu.to_json());
    for (int v = 0; v < d.size(); ++v) {
      IntVec h = phi_apply(l, unit(d.size(), v));
      lg.expect(restrict_to_flag(l, sigma_hat_weight(l, h)) == d.flag_weight(v), "sigma^ of " + d.vertex(v).label());
    }
    for (int t = 0; t < 10; ++t) {
      const int n = 1 + static_cast<int>(rng() % 5);
      const auto ps = partitions_of(n, l);
      Weight w = partitions_to_weight(ps[rng() % ps.size()], ps[rng() % ps.size()], l);
      auto pts = enumerate(diamond_section(l, w)).points;
      std::set<IntVec> images;
      for (const auto& g : pts) {
        IntVec h = phi_apply(l, g);
        lg.expect(hex_membership(l, h), "image in hexagon cone" + tag + " sigma " + w.str());
        IntVec flag = restrict_to_flag(l, sigma_hat_weight(l, h));
        lg.expect(flag == w.flat(), "image weight" + tag);
        images.insert(h);
      }
      lg.expect(images.size() == pts.size(), "images distinct" + tag);
    }
  }
}

void c9(Ledger& lg) {
  for (int l = 2; l <= 4; ++l) {
    const auto& q = build_diamond(l).quiver();
    for (int u = 0; u < q.num_mutable(); ++u)
      lg.expect(mutate_quiver(mutate_quiver(q, u), u) == q, "involution l=" + std::to_string(l));
  }
  std::mt19937_64 rng(9);
  for (int l : {2, 3}) {
    const Diamond& d = build_diamond(l);
    for (int s = 0; s < 50; ++s) {
      IceQuiver q = d.quiver();
      WeightConfiguration w = d.sigma_tilde();
      const int len = 1 + static_cast<int>(rng() % 20);
      for (int t = 0; t < len; ++t) {
        const int u = static_cast<int>(rng() % static_cast<unsigned>(q.num_mutable()));
        // Multiplicities grow quickly; a chain ends once they leave machine range.
        try {
          w = mutate_weight_config(q, w, u);
          q = mutate_quiver(q, u);
          lg.expect(w.valid_for(q), "weight configuration along a chain");
        } catch (const InvariantError&) {
          break;
        }
      }
    }
  }
  for (int l = 2; l <= 3; ++l)
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : partitions_of(n, l))
        for (const auto& nu : partitions_of(n, l)) {
          Weight w = partitions_to_weight(mu, nu, l);
          for (long long a = 0; a <= l * n; ++a)
            for (long long b = 0; b + a <= l * n; ++b) {
              const auto c1 = count(diamond_section(l, w, LambdaWeight{a, b}));
              const auto c2 = count(diamond_section(l, w, LambdaWeight{b, a}));
              lg.expect(c1 == c2, "count symmetry " + w.str());
            }
        }
  KroneckerQuery q11{{1, 1}, {1, 1}, {1, 1}, 0};
  MethodReport r11 = kronecker(q11, Method::All);
  lg.expect(r11.agree() && r11.value() == 0, "g_{(1,1),(1,1)}^{(1,1)} = 0");
  lg.expect(kron_characters({2, 2}, {2, 2}, {2, 2}) == 1, "g_{(2,2),(2,2)}^{(2,2)} = 1");
}

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<void(Ledger&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "l=2 golden example", 1, c1},
      {"C2", "triple-oracle agreement, all triples n<=8, l<=3", 600, c2},
      {"C2", "triple-oracle agreement, 50 random cases at l=4, n<=12", 600, c2_random},
      {"C3", "g=2 three-row family", 300, c3},
      {"C4", "structure of the diamond quiver and its cone", 120, c4},
      {"C5", "exchange relations and group actions", 300, c5},
      {"C6", "Laurent identities on the l=2 diamond", 1, c6},
      {"C7", "Hilbert series of the l=2 cone", 60, c7},
      {"C8", "phi and the hexagon cone", 120, c8},
      {"C9", "property suites", 120, c9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Ledger lg;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(lg);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = error.empty() && lg.ok() && in_budget;
    failures += !pass;
    std::printf("%s %s %s (%zu checks, %.2f s, budget %.0f s)\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), lg.checks, secs, c.budget_s);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (!in_budget) std::printf("    over budget\n");
    for (const auto& f : lg.failed) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
