#include "kron/engine.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "kron/error.hpp"

namespace kron {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Method parse_method(const std::string& s) {
  if (s == "polytope") return Method::Polytope;
  if (s == "characters") return Method::Characters;
  if (s == "lr") return Method::Lr;
  if (s == "all") return Method::All;
  throw_parse("unknown method '" + s + "' (expected polytope, characters, lr or all)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Polytope: return "polytope";
    case Method::Characters: return "characters";
    case Method::Lr: return "lr";
    case Method::All: return "all";
  }
  return "?";
}

int KroneckerQuery::resolve_l() const {
  if (mu.size() != nu.size() || mu.size() != lambda.size()) {
    throw_invariant("mu, nu and lambda must have the same size (got " + std::to_string(mu.size()) + ", " +
                    std::to_string(nu.size()) + ", " + std::to_string(lambda.size()) + ")");
  }
  if (lambda.length() > 2) throw_invariant("lambda must have length at most 2");
  const int need = std::max({mu.length(), nu.length(), 1});
  if (l == 0) return need;
  if (l < need) throw_invariant("l = " + std::to_string(l) + " is smaller than the lengths of mu and nu");
  return l;
}

bool MethodReport::agree() const {
  std::optional<long long> first;
  for (const auto& v : {polytope, characters, lr}) {
    if (!v) continue;
    if (first && *first != *v) return false;
    first = v;
  }
  return true;
}

long long MethodReport::value() const {
  if (polytope) return *polytope;
  if (characters) return *characters;
  if (lr) return *lr;
  throw_invariant("no method was run");
}

std::string MethodReport::to_json(const KroneckerQuery& q, bool with_timings) const {
  nlohmann::ordered_json j;
  j["mu"] = q.mu.str();
  j["nu"] = q.nu.str();
  j["lambda"] = q.lambda.str();
  j["l"] = l;
  j["sigma"] = sigma.str();
  if (count_lambda && count_lambda_omega) {
    j["counts"] = {{"lambda", *count_lambda}, {"lambda_omega", *count_lambda_omega}};
  }
  j["g"] = value();
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  if (polytope) m["polytope"] = *polytope;
  if (characters) m["characters"] = *characters;
  if (lr) m["lr"] = *lr;
  j["methods"] = m;
  j["agree"] = agree();
  if (with_timings) j["timings_ms"] = timings_ms;
  return j.dump();
}

PolytopeSection diamond_section(int l, const Weight& sigma, const std::optional<LambdaWeight>& lambda) {
  if (sigma.l != l) throw_invariant("weight arm length does not match l");
  const Diamond& d = build_diamond(l);
  PolytopeSection s(d.size(), cone_inequalities(l).rows);
  const std::vector<long long> target = sigma.flat();
  for (int c = 0; c < 2 * l; ++c) {
    IntVec row(static_cast<std::size_t>(d.size()));
    for (int v = 0; v < d.size(); ++v) row[static_cast<std::size_t>(v)] = d.sigma_tilde().rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
    s.add_equality(std::move(row), target[static_cast<std::size_t>(c)]);
  }
  if (lambda) {
    IntVec ja(static_cast<std::size_t>(d.size())), ka(static_cast<std::size_t>(d.size()));
    for (int v = 0; v < d.size(); ++v) {
      ja[static_cast<std::size_t>(v)] = d.vertex(v).j;
      ka[static_cast<std::size_t>(v)] = d.vertex(v).k;
    }
    s.add_equality(std::move(ja), lambda->a);
    s.add_equality(std::move(ka), lambda->b);
  }
  return s;
}

MethodReport kronecker(const KroneckerQuery& q, Method method, const EnumOptions& opt) {
  MethodReport rep;
  rep.l = q.resolve_l();
  rep.sigma = partitions_to_weight(q.mu, q.nu, rep.l);
  if (method == Method::Polytope || method == Method::All) {
    auto t0 = Clock::now();
    const LambdaWeight lam{q.lambda(1), q.lambda(2)};
    const LambdaWeight lam_omega = lambda_omega(q.lambda);
    rep.count_lambda = count(diamond_section(rep.l, rep.sigma, lam), opt);
    rep.count_lambda_omega = count(diamond_section(rep.l, rep.sigma, lam_omega), opt);
    rep.polytope = static_cast<long long>(*rep.count_lambda) - static_cast<long long>(*rep.count_lambda_omega);
    rep.timings_ms["polytope"] = ms_since(t0);
  }
  if (method == Method::Characters || method == Method::All) {
    auto t0 = Clock::now();
    rep.characters = kron_characters(q.lambda, q.mu, q.nu);
    rep.timings_ms["characters"] = ms_since(t0);
  }
  if (method == Method::Lr || method == Method::All) {
    auto t0 = Clock::now();
    rep.lr = kron_via_lr(q.lambda, q.mu, q.nu, 2);
    rep.timings_ms["lr"] = ms_since(t0);
  }
  return rep;
}

SchurExpansion truncated_product(const Partition& mu, const Partition& nu, int l, const EnumOptions& opt) {
  if (mu.size() != nu.size()) throw_invariant("mu and nu must have the same size");
  const int need = std::max({mu.length(), nu.length(), 1});
  if (l == 0) l = need;
  if (l < need) throw_invariant("l is smaller than the lengths of mu and nu");
  const Diamond& d = build_diamond(l);
  const Weight sigma = partitions_to_weight(mu, nu, l);
  LatticePointSet pts = enumerate(diamond_section(l, sigma), opt);
  std::vector<LambdaWeight> weights;
  weights.reserve(pts.points.size());
  for (const auto& g : pts.points) weights.push_back(d.lambda_of(g));
  return schur_from_weights(weights);
}

std::string CrossReport::to_json() const {
  nlohmann::ordered_json j;
  j["relation"] = "polytope = characters = lr";
  j["n_max"] = n_max;
  j["l_max"] = l_max;
  j["checked"] = checked;
  j["agree"] = agree;
  j["failures"] = agree ? nlohmann::ordered_json::array() : nlohmann::ordered_json::array({first_discrepancy});
  return j.dump();
}

bool triple_agrees(const KroneckerQuery& q, const EnumOptions& opt, std::string* detail) {
  MethodReport r = kronecker(q, Method::All, opt);
  bool ok = r.agree() && r.value() >= 0;
  if (!ok && detail) *detail = r.to_json(q);
  return ok;
}

CrossReport cross_validate(int n_max, int l_max, const EnumOptions& opt) {
  CrossReport rep;
  rep.n_max = n_max;
  rep.l_max = l_max;
  std::vector<KroneckerQuery> queries;
  for (int n = 1; n <= n_max; ++n) {
    auto ml = partitions_of(n, l_max);
    auto lams = partitions_of(n, 2);
    for (const auto& mu : ml)
      for (const auto& nu : ml)
        for (const auto& lam : lams) queries.push_back({mu, nu, lam, 0});
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t first_bad = queries.size();
  std::string detail;
  EnumOptions inner = opt;
  inner.jobs = 1;
  std::exception_ptr failure;
  auto worker = [&]() {
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= queries.size()) break;
        std::string d;
        if (!triple_agrees(queries[i], inner, &d)) {
          std::lock_guard lock(mu);
          if (i < first_bad) {
            first_bad = i;
            detail = d;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next.store(queries.size());
    }
  };
  const unsigned jobs = std::max(1U, opt.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  rep.checked = queries.size();
  rep.agree = first_bad == queries.size();
  rep.first_discrepancy = detail;
  return rep;
}

}  // namespace kron
