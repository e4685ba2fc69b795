#include "cylabacus/enumerate_verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "cylabacus/abacus.hpp"
#include "cylabacus/crystal.hpp"
#include "cylabacus/cylindric.hpp"
#include "cylabacus/level_rank.hpp"
#include "cylabacus/notation.hpp"
#include "cylabacus/periodicity.hpp"

namespace cylabacus {

namespace {

void gen_partitions(int n, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int m = std::min(n, cap); m >= 1; --m) {
    prefix.push_back(m);
    gen_partitions(n - m, m, prefix, out);
    prefix.pop_back();
  }
}

void gen_tuples(const std::vector<std::vector<Partition>>& per_size, int x, int budget,
                std::vector<Partition>& prefix, std::vector<Multipartition>& out) {
  if ((int)prefix.size() == x) {
    if (budget == 0) out.push_back(prefix);
    return;
  }
  int remaining = x - (int)prefix.size();
  for (int a = 0; a <= budget; ++a) {
    if (remaining == 1 && a != budget) continue;
    for (const Partition& p : per_size[a]) {
      prefix.push_back(p);
      gen_tuples(per_size, x, budget - a, prefix, out);
      prefix.pop_back();
    }
  }
}

void check_domain(const EnumerationDomain& d) {
  if (d.level < 1) throw std::invalid_argument("level must be >= 1");
  if (d.rank < 2) throw std::invalid_argument("rank must be >= 2");
  if (d.max_size < 0) throw std::invalid_argument("max size must be >= 0");
  if (d.charge_min > d.charge_max) throw std::invalid_argument("empty charge range");
}

bool window_ok(const Charge& s, int e) {
  return s.size() < 2 || in_window_D(s, e);
}

std::string quote_mp(const Multipartition& mp) { return format_multipartition(mp); }

// Runs `check(instance, sink)` over every (charge, multipartition) pair,
// sharded across `jobs` threads by charge; the merge preserves enumeration
// order so reports are deterministic.
template <typename Check>
VerificationReport run_harness(const EnumerationDomain& d, int jobs, bool window_only,
                               Check check) {
  check_domain(d);
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.domain = d;
  std::vector<Charge> charges = enumerate_charges(d);
  const std::vector<Multipartition> tuples = enumerate_multipartitions(d.level, d.max_size);

  std::vector<std::vector<std::string>> found(charges.size());
  std::vector<uint64_t> counted(charges.size(), 0);
  auto worker = [&](int w) {
    for (size_t ci = w; ci < charges.size(); ci += (size_t)jobs) {
      if (window_only && !window_ok(charges[ci], d.rank)) continue;
      for (const Multipartition& mp : tuples) {
        check(ChargedMultipartition{mp, charges[ci]}, found[ci]);
        ++counted[ci];
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (std::thread& t : pool) t.join();
  }
  for (size_t ci = 0; ci < charges.size(); ++ci) {
    report.instances += counted[ci];
    for (std::string& s : found[ci]) report.counterexamples.push_back(std::move(s));
  }
  auto stop = std::chrono::steady_clock::now();
  report.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(n, n, prefix, out);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int x, int n) {
  if (x < 1) throw std::invalid_argument("level must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<std::vector<Partition>> per_size;
  for (int k = 0; k <= n; ++k) per_size.push_back(partitions_of(k));
  std::vector<Multipartition> out;
  std::vector<Partition> prefix;
  for (int total = 0; total <= n; ++total) gen_tuples(per_size, x, total, prefix, out);
  return out;
}

uint64_t count_multipartitions(int x, int n) {
  if (x < 1) throw std::invalid_argument("level must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  // Partition numbers, then x-fold convolution, then cumulative sum.
  std::vector<uint64_t> partitions(n + 1, 0), conv(n + 1, 0);
  partitions[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int k = part; k <= n; ++k) partitions[k] += partitions[k - part];
  }
  conv[0] = 1;
  for (int round = 0; round < x; ++round) {
    std::vector<uint64_t> next(n + 1, 0);
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) next[a + b] += conv[a] * partitions[b];
    }
    conv = std::move(next);
  }
  uint64_t total = 0;
  for (uint64_t c : conv) total += c;
  return total;
}

std::vector<Charge> enumerate_charges(const EnumerationDomain& d) {
  check_domain(d);
  std::vector<Charge> out;
  std::vector<int> entries(d.level, 0);
  std::function<void(int)> walk = [&](int j) {
    if (j == d.level) {
      out.push_back(Charge(entries));
      return;
    }
    int lo = d.charge_min, hi = d.charge_max;
    if (d.in_window && j > 0) {
      lo = entries[j - 1];
      hi = entries[0] + d.rank;
    }
    for (int v = lo; v <= hi; ++v) {
      entries[j] = v;
      walk(j + 1);
    }
  };
  walk(0);
  return out;
}

uint64_t domain_cardinality(const EnumerationDomain& d) {
  return (uint64_t)enumerate_charges(d).size() * count_multipartitions(d.level, d.max_size);
}

VerificationReport verify_cylindric_equivalence(const EnumerationDomain& d, int jobs) {
  int e = d.rank;
  return run_harness(d, jobs, /*window_only=*/true,
                     [e](const ChargedMultipartition& inst, std::vector<std::string>& sink) {
                       Abacus a = abacus_from(inst);
                       bool def = is_cylindric_def(inst, e);
                       bool yoke = is_cylindric_yoke(a, e);
                       bool black = is_cylindric_black(a, e);
                       if (def == yoke && yoke == black) return;
                       nlohmann::json j;
                       j["mp"] = quote_mp(inst.components);
                       j["charge"] = format_charge(inst.charge);
                       j["rank"] = e;
                       j["def"] = def;
                       j["yoke"] = yoke;
                       j["black"] = black;
                       j["repro"] = "cylabacus check cylindric --rank " + std::to_string(e) +
                                    " --charge=" + format_charge(inst.charge) + " --mp '" +
                                    quote_mp(inst.components) + "'";
                       sink.push_back(j.dump());
                     });
}

VerificationReport verify_periodicity_source(const EnumerationDomain& d, int jobs) {
  int e = d.rank;
  return run_harness(d, jobs, /*window_only=*/false,
                     [e](const ChargedMultipartition& inst, std::vector<std::string>& sink) {
                       bool source = is_source(inst, e);
                       bool periodic = is_totally_periodic(abacus_from(inst), e);
                       if (source == periodic) return;
                       nlohmann::json j;
                       j["mp"] = quote_mp(inst.components);
                       j["charge"] = format_charge(inst.charge);
                       j["rank"] = e;
                       j["source"] = source;
                       j["periodic"] = periodic;
                       j["repro"] = "cylabacus check source --rank " + std::to_string(e) +
                                    " --charge=" + format_charge(inst.charge) + " --mp '" +
                                    quote_mp(inst.components) + "'";
                       sink.push_back(j.dump());
                     });
}

VerificationReport verify_duality_transport(const EnumerationDomain& d, int jobs) {
  if (d.level < 2) throw std::invalid_argument("duality transport needs level >= 2");
  int e = d.rank;
  return run_harness(
      d, jobs, /*window_only=*/true,
      [e](const ChargedMultipartition& inst, std::vector<std::string>& sink) {
        int x = inst.level();
        bool cyl = is_cylindric_def(inst, e);
        Abacus dual = dualize(abacus_from(inst), e);
        bool periodic = is_totally_periodic(dual, x);
        ChargedMultipartition dual_mp = multipartition_of(dual);
        bool source = is_source(dual_mp, x);
        if (cyl == periodic && periodic == source) return;
        nlohmann::json j;
        j["mp"] = quote_mp(inst.components);
        j["charge"] = format_charge(inst.charge);
        j["rank"] = e;
        j["cylindric"] = cyl;
        j["dual_mp"] = quote_mp(dual_mp.components);
        j["dual_charge"] = format_charge(dual_mp.charge);
        j["dual_periodic"] = periodic;
        j["dual_source"] = source;
        j["repro"] = "cylabacus dual --rank " + std::to_string(e) +
                     " --charge=" + format_charge(inst.charge) + " --mp '" +
                     quote_mp(inst.components) + "'";
        sink.push_back(j.dump());
      });
}

std::vector<PredicateCounts> count_predicates(const EnumerationDomain& d, int jobs) {
  check_domain(d);
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  std::vector<Charge> charges = enumerate_charges(d);
  const std::vector<Multipartition> tuples = enumerate_multipartitions(d.level, d.max_size);
  std::vector<std::vector<PredicateCounts>> shard(
      charges.size(), std::vector<PredicateCounts>(d.max_size + 1));
  auto worker = [&](int w) {
    for (size_t ci = w; ci < charges.size(); ci += (size_t)jobs) {
      bool window = window_ok(charges[ci], d.rank);
      for (const Multipartition& mp : tuples) {
        ChargedMultipartition inst{mp, charges[ci]};
        PredicateCounts& row = shard[ci][total_size(mp)];
        if (window && is_cylindric_def(inst, d.rank)) {
          ++row.cylindric;
          if (is_flotw(inst, d.rank)) ++row.flotw;
        }
        if (is_source(inst, d.rank)) ++row.source;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (std::thread& t : pool) t.join();
  }
  std::vector<PredicateCounts> out(d.max_size + 1);
  for (int n = 0; n <= d.max_size; ++n) {
    out[n].n = n;
    for (size_t ci = 0; ci < charges.size(); ++ci) {
      out[n].cylindric += shard[ci][n].cylindric;
      out[n].flotw += shard[ci][n].flotw;
      out[n].source += shard[ci][n].source;
    }
  }
  return out;
}

}  // namespace cylabacus
