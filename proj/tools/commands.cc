// Copyright 2026 The qassign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "qassign/circuit_io.h"
#include "qassign/error.h"
#include "qassign/layout_io.h"
#include "qassign/readout.h"
#include "qassign/rng.h"
#include "qassign/stats.h"

#ifndef QASSIGN_VERSION
#define QASSIGN_VERSION "unknown"
#endif

namespace qassign::cli {
namespace {

namespace fs = std::filesystem;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kOptimumTolerance = 1e-12;

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

void require_out_dir(const std::string& dir) {
  if (dir.empty()) throw Error(ErrorCode::kInvalidArgument, "out_dir is required");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  if (s.empty() || s == "nan") return kNaN;
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "not a number: '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::kParse, "not a number: '" + s + "'");
  return v;
}

Assignment parse_path(const std::string& s) {
  Assignment a;
  for (const std::string& part : split(s, '-')) {
    try {
      a.path.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad path '" + s + "'");
    }
  }
  return a;
}

std::string opt_double(bool present, double v) { return present ? format_double(v) : ""; }

// Shared by sweep and anneal.
struct Population {
  NoiseGraph graph;
  Circuit circuit;
  std::vector<Assignment> assignments;
};

Population load_population(const std::string& layout, const CircuitSpec& spec,
                           uint64_t max_assignments) {
  Population p;
  p.graph = load_layout(layout);
  p.circuit = build_circuit(spec);
  int n = p.circuit.num_qubits();
  uint64_t count = count_paths_capped(p.graph, n, max_assignments);
  if (count > max_assignments) {
    throw Error(ErrorCode::kBudgetExceeded,
                "more than " + std::to_string(max_assignments) + " assignments of " +
                    std::to_string(n) + " qubits");
  }
  p.assignments = enumerate_simple_paths(p.graph, n);
  if (p.assignments.empty()) {
    throw Error(ErrorCode::kInsufficientStates, "layout has no path of " + std::to_string(n) +
                                                    " qubits");
  }
  return p;
}

double metric_of(const MetricsRecord& r, const std::string& metric) {
  if (metric == "F_LE") return r.F_LE;
  if (metric == "F") return r.F;
  if (metric == "F0") return r.F0;
  if (metric == "F_extrap") return r.F_extrap;
  if (metric == "F_LE_rand_mean") return r.F_LE_rand_mean;
  if (metric == "F_LE_sampled") return r.F_LE_sampled;
  throw Error(ErrorCode::kInvalidArgument, "unknown metric '" + metric + "'");
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Circuit build_circuit(const CircuitSpec& s) {
  if (s.family == "ghz") return build_ghz(s.n);
  if (s.family == "swapnet") {
    std::complex<double> alpha(std::cos(s.theta / 2), 0.0);
    std::complex<double> beta = std::polar(std::sin(s.theta / 2), s.phase);
    return build_swapnet(s.n, alpha, beta, s.hops < 0 ? s.n - 1 : s.hops);
  }
  if (s.family == "clifford") return build_clifford_conjugation(s.n, s.seed);
  if (s.family == "qft") return build_qft_basis(s.n, s.j);
  if (s.family == "random") return build_random_circuit(s.n, s.depth, s.seed);
  if (s.family == "file") return parse_circuit(read_file(s.file));
  throw Error(ErrorCode::kInvalidArgument, "unknown circuit family '" + s.family + "'");
}

NoiseModel noise_model(const std::string& name) {
  if (name == "none") return NoiseModel::none();
  if (name == "local") return NoiseModel::local();
  if (name == "global") return NoiseModel::global();
  throw Error(ErrorCode::kInvalidArgument, "unknown noise model '" + name + "'");
}

GeneratedMap generate_noisemap(const GenNoisemapConfig& c) {
  if (c.rows < 2 || c.cols < 2) throw Error(ErrorCode::kInvalidArgument, "grid must be >= 2x2");
  if (!(0 <= c.eps_min && c.eps_min <= c.eps_max && c.eps_max <= 1) ||
      !(0 <= c.eta_min && c.eta_min <= c.eta_max && c.eta_max <= 1) ||
      !(0 <= c.readout_max && c.readout_max < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "weight ranges outside [0, 1]");
  }
  GeneratedMap out;
  out.graph = NoiseGraph::grid(c.rows, c.cols);
  NoiseGraph& g = out.graph;
  Rng rng(c.seed, 0, "noisemap");
  for (QubitId q : g.vertices()) {
    g.set_eps(q, rng.uniform(c.eps_min, c.eps_max));
    ReadoutRates r;
    if (c.readout_max > 0) r = {rng.uniform(0, c.readout_max), rng.uniform(0, c.readout_max)};
    g.set_readout(q, r);
  }
  for (const Edge& e : g.edges()) g.set_eta(e.a, e.b, rng.uniform(c.eta_min, c.eta_max));
  if (c.planted) {
    if (!(c.planted_scale >= 0 && c.planted_scale < 1)) {
      throw Error(ErrorCode::kInvalidArgument, "planted_scale must lie in [0, 1)");
    }
    Rng prng(c.seed, 0, "planted_path");
    auto paths = enumerate_simple_paths(g, c.planted_n);
    if (paths.empty()) throw Error(ErrorCode::kInvalidArgument, "planted_n too large for grid");
    Assignment p = paths[prng.below(paths.size())];
    // Hop distance of every vertex from the planted path.
    std::map<QubitId, int> dist;
    std::vector<QubitId> frontier = p.path;
    for (QubitId q : p.path) dist[q] = 0;
    while (!frontier.empty()) {
      std::vector<QubitId> next;
      for (QubitId v : frontier) {
        for (QubitId w : g.neighbors(v)) {
          if (dist.emplace(w, dist[v] + 1).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    auto factor = [&](double d) {
      if (d == 0) return c.planted_scale;
      if (c.planted_radius <= 0) return 1.0;
      return std::min(1.0, c.planted_scale + (1 - c.planted_scale) * d / c.planted_radius);
    };
    for (QubitId q : g.vertices()) g.set_eps(q, factor(dist[q]) * g.eps(q));
    std::set<Edge> on_path;
    for (size_t i = 0; i + 1 < p.path.size(); ++i) {
      on_path.insert(Edge::of(p.path[i], p.path[i + 1]));
    }
    for (const Edge& e : g.edges()) {
      // Chords between path vertices count as half a hop away.
      double d = on_path.count(e) ? 0.0 : std::max(0.5, 0.5 * (dist[e.a] + dist[e.b]));
      g.set_eta(e.a, e.b, factor(d) * g.eta(e.a, e.b));
    }
    out.planted = p;
  }
  return out;
}

uint64_t count_paths_capped(const NoiseGraph& g, int n, uint64_t cap) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "path length must be >= 1");
  uint64_t count = 0;
  std::map<QubitId, bool> used;
  std::function<void(QubitId, int)> dfs = [&](QubitId v, int depth) {
    if (count > cap) return;
    if (depth == n) {
      ++count;
      return;
    }
    used[v] = true;
    for (QubitId w : g.neighbors(v)) {
      if (!used[w]) dfs(w, depth + 1);
    }
    used[v] = false;
  };
  for (QubitId v : g.vertices()) dfs(v, 1);
  return count;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sweep_csv(const std::vector<MetricsRecord>& rows) {
  std::ostringstream os;
  os << "path,F,F_LE,F0,F_extrap,F_LE_rand_mean,F_LE_rand_std,shots,F_LE_sampled,"
        "F_LE_sampled_stderr,rejected\n";
  for (const MetricsRecord& r : rows) {
    os << to_string(r.assignment) << ',' << format_double(r.F) << ',' << format_double(r.F_LE)
       << ',' << format_double(r.F0) << ',' << format_double(r.F_extrap) << ','
       << opt_double(r.has_rand, r.F_LE_rand_mean) << ','
       << opt_double(r.has_rand, r.F_LE_rand_std) << ',' << r.shots << ','
       << opt_double(r.shots > 0, r.F_LE_sampled) << ','
       << opt_double(r.shots > 0, r.F_LE_sampled_stderr) << ',' << (r.rejected ? 1 : 0)
       << '\n';
  }
  return os.str();
}

std::vector<MetricsRecord> parse_sweep_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::kParse, "empty sweep CSV");
  std::vector<std::string> header = split(line, ',');
  std::map<std::string, size_t> col;
  for (size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* need : {"path", "F", "F_LE", "F0"}) {
    if (!col.count(need)) throw Error(ErrorCode::kParse, std::string("missing column ") + need);
  }
  auto get = [&](const std::vector<std::string>& f, const char* name) -> std::string {
    auto it = col.find(name);
    return it == col.end() ? std::string() : f.at(it->second);
  };
  std::vector<MetricsRecord> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> f = split(line, ',');
    if (f.size() != header.size()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": expected " +
                                         std::to_string(header.size()) + " fields");
    }
    MetricsRecord r;
    r.assignment = parse_path(get(f, "path"));
    r.F = parse_double(get(f, "F"));
    r.F_LE = parse_double(get(f, "F_LE"));
    r.F0 = parse_double(get(f, "F0"));
    r.F_extrap = parse_double(get(f, "F_extrap"));
    std::string rm = get(f, "F_LE_rand_mean");
    r.has_rand = !rm.empty();
    if (r.has_rand) {
      r.F_LE_rand_mean = parse_double(rm);
      r.F_LE_rand_std = parse_double(get(f, "F_LE_rand_std"));
    }
    std::string shots = get(f, "shots");
    r.shots = shots.empty() ? 0 : std::stoull(shots);
    if (r.shots > 0) {
      r.F_LE_sampled = parse_double(get(f, "F_LE_sampled"));
      r.F_LE_sampled_stderr = parse_double(get(f, "F_LE_sampled_stderr"));
    }
    r.rejected = get(f, "rejected") == "1";
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << bytes;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

std::vector<std::string> run_gen_noisemap(const GenNoisemapConfig& c) {
  require_out_dir(c.out_dir);
  GeneratedMap m = generate_noisemap(c);
  json doc = json::parse(layout_to_json(m.graph));
  if (m.planted) doc["planted"] = m.planted->path;
  write_file(join_path(c.out_dir, "layout.json"), doc.dump(2) + "\n");
  return {"layout.json"};
}

std::vector<std::string> run_sweep(const SweepConfig& c) {
  require_out_dir(c.out_dir);
  Population p = load_population(c.layout, c.circuit, c.max_assignments);
  SweepOptions opts;
  opts.shots = c.shots;
  opts.use_confusion = c.confusion;
  opts.correct_readout = c.correct;
  opts.ensemble = c.ensemble;
  opts.seed = c.seed;
  opts.reject_threshold = c.reject_threshold;
  auto rows = sweep(p.circuit, p.assignments, p.graph, noise_model(c.noise), opts);
  write_file(join_path(c.out_dir, "sweep.csv"), sweep_csv(rows));
  return {"sweep.csv"};
}

std::vector<std::string> run_anneal(const AnnealConfig& c) {
  require_out_dir(c.out_dir);
  if (c.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (c.baseline_draws < 1) throw Error(ErrorCode::kInvalidArgument, "baseline_draws must be >= 1");
  NoiseGraph g = load_layout(c.layout);
  Schedule schedule = c.schedule == "logarithmic" ? Schedule::logarithmic(c.t0)
                      : c.schedule == "exponential"
                          ? Schedule::exponential(c.t0, c.alpha)
                          : throw Error(ErrorCode::kInvalidArgument,
                                        "unknown schedule '" + c.schedule + "'");
  NeighborhoodSpec spec{c.k};

  // Population and cost source.
  std::vector<Assignment> population;
  std::shared_ptr<CostOracle::Table> table;
  std::optional<Circuit> circuit;
  NoiseModel nm = noise_model(c.noise);
  if (!c.table.empty()) {
    table = std::make_shared<CostOracle::Table>();
    for (const MetricsRecord& r : parse_sweep_csv(read_file(c.table))) {
      g.check(r.assignment);
      population.push_back(r.assignment);
      (*table)[r.assignment] = 1.0 - metric_of(r, c.metric);
    }
    if (population.empty()) throw Error(ErrorCode::kInsufficientData, "empty sweep table");
  } else {
    Population p = load_population(c.layout, c.circuit, 1000000);
    population = std::move(p.assignments);
    circuit = std::move(p.circuit);
  }
  auto make_oracle = [&]() {
    if (table) return CostOracle::from_table(table);
    return CostOracle([&](const Assignment& a) {
      return 1.0 - loschmidt_exact(*circuit, a, g, nm);
    });
  };

  const std::string trace_dir = join_path(c.out_dir, "traces");
  if (c.write_traces) fs::create_directories(trace_dir);
  std::vector<AnnealTrace> traces(c.trials);
  std::exception_ptr failure;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < c.trials; ++t) {
    try {
      Rng rng(c.seed, static_cast<uint64_t>(t), "anneal");
      CostOracle oracle = make_oracle();
      Assignment init = uniform_initial(population, rng);
      traces[t] = anneal(g, spec, oracle, schedule, c.steps, init, rng);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::string> outputs;
  if (c.write_traces) {
    for (int t = 0; t < c.trials; ++t) {
      char name[32];
      std::snprintf(name, sizeof(name), "trial_%05d.csv", t);
      std::ostringstream os;
      write_trace_csv(os, traces[t]);
      write_file(join_path(trace_dir, name), os.str());
      outputs.push_back(std::string("traces/") + name);
    }
  }

  // Best-of-n_s random sampling at each trial's n_s.
  CostOracle shared = make_oracle();
  std::ostringstream base_csv, sum_csv;
  base_csv << "trial,draw,n_s,best_score\n";
  sum_csv << "trial,n_s,best_score,best_path,baseline_mean_score\n";
  std::vector<double> sa_scores, base_means, diffs;
  for (int t = 0; t < c.trials; ++t) {
    const AnnealTrace& tr = traces[t];
    Rng rng(c.seed, static_cast<uint64_t>(t), "baseline");
    std::vector<double> best = random_baseline(shared, population, tr.n_s, c.baseline_draws, rng);
    double mean = 0;
    for (int d = 0; d < c.baseline_draws; ++d) {
      double score = 1.0 - best[d];
      mean += score / c.baseline_draws;
      base_csv << t << ',' << d << ',' << tr.n_s << ',' << format_double(score) << '\n';
    }
    double sa = 1.0 - tr.best_cost;
    sum_csv << t << ',' << tr.n_s << ',' << format_double(sa) << ',' << to_string(tr.best) << ','
            << format_double(mean) << '\n';
    sa_scores.push_back(sa);
    base_means.push_back(mean);
    diffs.push_back(sa - mean);
  }
  write_file(join_path(c.out_dir, "summary.csv"), sum_csv.str());
  write_file(join_path(c.out_dir, "baseline.csv"), base_csv.str());
  outputs.push_back("summary.csv");
  outputs.push_back("baseline.csv");

  auto mean_of = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  json out;
  out["trials"] = c.trials;
  out["metric"] = table ? c.metric : "F_LE";
  out["sa_mean_best"] = mean_of(sa_scores);
  out["baseline_mean_best"] = mean_of(base_means);
  out["improvement_mean"] = mean_of(diffs);
  out["relative_improvement"] = mean_of(diffs) / mean_of(base_means);
  std::vector<double> ns;
  for (const auto& tr : traces) ns.push_back(static_cast<double>(tr.n_s));
  out["n_s_mean"] = mean_of(ns);
  if (c.trials >= 2 && c.bootstrap >= 100) {
    Rng brng(c.seed, 0, "bootstrap");
    PairedSample d{diffs, diffs};
    out["improvement_bootstrap_std"] = bootstrap_std(
        [](const PairedSample& s) {
          double m = 0;
          for (double x : s.x) m += x;
          return m / static_cast<double>(s.size());
        },
        d, c.bootstrap, brng);
    Interval ci = bootstrap_mean_ci(diffs, c.bootstrap, 0.95, brng.substream(1u << 30));
    out["improvement_ci95"] = {ci.lo, ci.hi};
  }
  if (table) {
    double opt = std::numeric_limits<double>::infinity();
    for (const auto& [a, cost] : *table) opt = std::min(opt, cost);
    int hits = 0;
    // Tolerance absorbs rounding between exactly tied optima, such as both
    // orientations of a noiseless planted path.
    for (const auto& tr : traces) hits += tr.best_cost <= opt + kOptimumTolerance;
    out["optimum_score"] = 1.0 - opt;
    out["optimum_hit_rate"] = static_cast<double>(hits) / c.trials;
  }
  write_file(join_path(c.out_dir, "anneal.json"), out.dump(2) + "\n");
  outputs.push_back("anneal.json");
  return outputs;
}

std::vector<std::string> run_report(const ReportConfig& c) {
  require_out_dir(c.out_dir);
  std::vector<MetricsRecord> all = parse_sweep_csv(read_file(c.sweep));
  std::vector<MetricsRecord> rows;
  for (const auto& r : all) {
    if (!(c.drop_rejected && r.rejected)) rows.push_back(r);
  }
  if (rows.size() < 2) throw Error(ErrorCode::kInsufficientData, "report needs >= 2 sweep rows");

  std::vector<std::string> metrics = {"F_LE", "F0", "F_extrap"};
  bool has_rand = std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.has_rand; });
  bool has_sampled = std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.shots > 0; });
  if (has_rand) metrics.push_back("F_LE_rand_mean");
  if (has_sampled) metrics.push_back("F_LE_sampled");

  auto sample = [&](const std::string& m) {
    PairedSample s;
    for (const auto& r : rows) {
      s.x.push_back(metric_of(r, m));
      s.y.push_back(r.F);
    }
    return s;
  };
  json report;
  report["rows"] = rows.size();
  report["rejected"] = std::count_if(all.begin(), all.end(), [](auto& r) { return r.rejected; });
  std::ostringstream tau_csv, cond_csv, loc_csv;
  tau_csv << "metric,tau_b,bootstrap_std,n\n";
  cond_csv << "k";
  for (const auto& m : metrics) cond_csv << ',' << m;
  cond_csv << '\n';
  Rng rng(c.seed, 0, "report");
  for (size_t mi = 0; mi < metrics.size(); ++mi) {
    const std::string& m = metrics[mi];
    PairedSample s = sample(m);
    json entry;
    double tau = kNaN, sd = kNaN;
    try {
      tau = kendall_tau_b(s);
      if (c.bootstrap >= 100) {
        sd = bootstrap_std([](const PairedSample& r) { return kendall_tau_b(r); }, s,
                           c.bootstrap, rng.substream(mi));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAllTied && e.code() != ErrorCode::kInsufficientData) throw;
    }
    entry["tau_b"] = std::isnan(tau) ? json(nullptr) : json(tau);
    entry["bootstrap_std"] = std::isnan(sd) ? json(nullptr) : json(sd);
    report["tau_b"][m] = entry;
    tau_csv << m << ',' << format_double(tau) << ',' << format_double(sd) << ',' << s.size()
            << '\n';
  }
  for (int k = 5; k <= 95; k += 5) {
    cond_csv << k;
    for (const auto& m : metrics) {
      double p = kNaN;
      try {
        p = conditional_percentile_prob(sample(m), k);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptyCondition) throw;
      }
      cond_csv << ',' << format_double(p);
      report["conditional"][m].push_back(std::isnan(p) ? json(nullptr) : json(p));
    }
    cond_csv << '\n';
  }
  report["conditional_k"] = json::array();
  for (int k = 5; k <= 95; k += 5) report["conditional_k"].push_back(k);

  std::vector<std::string> outputs = {"tau.csv", "conditional.csv"};
  write_file(join_path(c.out_dir, "tau.csv"), tau_csv.str());
  write_file(join_path(c.out_dir, "conditional.csv"), cond_csv.str());
  if (!c.layout.empty()) {
    // Locality needs every neighbour, so it always uses the full sweep.
    NoiseGraph g = load_layout(c.layout);
    std::vector<Assignment> paths;
    std::vector<double> fle, f;
    for (const auto& r : all) {
      paths.push_back(r.assignment);
      fle.push_back(r.F_LE);
      f.push_back(r.F);
    }
    std::vector<double> loc_le = locality(g, paths, fle, c.ks);
    std::vector<double> loc_f = locality(g, paths, f, c.ks);
    loc_csv << "k,F_LE,F\n";
    for (size_t i = 0; i < c.ks.size(); ++i) {
      loc_csv << c.ks[i] << ',' << format_double(loc_le[i]) << ',' << format_double(loc_f[i])
              << '\n';
      report["locality"].push_back({{"k", c.ks[i]}, {"F_LE", loc_le[i]}, {"F", loc_f[i]}});
    }
    write_file(join_path(c.out_dir, "locality.csv"), loc_csv.str());
    outputs.push_back("locality.csv");
  }
  write_file(join_path(c.out_dir, "report.json"), report.dump(2) + "\n");
  outputs.push_back("report.json");
  return outputs;
}

std::vector<std::string> run_readout_demo(const ReadoutDemoConfig& c) {
  require_out_dir(c.out_dir);
  NoiseGraph g = NoiseGraph::grid(1, c.n);
  for (QubitId q : g.vertices()) g.set_eps(q, c.eps);
  for (const Edge& e : g.edges()) g.set_eta(e.a, e.b, c.eta);
  Assignment a;
  for (int i = 0; i < c.n; ++i) a.path.push_back(i);
  Circuit ghz = build_ghz(c.n);
  EchoResult echo = evaluate_echo(ghz, a, g, NoiseModel::local());
  DensityMatrix rho = run(ghz, a, g, NoiseModel::local());
  const uint64_t ones = (uint64_t{1} << c.n) - 1;

  struct Case {
    const char* name;
    ReadoutRates rates;
  };
  double mean = 0.5 * (c.p10 + c.p01);
  std::vector<Case> cases = {
      {"none", {0.0, 0.0}}, {"symmetric", {mean, mean}}, {"asymmetric", {c.p10, c.p01}}};
  std::ostringstream os;
  os << "scenario,p10,p01,F_LE,F_LE_observed,F_LE_corrected,ghz_population,"
        "ghz_population_observed\n";
  for (const Case& k : cases) {
    ConfusionMatrix cm;
    cm.rates.assign(c.n, k.rates);
    std::vector<double> obs_echo = apply_confusion(echo.echo_probs, cm);
    std::vector<double> pop = rho.diagonal();
    std::vector<double> obs_pop = apply_confusion(pop, cm);
    os << k.name << ',' << format_double(k.rates.p10) << ',' << format_double(k.rates.p01) << ','
       << format_double(echo.loschmidt) << ',' << format_double(obs_echo[0]) << ','
       << format_double(correct(obs_echo, cm)[0]) << ',' << format_double(pop[0] + pop[ones])
       << ',' << format_double(obs_pop[0] + obs_pop[ones]) << '\n';
  }
  write_file(join_path(c.out_dir, "readout_demo.csv"), os.str());
  return {"readout_demo.csv"};
}

namespace {

std::vector<std::string> input_paths(const std::string& command, const json& config) {
  std::vector<std::string> keys;
  if (command == "sweep") keys = {"layout"};
  if (command == "anneal") keys = {"layout", "table"};
  if (command == "report") keys = {"sweep", "layout"};
  std::vector<std::string> out;
  for (const auto& k : keys) {
    std::string v = config.value(k, std::string());
    if (!v.empty()) out.push_back(v);
  }
  if (config.contains("circuit") && config["circuit"].value("family", "") == "file") {
    out.push_back(config["circuit"].value("file", ""));
  }
  return out;
}

}  // namespace

void write_manifest(const std::string& command, const json& config, const std::string& out_dir,
                    const std::vector<std::string>& outputs) {
  json m;
  m["command"] = command;
  m["version"] = QASSIGN_VERSION;
  m["created_utc"] = utc_now();
  json cfg = config;
  cfg.erase("out_dir");
  m["config"] = cfg;
  m["seed"] = config.value("seed", uint64_t{0});
  m["inputs"] = json::array();
  for (const std::string& p : input_paths(command, config)) {
    m["inputs"].push_back({{"path", p}, {"sha256", sha256_hex(read_file(p))}});
  }
  m["outputs"] = json::array();
  for (const std::string& name : outputs) {
    std::string bytes = read_file(join_path(out_dir, name));
    m["outputs"].push_back({{"file", name}, {"sha256", sha256_hex(bytes)}, {"bytes", bytes.size()}});
  }
  write_file(join_path(out_dir, kManifestName), m.dump(2) + "\n");
}

std::vector<std::string> run_command(const std::string& command, const json& config) {
  if (command == "gen-noisemap") return run_gen_noisemap(config.get<GenNoisemapConfig>());
  if (command == "sweep") return run_sweep(config.get<SweepConfig>());
  if (command == "anneal") return run_anneal(config.get<AnnealConfig>());
  if (command == "report") return run_report(config.get<ReportConfig>());
  if (command == "readout-demo") return run_readout_demo(config.get<ReadoutDemoConfig>());
  throw Error(ErrorCode::kInvalidArgument, "unknown command '" + command + "'");
}

ReplayResult replay(const std::string& manifest_path, const std::string& out_dir) {
  json m;
  try {
    m = json::parse(read_file(manifest_path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("manifest: ") + e.what());
  }
  ReplayResult r;
  for (const auto& in : m.at("inputs")) {
    std::string p = in.at("path");
    if (sha256_hex(read_file(p)) != in.at("sha256").get<std::string>()) {
      r.identical = false;
      r.mismatched.push_back("input:" + p);
    }
  }
  json config = m.at("config");
  config["out_dir"] = out_dir;
  const std::string command = m.at("command");
  std::vector<std::string> produced = run_command(command, config);
  write_manifest(command, config, out_dir, produced);
  for (const auto& o : m.at("outputs")) {
    std::string name = o.at("file");
    std::string path = join_path(out_dir, name);
    if (!fs::exists(path) || sha256_hex(read_file(path)) != o.at("sha256").get<std::string>()) {
      r.identical = false;
      r.mismatched.push_back(name);
    }
  }
  return r;
}

}  // namespace qassign::cli
