#include "linkq/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "linkq/edge_list.hpp"
#include "linkq/graph_stats.hpp"
#include "linkq/svg.hpp"

namespace linkq {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("invalid " + what + " '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("invalid " + what + " '" + text + "'");
}

std::string real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return std::nan("");
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// Runs grouped by label, in first-appearance order.
std::vector<std::pair<std::string, std::vector<const RunResult*>>> group_runs(const ExperimentResult& result) {
  std::vector<std::pair<std::string, std::vector<const RunResult*>>> groups;
  for (const auto& run : result.runs) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == run.label; });
    if (it == groups.end()) {
      groups.emplace_back(run.label, std::vector<const RunResult*>{});
      it = groups.end() - 1;
    }
    it->second.push_back(&run);
  }
  return groups;
}

}  // namespace

void apply_config_value(ExperimentConfig& config, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "graph") {
    config.graph_path = value;
  } else if (key == "gen") {
    config.generator = value;
  } else if (key == "gen_seed") {
    config.generator_seed = parse_u64(value, "gen_seed");
  } else if (key == "strategy") {
    std::stringstream parts(value);
    std::string item;
    while (std::getline(parts, item, ',')) {
      if (!trim(item).empty()) config.strategies.push_back(trim(item));
    }
  } else if (key == "budget") {
    config.budget = value;
  } else if (key == "seeds") {
    config.seeds = parse_seeds(value);
  } else if (key == "stride") {
    config.stride = parse_u64(value, "stride");
  } else if (key == "jobs") {
    config.jobs = static_cast<unsigned>(parse_u64(value, "jobs"));
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else if (key == "svg") {
    config.svg = parse_bool(value, "svg");
  } else if (key == "tbf_dynamic") {
    config.tbf_dynamic = parse_bool(value, "tbf_dynamic");
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  ExperimentConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_config_value(config, trim(body.substr(0, eq)), body.substr(eq + 1));
    } catch (const std::exception& e) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parse_config(in, path.string());
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const std::uint64_t base = parse_u64(trim(text.substr(0, colon)), "seed base");
    const std::uint64_t count = parse_u64(trim(text.substr(colon + 1)), "seed count");
    for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(base + i);
    return seeds;
  }
  std::stringstream parts(text);
  std::string item;
  while (std::getline(parts, item, ',')) seeds.push_back(parse_u64(trim(item), "seed"));
  return seeds;
}

std::uint64_t resolve_budget(const std::string& text, std::uint64_t total_pairs) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("budget is required");
  if (t.back() == '%') {
    const std::string number = t.substr(0, t.size() - 1);
    double pct = 0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), pct);
    if (number.empty() || ec != std::errc{} || ptr != number.data() + number.size() || !(pct > 0)) {
      throw ConfigError("invalid budget '" + text + "'");
    }
    const auto q = static_cast<std::uint64_t>(std::floor(pct / 100.0 * static_cast<double>(total_pairs)));
    return std::max<std::uint64_t>(q, 1);
  }
  const std::uint64_t q = parse_u64(t, "budget");
  if (q < 1) throw ConfigError("budget must be at least 1");
  return q;
}

void validate(const ExperimentConfig& config) {
  if (config.strategies.empty()) throw ConfigError("at least one strategy is required");
  if (config.graph_path.has_value() == config.generator.has_value()) {
    throw ConfigError("exactly one of graph and gen must be given");
  }
  if (config.seeds.empty()) throw ConfigError("at least one seed is required");
  if (config.stride < 1) throw ConfigError("stride must be at least 1");
  if (config.jobs < 1) throw ConfigError("jobs must be at least 1");
  if (config.budget.empty()) throw ConfigError("budget is required");
  for (const auto& s : config.strategies) {
    try {
      parse_strategy(s);
    } catch (const StrategyError& e) {
      throw ConfigError(e.what());
    }
  }
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> downsample(const MeasurementTrace& trace,
                                                                std::uint64_t stride) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> points;
  const std::uint64_t length = trace.cumulative.size();
  for (std::uint64_t q = stride; q <= length; q += stride) points.emplace_back(q, trace.cumulative[q - 1]);
  if (length > 0 && (points.empty() || points.back().first != length)) {
    points.emplace_back(length, trace.cumulative[length - 1]);
  }
  return points;
}

void write_trace_header(std::ostream& out) { out << "strategy,seed,q,m_prime\n"; }

void write_trace_rows(std::ostream& out, const std::string& strategy, std::uint64_t seed,
                      const std::vector<std::pair<std::uint64_t, std::uint32_t>>& points) {
  for (const auto& [q, m] : points) out << strategy << ',' << seed << ',' << q << ',' << m << '\n';
}

std::vector<TraceRow> read_trace_csv(std::istream& in) {
  std::vector<TraceRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "strategy,seed,q,m_prime") throw std::runtime_error("trace CSV: unexpected header '" + line + "'");
      continue;
    }
    std::stringstream parts(line);
    std::string strategy, seed, q, m;
    if (!std::getline(parts, strategy, ',') || !std::getline(parts, seed, ',') || !std::getline(parts, q, ',') ||
        !std::getline(parts, m)) {
      throw std::runtime_error("trace CSV line " + std::to_string(line_no) + ": expected 4 fields");
    }
    rows.push_back({strategy, parse_u64(seed, "seed"), parse_u64(q, "q"),
                    static_cast<std::uint32_t>(parse_u64(m, "m_prime"))});
  }
  return rows;
}

std::pair<Graph, std::vector<std::string>> load_graph(const ExperimentConfig& config) {
  if (config.graph_path) {
    LoadedGraph loaded = load_edge_list(*config.graph_path);
    return {std::move(loaded.graph), std::move(loaded.labels)};
  }
  if (config.generator) return {generate(parse_generator(*config.generator, config.generator_seed)), {}};
  throw ConfigError("no graph source given");
}

ExperimentResult run_experiment_in_memory(const ExperimentConfig& config) {
  validate(config);
  ExperimentResult result;
  std::tie(result.graph, result.labels) = load_graph(config);
  const Graph& g = result.graph;
  result.budget = resolve_budget(config.budget, pair_count(g.node_count()));

  std::vector<StrategySpec> specs;
  for (const auto& text : config.strategies) {
    for (std::uint64_t seed : config.seeds) {
      StrategySpec spec = parse_strategy(text);
      spec.budget = result.budget;
      spec.seed = seed;
      spec.tbf_dynamic_order = config.tbf_dynamic;
      specs.push_back(spec);
    }
  }
  result.runs.resize(specs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      RunResult& run = result.runs[i];
      run.spec = specs[i];
      run.label = specs[i].label();
      MeasurementState state = run_strategy_state(g, specs[i]);
      run.sample = sample_stats(state);
      run.trace = state.take_trace();
      pad_trace(run.trace, specs[i].budget);
      try {
        run.report = build_report(run.trace, g, specs[i].budget);
      } catch (const MetricsError&) {
        run.report_valid = false;
        run.report.q = specs[i].budget;
        run.report.m_prime_final = run.trace.final_links();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(config.jobs, std::max<std::size_t>(specs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return result;
}

void write_report_csv(std::ostream& out, const ExperimentResult& result) {
  out << "strategy,k,q,m_prime,pct_tested,pct_found,eff_norm,eff_rel\n";
  for (const auto& [label, runs] : group_runs(result)) {
    std::vector<double> m, tested, found, norm, rel;
    for (const RunResult* r : runs) {
      m.push_back(static_cast<double>(r->report.m_prime_final));
      tested.push_back(r->report.pct_pairs_tested);
      found.push_back(r->report.pct_links_found);
      norm.push_back(r->report_valid ? r->report.normalized : std::nan(""));
      rel.push_back(r->report_valid ? r->report.relative : std::nan(""));
    }
    const StrategySpec& spec = runs.front()->spec;
    out << spec.name() << ',' << (spec.k == kUnboundedK ? std::string("inf") : std::to_string(spec.k)) << ','
        << result.budget << ',' << real(mean_of(m)) << ',' << real(mean_of(tested)) << ',' << real(mean_of(found))
        << ',' << real(mean_of(norm)) << ',' << real(mean_of(rel)) << '\n';
  }
}

void write_bias_csv(std::ostream& out, const GraphStats& reference,
                    const std::vector<std::pair<std::string, std::vector<SampleStats>>>& samples) {
  out << "strategy,m_prime,n_prime,density,avg_deg,max_deg,cc,tr\n";
  out << "reference," << reference.edge_count << ',' << reference.node_count << ',' << real(reference.density) << ','
      << real(reference.avg_degree) << ',' << reference.max_degree << ',' << real(reference.clustering) << ','
      << real(reference.transitivity) << '\n';
  for (const auto& [label, stats] : samples) {
    std::vector<double> m, n, d, avg, mx, cc, tr;
    for (const SampleStats& s : stats) {
      m.push_back(static_cast<double>(s.m_prime));
      n.push_back(static_cast<double>(s.n_prime));
      d.push_back(s.density);
      avg.push_back(s.avg_degree);
      mx.push_back(static_cast<double>(s.max_degree));
      cc.push_back(s.clustering);
      tr.push_back(s.transitivity);
    }
    out << label << ',' << real(mean_of(m)) << ',' << real(mean_of(n)) << ',' << real(mean_of(d)) << ','
        << real(mean_of(avg)) << ',' << real(mean_of(mx)) << ',' << real(mean_of(cc)) << ',' << real(mean_of(tr))
        << '\n';
  }
}

namespace {

std::vector<CurveSeries> mean_curves(const ExperimentResult& result, std::uint64_t stride) {
  std::vector<CurveSeries> curves;
  for (const auto& [label, runs] : group_runs(result)) {
    CurveSeries series{label, {}};
    for (const RunResult* r : runs) {
      const auto points = downsample(r->trace, stride);
      if (series.points.empty()) {
        for (const auto& [q, m] : points) series.points.emplace_back(q, 0.0);
      }
      for (std::size_t i = 0; i < points.size(); ++i) series.points[i].second += points[i].second;
    }
    for (auto& p : series.points) p.second /= static_cast<double>(runs.size());
    curves.push_back(std::move(series));
  }
  return curves;
}

std::vector<std::pair<std::string, std::vector<SampleStats>>> samples_by_label(const ExperimentResult& result) {
  std::vector<std::pair<std::string, std::vector<SampleStats>>> out;
  for (const auto& [label, runs] : group_runs(result)) {
    std::vector<SampleStats> stats;
    for (const RunResult* r : runs) stats.push_back(r->sample);
    out.emplace_back(label, std::move(stats));
  }
  return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_mean_trace_csv(std::ostream& out, const ExperimentResult& result, std::uint64_t stride) {
  out << "strategy,q,m_prime_mean\n";
  for (const auto& series : mean_curves(result, stride)) {
    for (const auto& [q, m] : series.points) out << series.name << ',' << q << ',' << real(m) << '\n';
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result = run_experiment_in_memory(config);
  std::filesystem::create_directories(config.out_dir);
  {
    auto out = open_output(config.out_dir / "trace.csv");
    write_trace_header(out);
    for (const auto& run : result.runs) write_trace_rows(out, run.label, run.spec.seed, downsample(run.trace, config.stride));
  }
  {
    auto out = open_output(config.out_dir / "mean_trace.csv");
    write_mean_trace_csv(out, result, config.stride);
  }
  {
    auto out = open_output(config.out_dir / "report.csv");
    write_report_csv(out, result);
  }
  {
    auto out = open_output(config.out_dir / "bias.csv");
    write_bias_csv(out, graph_stats(result.graph), samples_by_label(result));
  }
  if (!result.labels.empty()) {
    auto out = open_output(config.out_dir / "labels.csv");
    write_label_table(out, result.labels);
  }
  if (config.svg) {
    auto out = open_output(config.out_dir / "curves.svg");
    write_svg_chart(out, mean_curves(result, config.stride), "links discovered vs. link queries");
  }
  return result;
}

std::vector<std::pair<std::string, std::vector<SampleStats>>> replay_samples(const Graph& g,
                                                                             const std::vector<TraceRow>& rows,
                                                                             bool tbf_dynamic) {
  // (label, seed) -> saved rows, in first-appearance order.
  std::vector<std::pair<std::pair<std::string, std::uint64_t>, std::vector<const TraceRow*>>> runs;
  for (const TraceRow& row : rows) {
    const auto key = std::pair{row.strategy, row.seed};
    auto it = std::find_if(runs.begin(), runs.end(), [&](const auto& r) { return r.first == key; });
    if (it == runs.end()) {
      runs.push_back({key, {}});
      it = runs.end() - 1;
    }
    it->second.push_back(&row);
  }

  std::vector<std::pair<std::string, std::vector<SampleStats>>> out;
  for (const auto& [key, saved] : runs) {
    StrategySpec spec = parse_strategy(key.first);
    spec.seed = key.second;
    spec.tbf_dynamic_order = tbf_dynamic;
    spec.budget = 0;
    for (const TraceRow* r : saved) spec.budget = std::max(spec.budget, r->q);
    MeasurementState state = run_strategy_state(g, spec);
    MeasurementTrace trace = state.trace();
    pad_trace(trace, spec.budget);
    for (const TraceRow* r : saved) {
      if (r->q < 1 || trace.cumulative[r->q - 1] != r->m_prime) {
        throw std::runtime_error("replay of " + key.first + " seed " + std::to_string(key.second) +
                                 " disagrees with the saved trace at q=" + std::to_string(r->q) +
                                 " (wrong graph or options?)");
      }
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == key.first; });
    if (it == out.end()) {
      out.emplace_back(key.first, std::vector<SampleStats>{});
      it = out.end() - 1;
    }
    it->second.push_back(sample_stats(state));
  }
  return out;
}

}  // namespace linkq
