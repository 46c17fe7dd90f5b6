#include "cfevt/runner/commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cfevt/cf/convergents.hpp"
#include "cfevt/cf/naive_trap.hpp"
#include "cfevt/cf/serialize.hpp"
#include "cfevt/errors.hpp"
#include "cfevt/evt/experiments.hpp"
#include "cfevt/evt/limits.hpp"
#include "cfevt/evt/rate.hpp"
#include "cfevt/measures/cusp.hpp"
#include "cfevt/measures/density.hpp"
#include "cfevt/measures/exact_measures.hpp"
#include "cfevt/measures/regions.hpp"
#include "cfevt/measures/scaling.hpp"
#include "cfevt/runner/manifest.hpp"

namespace cfevt {
namespace {

StationaryConfig stationary_config(const ExperimentConfig& c) {
  StationaryConfig s;
  s.seed = c.seed;
  s.count = c.samples;
  s.burn_in = c.burn_in;
  s.bits = c.sample_bits;
  s.workers = c.workers;
  return s;
}

// The HCCF scaling constant and where it came from.
struct ConstantSource {
  double C = 0;
  nlohmann::json provenance;
  std::optional<CuspConstants> record;  // set when read from a file
};

std::optional<ConstantSource> hccf_constant(const ExperimentConfig& c) {
  if (c.C) return ConstantSource{*c.C, {{"source", "flag"}, {"C", *c.C}}, std::nullopt};
  if (c.constants.empty()) return std::nullopt;
  std::ifstream in(c.constants);
  if (!in) throw InvalidArgument("cannot read constants file " + c.constants);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument("constants file is not valid JSON: " + std::string(ex.what()));
  }
  const auto k = cusp_constants_from_json(j);
  nlohmann::json prov = {{"source", c.constants},
                         {"sha256", sha256_file(c.constants)},
                         {"j_grid", k.j_grid},
                         {"samples", k.samples},
                         {"C_tilde", {{"value", k.C_tilde.value}, {"se", k.C_tilde.se}}},
                         {"C", {{"value", k.C().value}, {"se", k.C().se}}}};
  return ConstantSource{k.C().value, prov, k};
}

// Provenance of the HCCF constant goes to `prov`; null for real families.
ScalingFamily scaling_for(const ExperimentConfig& c, nlohmann::json& prov) {
  const Family f = parse_family(c.family);
  if (f != Family::hccf) return make_scaling(f);
  const auto cs = hccf_constant(c);
  if (!cs) throw MissingConstants("HCCF runs need --constants <constants.json> or --c");
  prov = cs->provenance;
  return make_scaling(f, cs->C);
}

void record_provenance(RunWriter& w, const nlohmann::json& prov) {
  if (!prov.is_null()) w.annotate("constants_provenance", prov);
}

BatchConfig batch_config(const ExperimentConfig& c, std::size_t n, std::vector<std::size_t> checkpoints) {
  BatchConfig b;
  b.family = parse_family(c.family);
  b.n = n;
  b.checkpoints = std::move(checkpoints);
  b.samples = c.samples;
  b.seed = c.seed;
  b.keep = 16;
  for (std::size_t m : b.checkpoints) b.keep = std::min(b.keep, m);
  b.keep = std::min(b.keep, n);
  b.workers = c.workers;
  b.p0 = c.precision;
  return b;
}

CommandResult cmd_expand(const ExperimentConfig& c) {
  const Family f = parse_family(c.family);
  const AnySource src = f == Family::hccf ? AnySource(ComplexSource::parse(c.input))
                                          : AnySource(RealSource::parse(c.input));
  const Expansion e = expand(f, src, c.digits, c.precision);
  RunWriter w(c, c.output_dir);
  const std::size_t bits = c.precision.value_or(default_initial_bits(c.digits));
  w.write_json("expansion.json", expansion_to_json(e, {c.input, bits}));

  std::ostringstream csv;
  nlohmann::json digits = nlohmann::json::array();
  if (const auto* r = std::get_if<RcfExpansion>(&e)) {
    csv << "index,digit\n";
    csv << "0," << r->a0 << "\n";
    for (std::size_t i = 0; i < r->digits.size(); ++i) csv << i + 1 << ',' << r->digits[i] << "\n";
    digits = r->digits;
  } else if (const auto* n = std::get_if<NicfExpansion>(&e)) {
    csv << "index,b,eps,signed\n";
    csv << "0," << n->a0 << ",,\n";
    const auto sd = n->signed_digits();
    for (std::size_t i = 0; i < n->b.size(); ++i) {
      csv << i + 1 << ',' << n->b[i] << ',' << n->eps[i] << ',' << sd[i] << "\n";
    }
    digits = n->b;
  } else {
    const auto& h = std::get<HccfExpansion>(e);
    csv << "index,re,im,digit\n";
    csv << "0," << h.a0.re << ',' << h.a0.im << ',' << to_string(h.a0) << "\n";
    for (std::size_t i = 0; i < h.digits.size(); ++i) {
      const auto& g = h.digits[i];
      csv << i + 1 << ',' << g.re << ',' << g.im << ',' << to_string(g) << "\n";
      digits.push_back(to_string(g));
    }
  }
  w.write_text("digits.csv", csv.str());
  w.finish();
  return {{{"family", c.family},
           {"input", c.input},
           {"digits", digits},
           {"status", std::string(to_string(status_of(e)))}},
          w.dir()};
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream sc;
  sc << "n,u,n_tail,tau,deviation\n";
  for (const auto& row : rows) {
    sc << row.n << ',' << fmt17(row.u) << ',' << fmt17(row.n_tail) << ',' << fmt17(row.tau) << ','
       << fmt17(row.deviation) << "\n";
  }
  return sc.str();
}

CommandResult cmd_tail(const ExperimentConfig& c) {
  const Family f = parse_family(c.family);
  std::vector<double> js = c.tail_j;
  if (js.empty()) js = {2, 5, 10, 20, 40, 80, 160};
  std::sort(js.begin(), js.end());
  const double r = c.r_grid.front();
  std::ostringstream csv;
  std::string scaling;
  nlohmann::json summary = {{"family", c.family}}, prov;
  if (f != Family::hccf) {
    const auto curve = exact_tail_curve(f, js);
    csv << "j,tail\n";
    for (std::size_t i = 0; i < js.size(); ++i) csv << fmt17(js[i]) << ',' << fmt17(curve.tail[i]) << "\n";
    if (!c.n_grid.empty()) scaling = scaling_csv(scaling_check(f, r, c.n_grid));
  } else {
    std::optional<ConstantSource> cs;
    if (!c.n_grid.empty()) {
      if (!c.constants.empty()) cs = hccf_constant(c);
      if (!cs || !cs->record) throw MissingConstants("HCCF scaling table needs --constants");
      prov = cs->provenance;
    }
    EmpiricalTail tail(0.0);
    for_each_stationary_chunk(stationary_config(c), [&](std::span<const StationarySample> s) {
      for (const auto& x : s) tail.add(x.a1.modulus());
    });
    tail.finalize();
    csv << "j,tail,j2_tail\n";
    for (double j : js) {
      const double t = tail.tail(j);
      csv << fmt17(j) << ',' << fmt17(t) << ',' << fmt17(j * j * t) << "\n";
    }
    summary["samples"] = tail.total();
    if (cs) scaling = scaling_csv(scaling_check(f, r, c.n_grid, &*cs->record, &tail));
  }
  RunWriter w(c, c.output_dir);
  record_provenance(w, prov);
  w.write_text("tail.csv", csv.str());
  if (!scaling.empty()) w.write_text("scaling.csv", scaling);
  w.finish();
  return {summary, w.dir()};
}

CommandResult cmd_density(const ExperimentConfig& c) {
  DensityGrid grid(c.resolution);
  RegionCounts regions{};
  std::vector<std::complex<double>> zs;
  for_each_stationary_chunk(stationary_config(c), [&](std::span<const StationarySample> s) {
    zs.clear();
    for (const auto& x : s) zs.push_back(x.z);
    grid.add(zs);
    const auto rc = region_counts(zs);
    for (std::size_t i = 0; i < rc.size(); ++i) regions[i] += rc[i];
  });
  RunWriter w(c, c.output_dir);
  w.write_text("density.csv", grid.to_csv());
  const auto header = grid.header_json(c.seed, c.burn_in);
  w.write_json("density_header.json", header);
  std::ostringstream rcsv;
  rcsv << "region,count\n";
  for (std::size_t i = 1; i < regions.size(); ++i) rcsv << "A" << i << ',' << regions[i] << "\n";
  rcsv << "boundary," << regions[0] << "\n";
  w.write_text("regions.csv", rcsv.str());
  const double defect = symmetry_defect(grid);
  nlohmann::json summary = {{"schema_version", kManifestSchemaVersion},
                            {"samples", grid.total()},
                            {"resolution", c.resolution},
                            {"symmetry_defect", defect},
                            {"min_cell_count", grid.min_count()}};
  w.write_json("summary.json", summary);
  w.finish();
  return {summary, w.dir()};
}

CommandResult cmd_constants(const ExperimentConfig& c) {
  const std::vector<double> check_j = {10, 20, 40};
  CuspAccumulator acc(c.j_grid, check_j.front());
  for_each_stationary_chunk(stationary_config(c), [&](std::span<const StationarySample> s) { acc.add(s); });
  acc.tail().finalize();
  const CuspConstants k = estimate_cusp_constants(acc);
  RunWriter w(c, c.output_dir);
  auto j = to_json(k);
  j["burn_in"] = c.burn_in;
  j["seed"] = c.seed;
  std::ostringstream csv;
  csv << "j,tail,j2_tail\n";
  double h_tail = 0;
  for (double jj : check_j) {
    const double t = acc.tail().tail(jj);
    h_tail += jj * jj * t / static_cast<double>(check_j.size());
    csv << fmt17(jj) << ',' << fmt17(t) << ',' << fmt17(jj * jj * t) << "\n";
  }
  j["H_from_tail"] = h_tail;
  w.write_json("constants.json", j);
  w.write_text("tail_check.csv", csv.str());
  w.finish();
  return {j, w.dir()};
}

CommandResult cmd_evl(const ExperimentConfig& c) {
  nlohmann::json prov;
  const ScalingFamily sf = scaling_for(c, prov);
  const auto batch = generate_batch(batch_config(c, c.n, {}));
  const auto rep = run_evl_experiment(batch.at(c.n), c.n, sf, c.r_grid, c.k);
  std::ostringstream csv;
  csv << "r,u,empirical,limit,se,deviation\n";
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rep.rows) {
    csv << fmt17(row.r) << ',' << fmt17(row.u) << ',' << fmt17(row.empirical) << ',' << fmt17(row.limit)
        << ',' << fmt17(row.se) << ',' << fmt17(row.deviation) << "\n";
    rows.push_back({{"r", row.r}, {"empirical", row.empirical}, {"limit", row.limit}, {"se", row.se}});
  }
  RunWriter w(c, c.output_dir);
  record_provenance(w, prov);
  w.write_text("evl.csv", csv.str());
  nlohmann::json summary = {{"family", c.family}, {"n", c.n},     {"samples", c.samples},
                            {"k", c.k},           {"ks", rep.ks}, {"rows", rows}};
  w.finish();
  return {summary, w.dir()};
}

CommandResult cmd_poisson(const ExperimentConfig& c) {
  nlohmann::json prov;
  const ScalingFamily sf = scaling_for(c, prov);
  const auto batch = generate_batch(batch_config(c, c.n, {}));
  const double r = c.r_grid.front();
  const auto rep = run_poisson_experiment(batch.at(c.n), c.n, sf, r, c.j_max, sf.family);
  std::ostringstream csv;
  csv << "j,observed,expected\n";
  for (std::size_t j = 0; j < rep.observed.size(); ++j) {
    csv << (j + 1 == rep.observed.size() ? ">=" + std::to_string(j) : std::to_string(j)) << ','
        << rep.observed[j] << ',' << fmt17(rep.expected[j]) << "\n";
  }
  RunWriter w(c, c.output_dir);
  record_provenance(w, prov);
  w.write_text("poisson.csv", csv.str());
  nlohmann::json summary = {{"family", c.family},
                            {"n", c.n},
                            {"samples", c.samples},
                            {"r", r},
                            {"tau", rep.tau},
                            {"chi_square", rep.chi.statistic},
                            {"dof", rep.chi.dof},
                            {"p_value", rep.chi.p_value},
                            {"frac_no_exceedance", rep.frac_no_exceedance},
                            {"frac_max_below", rep.frac_max_below}};
  w.finish();
  return {summary, w.dir()};
}

CommandResult cmd_rate(const ExperimentConfig& c) {
  nlohmann::json prov;
  const ScalingFamily sf = scaling_for(c, prov);
  std::vector<std::size_t> grid = c.n_grid;
  if (grid.empty()) grid = {256, 1024, 8192};
  std::sort(grid.begin(), grid.end());
  const auto batch = generate_batch(batch_config(c, grid.back(), grid));
  const double r = c.r_grid.front();
  const auto rows = rate_curve(batch, sf, r, c.theta);
  std::ostringstream csv;
  csv << "n,empirical,limit,deviation,l_n,envelope\n";
  std::vector<double> dev;
  for (const auto& row : rows) {
    csv << row.n << ',' << fmt17(row.empirical) << ',' << fmt17(row.limit) << ',' << fmt17(row.deviation)
        << ',' << fmt17(row.l_n) << ',' << fmt17(row.envelope) << "\n";
    dev.push_back(row.deviation);
  }
  RunWriter w(c, c.output_dir);
  record_provenance(w, prov);
  w.write_text("rate.csv", csv.str());
  nlohmann::json summary = {{"family", c.family},
                            {"r", r},
                            {"deviations", dev},
                            {"majority_nonincreasing", majority_nonincreasing(dev)}};
  w.finish();
  return {summary, w.dir()};
}

CommandResult cmd_demo_naive(const ExperimentConfig& c) {
  std::ostringstream csv;
  csv << "point,re,im,iterations,all_minus_i,violation\n";
  std::size_t violations = 0, all_minus_i = 0;
  for (std::size_t p = 0; p < c.points; ++p) {
    const auto z = sample_trap_region({c.seed, p});
    std::string violation;
    std::size_t iters = 0;
    bool minus_i = false;
    try {
      const auto rep = naive_complex_trap(z, c.iters);
      iters = rep.iterations;
      minus_i = rep.all_minus_i;
    } catch (const RegionViolation& e) {
      violation = e.what();
      ++violations;
    }
    all_minus_i += minus_i;
    csv << p << ',' << fmt17(z.re.get_d()) << ',' << fmt17(z.im.get_d()) << ',' << iters << ','
        << (minus_i ? "true" : "false") << ",\"" << violation << "\"\n";
  }
  RunWriter w(c, c.output_dir);
  w.write_text("naive.csv", csv.str());
  w.finish();
  return {{{"points", c.points}, {"iters", c.iters}, {"violations", violations}, {"all_minus_i", all_minus_i}},
          w.dir()};
}

}  // namespace

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json error_json(const std::exception& e) {
  if (const auto* ce = dynamic_cast<const Error*>(&e)) return {{"error", ce->kind()}, {"message", ce->what()}};
  return {{"error", "internal"}, {"message", e.what()}};
}

CommandResult run_command(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::string& cmd = cfg.command;
  if (cmd == "expand") return cmd_expand(cfg);
  if (cmd == "tail") return cmd_tail(cfg);
  if (cmd == "density") return cmd_density(cfg);
  if (cmd == "constants") return cmd_constants(cfg);
  if (cmd == "evl") return cmd_evl(cfg);
  if (cmd == "poisson") return cmd_poisson(cfg);
  if (cmd == "rate") return cmd_rate(cfg);
  return cmd_demo_naive(cfg);
}

}  // namespace cfevt
