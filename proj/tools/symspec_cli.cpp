#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "symspec/campaign.hpp"

using namespace symspec;

namespace {

void apply_thread_cap() {
  if (const char* env = std::getenv("SYMSPEC_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << body << "\n";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    if (comma > pos) out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

int cmd_verify(const CampaignConfig& cfg, const std::string& checks,
               const std::string& output, const std::string& input) {
  std::vector<std::string> families =
      checks.empty() ? check_family_names() : split_csv(checks);
  std::vector<CheckResult> results;
  std::unique_ptr<SymplecticSpace> sp;  // keeps the --input tuple's space alive
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file: " + input);
    json j = json::parse(in);
    sp = std::make_unique<SymplecticSpace>(j.at("n").get<std::size_t>(),
                                           FieldSpec::parse(j.at("field").get<std::string>()));
    CommutingTuple tuple = tuple_from_json(*sp, j);
    results = run_checks_on_tuple(families, tuple, cfg.max_total_degree);
  } else {
    for (const auto& family : families) {
      auto part = run_check_family(family, cfg);
      results.insert(results.end(), part.begin(), part.end());
    }
  }
  json report = report_to_json(results);
  report["config"] = json{{"n", cfg.n},       {"d", cfg.d},
                          {"field", cfg.field.to_string()},
                          {"seed", std::to_string(cfg.seed)},
                          {"samples", cfg.samples},
                          {"kind", cfg.kind}};
  // timestamps live only in metadata; the report body is config-deterministic
  report["metadata"] = json{{"generated_at", static_cast<long>(std::time(nullptr))}};
  write_output(output, report.dump(2));
  std::size_t failures = report.at("failures").get<std::size_t>();
  std::cerr << (failures == 0 ? "PASS" : "FAIL") << ": " << results.size() - failures
            << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

int cmd_sample(const CampaignConfig& cfg, const std::string& output) {
  SymplecticSpace sp(cfg.n, cfg.field);
  CommutingTuple t = sample_commuting(sp, cfg.d, cfg.seed, parse_sampler_kind(cfg.kind));
  write_output(output, tuple_to_json(t, cfg.kind, cfg.seed).dump(2));
  return 0;
}

int cmd_pfaffian(const std::string& input, const std::string& output) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open input file: " + input);
  Matrix<Scalar> m = matrix_from_json(json::parse(in));
  Scalar pf = pfaffian(m);  // verification mode: both kernels must agree
  Scalar d = det_eliminate(m);
  json out{{"pfaffian", pf.to_string()},
           {"det", d.to_string()},
           {"square_check", pf * pf == d}};
  write_output(output, out.dump(2));
  return out.at("square_check").get<bool>() ? 0 : 1;
}

int cmd_bench(const FieldSpec& field, std::uint64_t seed, std::size_t samples,
              const std::string& output) {
  std::ostringstream csv;
  csv << "algorithm,size,sample,seconds,agrees\n";
  struct Median { std::vector<double> v; double get() {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  } };
  bool ordering_ok = true;
  for (std::size_t dim = 4; dim <= 12; dim += 2) {
    Median t_match, t_elim;
    for (std::size_t s = 0; s < samples; ++s) {
      Rng rng(Rng::substream(seed, dim * 1000 + s).next());
      Matrix<Scalar> m = Matrix<Scalar>::zero(dim, Scalar::zero(field));
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
          Scalar e = Scalar::of_int(field, rng.range(-9, 9));
          m(i, j) = e;
          m(j, i) = -e;
        }
      auto time_it = [&](auto&& fn, Scalar& result) {
        auto t0 = std::chrono::steady_clock::now();
        result = fn();
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(t1 - t0).count();
      };
      Scalar r_serial(field), r_parallel(field), r_elim(field);
      double s_serial = time_it([&] { return pf_matching_serial(m); }, r_serial);
      double s_parallel = time_it([&] { return pf_matching(m); }, r_parallel);
      double s_elim = time_it([&] { return pf_eliminate(m); }, r_elim);
      bool agrees = r_serial == r_parallel && r_serial == r_elim;
      if (!agrees) {
        std::cerr << "FAIL: kernel disagreement at size " << dim << " sample " << s << "\n";
        return 2;
      }
      csv << "matching_serial," << dim << "," << s << "," << s_serial << "," << agrees << "\n";
      csv << "matching_parallel," << dim << "," << s << "," << s_parallel << "," << agrees << "\n";
      csv << "eliminate," << dim << "," << s << "," << s_elim << "," << agrees << "\n";
      t_match.v.push_back(s_serial);
      t_elim.v.push_back(s_elim);
    }
    // below size 10 both kernels finish in microseconds and the ordering is
    // noise; from size 10 on the factorial matching cost dominates cleanly
    if (!field.is_prime_field() && dim >= 10 && t_elim.get() >= t_match.get()) {
      std::cerr << "FAIL: elimination not faster than matching at size " << dim << "\n";
      ordering_ok = false;
    }
  }
  write_output(output, csv.str());
  return ordering_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"exact Pfaffian-norm and spectral-data verification toolkit"};
  app.require_subcommand(1);

  CampaignConfig cfg;
  std::string field_str = "q";
  std::string checks, output, input, kind = "conjugated_cartan";

  auto add_common = [&](CLI::App* sub, bool with_samples) {
    sub->add_option("--n", cfg.n, "symplectic rank (1..6)");
    sub->add_option("--d", cfg.d, "tuple arity");
    sub->add_option("--field", field_str, "base field: q | fp:<p>");
    sub->add_option("--seed", cfg.seed, "campaign seed");
    sub->add_option("--kind", kind, "sampler: conjugated_cartan|single_generator|nilpotent");
    sub->add_option("--output", output, "output file (stdout when omitted)");
    if (with_samples) sub->add_option("--samples", cfg.samples, "sample count");
  };

  CLI::App* verify = app.add_subcommand("verify", "run seeded check families");
  add_common(verify, true);
  verify->add_option("--checks", checks, "comma-separated family names (default: all)");
  verify->add_option("--input", input, "verify a dumped tuple JSON instead of sampling");
  verify->add_option("--max-degree", cfg.max_total_degree, "multi-index degree ceiling");

  CLI::App* sample = app.add_subcommand("sample", "dump a seeded commuting tuple");
  add_common(sample, false);

  CLI::App* pfaff = app.add_subcommand("pfaffian", "Pfaffian of a matrix JSON file");
  pfaff->add_option("input", input, "matrix JSON file")->required();
  pfaff->add_option("--output", output, "output file (stdout when omitted)");

  CLI::App* bench = app.add_subcommand("bench", "benchmark the Pfaffian kernels");
  add_common(bench, true);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.field = FieldSpec::parse(field_str);
    cfg.kind = kind;
    if (app.got_subcommand(verify)) {
      if (input.empty()) cfg.validate();
      return cmd_verify(cfg, checks, output, input);
    }
    if (app.got_subcommand(sample)) {
      cfg.validate();
      return cmd_sample(cfg, output);
    }
    if (app.got_subcommand(pfaff)) return cmd_pfaffian(input, output);
    if (app.got_subcommand(bench)) return cmd_bench(cfg.field, cfg.seed, cfg.samples, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
