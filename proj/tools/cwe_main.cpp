#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cwe/closed_forms.hpp"
#include "cwe/report.hpp"
#include "cwe/verify.hpp"

namespace {

using namespace cwe;

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open output file '" + path + "'");
  out << payload;
}

struct ComputeOptions {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t d = 1;
  std::string code = "cd";
  std::string method = "both";
  std::string format = "text";
  std::string out;
  bool selftest_perturb = false;
};

CodeVariant variant_from_flag(const std::string& code) {
  if (code == "cd") return CodeVariant::CD;
  if (code == "cdb") return CodeVariant::CDb;
  throw ParameterError("--code must be cd or cdb");
}

std::string format_report(const RunReport& report, const std::string& format) {
  if (format == "text") return render_text(report);
  if (format == "json") return render_json(report);
  if (format == "latex") return render_latex(report);
  throw ParameterError("--format must be text, json or latex");
}

int run_compute(const ComputeOptions& opt) {
  const auto t0 = now_ms();
  const CodeVariant variant = variant_from_flag(opt.code);
  const ComputeMethod method = method_from_name(opt.method);
  const CodeSpec spec(opt.p, opt.m, opt.d, variant);
  const auto ctx = FieldContext::build(opt.p, opt.m);

  auto formula = [&] {
    return variant == CodeVariant::CD ? predicted_cwe_cd(opt.p, opt.m)
                                      : predicted_cwe_cdb(opt.p, opt.m);
  };

  RunReport report;
  if (method == ComputeMethod::Brute) {
    report = build_report(ctx, spec, brute_force_cwe(ctx, spec), method, std::nullopt,
                          now_ms() - t0);
  } else if (method == ComputeMethod::Formula) {
    report = build_report(ctx, spec, formula(), method, std::nullopt, now_ms() - t0);
  } else {
    const auto brute = brute_force_cwe(ctx, spec);
    auto predicted = formula();
    if (opt.selftest_perturb && !predicted.terms().empty()) {
      // Self-test hook for the mismatch path: bump one multiplicity.
      predicted.add(predicted.terms().begin()->first, 1);
    }
    if (!(brute == predicted)) {
      std::cerr << "E_MISMATCH: brute-force and closed-form enumerators differ for "
                << variant_name(variant) << " p=" << opt.p << " m=" << opt.m << "\n"
                << render_term_diff(brute, predicted);
      return 1;
    }
    report = build_report(ctx, spec, brute, method, true, now_ms() - t0);
  }
  write_output(opt.out, format_report(report, opt.format));
  return 0;
}

struct TablesOptions {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t d = 1;
  std::string code = "cd";
  std::string format = "text";
  std::string out;
};

int run_tables(const TablesOptions& opt) {
  const CodeVariant variant = variant_from_flag(opt.code);
  const CodeSpec spec(opt.p, opt.m, opt.d, variant);
  (void)spec;
  const WeightDistribution wd = variant == CodeVariant::CD ? predicted_wd_cd(opt.p, opt.m)
                                                           : predicted_wd_cdb(opt.p, opt.m);
  std::string payload;
  if (opt.format == "text")
    payload = render_table_text(wd);
  else if (opt.format == "csv")
    payload = render_table_csv(wd);
  else if (opt.format == "latex")
    payload = render_table_latex(wd);
  else
    throw ParameterError("--format must be text, latex or csv");
  write_output(opt.out, payload);
  return 0;
}

struct VerifyOptions {
  std::string p_set = "3,5,7,11";
  int m_max = 6;
  std::int64_t cap = 200000;
  std::string suite = "all";
  int jobs = 0;
};

enum class LineStatus { Pass, Fail, Skip, Report };
struct CheckLine {
  LineStatus status;
  std::string text;
};

std::vector<std::int64_t> parse_p_set(const std::string& arg) {
  std::vector<std::int64_t> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(item, &pos);
    if (pos != item.size()) throw ParameterError("bad --p-set entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParameterError("--p-set must name at least one prime");
  return out;
}

std::vector<CheckLine> lines_from(const SuiteResult& r, const std::string& name) {
  std::vector<CheckLine> lines;
  if (r.ok) {
    lines.push_back({LineStatus::Pass, name + " (" + std::to_string(r.checks) + " checks)"});
  } else {
    std::string detail = name;
    for (const auto& f : r.failures) detail += "\n    " + f;
    lines.push_back({LineStatus::Fail, detail});
  }
  for (const auto& note : r.notes) lines.push_back({LineStatus::Report, note});
  return lines;
}

int run_verify(const VerifyOptions& opt) {
  const auto p_set = parse_p_set(opt.p_set);
  for (auto p : p_set)
    if (p < 3 || p % 2 == 0 || !is_prime(p))
      throw ParameterError("--p-set entries must be odd primes, got " + std::to_string(p));
  if (opt.m_max < 2) throw ParameterError("--m-max must be >= 2");
  const bool run_cwe = opt.suite == "cwe" || opt.suite == "all";
  const bool run_lemmas = opt.suite == "lemmas" || opt.suite == "all";
  if (!run_cwe && !run_lemmas) throw ParameterError("--suite must be cwe, lemmas or all");
  int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  auto in_cap = [&](std::int64_t p, int m) {
    std::int64_t v = 1;
    for (int i = 0; i < m; ++i) {
      v *= p;
      if (v > opt.cap) return false;
    }
    return true;
  };

  std::vector<std::function<std::vector<CheckLine>()>> tasks;

  if (run_cwe) {
    for (auto p : p_set)
      for (int m = 2; m <= opt.m_max; ++m) {
        const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m);
        if (!in_cap(p, m)) {
          tasks.push_back([tag] {
            return std::vector<CheckLine>{{LineStatus::Skip, "cwe " + tag + " (above cap)"}};
          });
          continue;
        }
        tasks.push_back([p, m, tag] {
          const auto rep = check_code_point(p, m, 1);
          std::vector<CheckLine> lines;
          auto push = [&](const SuiteResult& r, const std::string& name) {
            auto ls = lines_from(r, name + " " + tag);
            lines.insert(lines.end(), ls.begin(), ls.end());
          };
          push(rep.equivalence, "cwe brute==formula");
          push(rep.consistency, "weight-tables");
          push(rep.conservation, "conservation");
          push(rep.d_invariance, "d-invariance");
          lines.push_back({LineStatus::Report,
                           "cdb-weights " + tag + " nonzero=" +
                               std::to_string(rep.cdb_nonzero_weights) + " bound=" +
                               std::to_string(rep.cdb_weight_bound)});
          return lines;
        });
      }
  }

  if (run_lemmas) {
    for (auto p : p_set) {
      for (int m = 1; m <= 4; ++m) {
        const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m);
        if (!in_cap(p, m)) {
          tasks.push_back([tag] {
            return std::vector<CheckLine>{
                {LineStatus::Skip, "gauss-square " + tag + " (above cap)"},
                {LineStatus::Skip, "square-trace-sum " + tag + " (above cap)"}};
          });
          continue;
        }
        tasks.push_back([p, m, tag] {
          std::vector<CheckLine> lines;
          auto g = lines_from(check_gauss_point(p, m), "gauss-square " + tag);
          auto s = lines_from(check_square_trace_point(p, m), "square-trace-sum " + tag);
          lines.insert(lines.end(), g.begin(), g.end());
          lines.insert(lines.end(), s.begin(), s.end());
          return lines;
        });
      }
      // Quadratic exponential sums: exhaustive up to order 81, sampled to 243.
      for (int m = 1; m <= opt.m_max; ++m) {
        std::int64_t order = 1;
        for (int i = 0; i < m; ++i) order *= p;
        if (order > 243) break;
        const bool exhaustive = order <= 81;
        const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m);
        tasks.push_back([p, m, exhaustive, tag] {
          return lines_from(check_quadratic_sum_point(p, m, exhaustive, 100),
                            std::string("quadratic-sum ") + (exhaustive ? "" : "(sampled) ") +
                                tag);
        });
      }
      // Triple sums and fiber counts.
      for (int m = 2; m <= opt.m_max; ++m) {
        std::int64_t order = 1;
        for (int i = 0; i < m; ++i) order *= p;
        if (order > opt.cap) break;
        const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m);
        if (order <= 243) {
          tasks.push_back([p, m, tag] {
            std::vector<CheckLine> lines;
            auto t = lines_from(check_triple_sum_point(p, m, true, 0), "triple-sum " + tag);
            auto f = lines_from(check_fiber_point(p, m, true, 0), "fiber-count " + tag);
            lines.insert(lines.end(), t.begin(), t.end());
            lines.insert(lines.end(), f.begin(), f.end());
            return lines;
          });
        } else {
          const bool triple_fits = order <= kTripleSumCap / (p * p);
          tasks.push_back([p, m, tag, triple_fits] {
            std::vector<CheckLine> lines;
            if (triple_fits) {
              auto t = lines_from(check_triple_sum_point(p, m, false, 25),
                                  "triple-sum (sampled) " + tag);
              lines.insert(lines.end(), t.begin(), t.end());
            } else {
              lines.push_back({LineStatus::Skip, "triple-sum " + tag + " (above cap)"});
            }
            auto f = lines_from(check_fiber_point(p, m, false, 100),
                                "fiber-count (sampled) " + tag);
            lines.insert(lines.end(), f.begin(), f.end());
            return lines;
          });
        }
      }
      // Residue classes for odd m.
      for (int m = 3; m <= opt.m_max; m += 2) {
        if (!in_cap(p, m)) continue;
        const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m);
        tasks.push_back(
            [p, m, tag] { return lines_from(check_residue_class_point(p, m), "residue-classes " + tag); });
      }
      // Diagonal form counts over F_p (and F_9 when p = 3).
      if (p <= 7) {
        tasks.push_back([p] {
          return lines_from(check_diagonal_forms(p, 1, 5, 20),
                            "diagonal-form q=" + std::to_string(p));
        });
        if (p == 3)
          tasks.push_back(
              [] { return lines_from(check_diagonal_forms(3, 2, 3, 5), "diagonal-form q=9"); });
      }
    }
  }

  // Fan tasks out to a pool; buffer per-task lines and emit in task order.
  std::vector<std::vector<CheckLine>> results(tasks.size());
  std::atomic<size_t> next{0};
  auto drain = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      results[i] = tasks[i]();
    }
  };
  if (jobs == 1 || tasks.size() <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    const int nthreads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }

  std::int64_t passed = 0, failed = 0, skipped = 0;
  for (const auto& lines : results)
    for (const auto& line : lines) {
      switch (line.status) {
        case LineStatus::Pass:
          ++passed;
          std::cout << "PASS " << line.text << "\n";
          break;
        case LineStatus::Fail:
          ++failed;
          std::cout << "FAIL " << line.text << "\n";
          break;
        case LineStatus::Skip:
          ++skipped;
          std::cout << "SKIP " << line.text << "\n";
          break;
        case LineStatus::Report:
          std::cout << "REPORT " << line.text << "\n";
          break;
      }
    }
  std::cout << "TALLY " << passed << " pass, " << failed << " fail, " << skipped << " skip\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-code complete weight enumerator toolkit"};
  app.require_subcommand(1);

  ComputeOptions copt;
  auto* compute = app.add_subcommand("compute", "Compute one code's enumerator");
  compute->add_option("--p", copt.p, "odd prime p")->required();
  compute->add_option("--m", copt.m, "extension degree m")->required();
  compute->add_option("--d", copt.d, "defining-set exponent d");
  compute->add_option("--code", copt.code, "cd | cdb")->default_str("cd");
  compute->add_option("--method", copt.method, "brute | formula | both")->default_str("both");
  compute->add_option("--format", copt.format, "text | json | latex")->default_str("text");
  compute->add_option("--out", copt.out, "output file (default stdout)");
  compute->add_flag("--selftest-perturb", copt.selftest_perturb,
                    "perturb the closed form to exercise the mismatch path")
      ->group("");

  TablesOptions topt;
  auto* tables = app.add_subcommand("tables", "Emit the weight-distribution table");
  tables->add_option("--p", topt.p, "odd prime p")->required();
  tables->add_option("--m", topt.m, "extension degree m")->required();
  tables->add_option("--d", topt.d, "defining-set exponent d");
  tables->add_option("--code", topt.code, "cd | cdb")->default_str("cd");
  tables->add_option("--format", topt.format, "text | latex | csv")->default_str("text");
  tables->add_option("--out", topt.out, "output file (default stdout)");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Cross-validate formulas against brute force");
  verify->add_option("--p-set", vopt.p_set, "comma-separated primes");
  verify->add_option("--m-max", vopt.m_max, "largest extension degree");
  verify->add_option("--cap", vopt.cap, "grid size cap on p^m");
  verify->add_option("--suite", vopt.suite, "cwe | lemmas | all");
  verify->add_option("--jobs", vopt.jobs, "worker pool size (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E_PARAM: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(compute)) return run_compute(copt);
    if (app.got_subcommand(tables)) return run_tables(topt);
    return run_verify(vopt);
  } catch (const ParameterError& e) {
    std::cerr << "E_PARAM: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "E_CAPACITY: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: " << e.what() << "\n";
    return 4;
  }
}
