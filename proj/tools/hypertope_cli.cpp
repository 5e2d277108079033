#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <hypertope/families.hpp>
#include <hypertope/presentation_io.hpp>

namespace ht = hypertope;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t capacity = ht::kDefaultCosetCapacity;
  std::size_t ceiling = ht::kDefaultElementCeiling;
  std::string format = "text";
  bool no_timings = false;
  std::string dump_incidence;
  bool verify_incidence = false;
};

long long strict_ll(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + s + "' is not an integer");
  }
  if (used != s.size()) throw UsageError("'" + s + "' is not an integer");
  return v;
}

struct Range {
  long long lo = 0, hi = 0;
};

// "a..b", or a single "a" meaning a..a
Range parse_range(const std::string& s) {
  Range r;
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    r.lo = r.hi = strict_ll(s);
  } else {
    r.lo = strict_ll(s.substr(0, pos));
    r.hi = strict_ll(s.substr(pos + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
  return r;
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", ms);
  return buf;
}

struct StageRow {
  std::string name;
  bool pass = false;
  std::string witness;
  double elapsed_ms = -1.0;  // negative when no timing was recorded
};

void print_stage(const StageRow& s, const Options& opt) {
  std::cout << "  [" << (s.pass ? "pass" : "FAIL") << "] " << s.name;
  if (!s.witness.empty()) std::cout << ": " << s.witness;
  if (!opt.no_timings && s.elapsed_ms >= 0)
    std::cout << " (" << fmt_ms(s.elapsed_ms) << " ms)";
  std::cout << "\n";
}

ojson stage_json(const StageRow& s, const Options& opt) {
  ojson o;
  o["name"] = s.name;
  o["pass"] = s.pass;
  if (!s.witness.empty()) o["witness"] = s.witness;
  if (!opt.no_timings && s.elapsed_ms >= 0) o["elapsed_ms"] = s.elapsed_ms;
  return o;
}

std::vector<StageRow> rows_of(const ht::TheoremReport& rep) {
  std::vector<StageRow> rows;
  for (const auto& s : rep.stages)
    rows.push_back({s.name, s.pass, s.witness, s.elapsed_ms});
  return rows;
}

std::vector<StageRow> rows_of(const std::vector<ht::CheckResult>& checks) {
  std::vector<StageRow> rows;
  for (const auto& c : checks)
    rows.push_back({c.name, c.pass, c.witness, -1.0});
  return rows;
}

ojson envelope(const std::string& command) {
  ojson o;
  o["tool_version"] = kToolVersion;
  o["command"] = command;
  return o;
}

void emit(const ojson& o) { std::cout << o.dump(2) << "\n"; }

// Optional incidence-graph work shared by theorem and analyze; rebuilds the
// geometry only when one of the two flags asks for it.
std::optional<StageRow> incidence_extras(const ht::GeneratedGroup& gg,
                                         const Options& opt) {
  if (opt.dump_incidence.empty() && !opt.verify_incidence) return std::nullopt;
  auto geom = ht::build_geometry(gg);
  if (!opt.dump_incidence.empty()) {
    std::ofstream out(opt.dump_incidence);
    if (!out) throw ht::Error("cannot write '" + opt.dump_incidence + "'");
    ht::dump_incidence(geom, out);
  }
  if (opt.verify_incidence) {
    bool ok = ht::verify_incidence(geom);
    return StageRow{"incidence cross-check", ok,
                    ok ? "both incidence routes agree" : "routes disagree",
                    -1.0};
  }
  return std::nullopt;
}

int cmd_prop23(const std::string& b_range, const Options& opt) {
  Range range = parse_range(b_range);
  std::vector<ht::Prop23Report> reports;
  for (long long b = range.lo; b <= range.hi; ++b)
    reports.push_back(ht::verify_prop23(b, opt.capacity, opt.ceiling));
  std::size_t passed = 0;
  for (const auto& rep : reports) passed += rep.ok ? 1 : 0;
  std::string verdict = std::to_string(passed) + "/" +
                        std::to_string(reports.size()) + " pass";
  if (opt.format == "json") {
    ojson o = envelope("prop23");
    o["params"] = ojson{{"b_range", b_range}};
    o["runs"] = ojson::array();
    for (const auto& rep : reports) {
      ojson run;
      run["b"] = rep.b;
      run["m1_order"] = rep.m1_order;
      run["m2_order"] = rep.m2_order;
      run["m1_word_order"] = rep.m1_word_order;
      run["m2_word_order"] = rep.m2_word_order;
      run["stages"] = ojson::array();
      for (const auto& row : rows_of(rep.checks))
        run["stages"].push_back(stage_json(row, opt));
      run["verdict"] = rep.ok ? "pass" : "fail";
      o["runs"].push_back(run);
    }
    o["verdict"] = verdict;
    emit(o);
  } else {
    for (const auto& rep : reports) {
      std::cout << "b=" << rep.b << "  |M1|=" << rep.m1_order
                << "  |M2|=" << rep.m2_order
                << "  o(r2*r1*r0)=" << rep.m1_word_order
                << "  o(r1*r2*r1*r0)=" << rep.m2_word_order << "  "
                << (rep.ok ? "pass" : "FAIL");
      if (!rep.ok)
        for (const auto& c : rep.checks)
          if (!c.pass) std::cout << "  (" << c.name << ": " << c.witness << ")";
      std::cout << "\n";
    }
    std::cout << "verdict: " << verdict << "\n";
  }
  return passed == reports.size() ? 0 : 1;
}

int cmd_theorem(long long n, long long s, long long t, long long l, bool deep,
                const Options& opt) {
  auto rep = ht::verify_theorem32(n, s, t, l, deep, opt.capacity, opt.ceiling);
  auto rows = rows_of(rep);
  bool ok = rep.ok;
  if (rep.ok && (!opt.dump_incidence.empty() || opt.verify_incidence)) {
    auto gg = ht::concretize(ht::g_presentation(n, s, t, l), opt.capacity,
                             opt.ceiling);
    if (auto row = incidence_extras(gg, opt)) {
      rows.push_back(*row);
      ok = ok && row->pass;
    }
  }
  std::string verdict =
      ok ? "pass" : "fail at " + (rows.empty() ? "setup" : rows.back().name);
  if (!rep.ok && !rep.stages.empty())
    verdict = "fail at " + rep.stages.back().name;
  if (opt.format == "json") {
    ojson o = envelope("theorem");
    o["params"] = ojson{{"n", n},       {"s", s},
                        {"t", t},       {"l", l},
                        {"deep", deep}, {"parity", rep.parity_branch}};
    o["stages"] = ojson::array();
    for (const auto& row : rows) o["stages"].push_back(stage_json(row, opt));
    o["verdict"] = verdict;
    emit(o);
  } else {
    std::cout << "theorem n=" << n << " s=" << s << " t=" << t << " l=" << l
              << " (parity " << rep.parity_branch << ")\n";
    for (const auto& row : rows) print_stage(row, opt);
    std::cout << "verdict: " << verdict << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_sweep(const std::string& nr, const std::string& sr,
              const std::string& tr, const std::string& lr, bool deep,
              int jobs, const Options& opt) {
  Range rn = parse_range(nr), rs = parse_range(sr), rt = parse_range(tr),
        rl = parse_range(lr);
  if (rn.hi > 14)
    throw UsageError("n <= 14 is the practical ceiling for the element table");
  if (jobs < 0) throw UsageError("--jobs must be nonnegative");

  struct Tuple {
    long long n, s, t, l;
  };
  std::vector<Tuple> tuples;
  std::size_t skipped = 0;
  for (long long n = rn.lo; n <= rn.hi; ++n)
    for (long long s = rs.lo; s <= rs.hi; ++s)
      for (long long t = rt.lo; t <= rt.hi; ++t)
        for (long long l = rl.lo; l <= rl.hi; ++l) {
          if (n >= 10 && s >= 2 && t >= 2 && l >= 1 && n >= s + t + l)
            tuples.push_back({n, s, t, l});
          else
            ++skipped;
        }

  std::vector<std::optional<ht::TheoremReport>> results(tuples.size());
  std::vector<std::exception_ptr> errors(tuples.size());
  std::atomic<std::size_t> next{0};
  unsigned want = jobs > 0 ? static_cast<unsigned>(jobs)
                           : std::max(1u, std::thread::hardware_concurrency());
  unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(want, std::max<std::size_t>(tuples.size(), 1)));
  auto run = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tuples.size()) return;
      try {
        const auto& q = tuples[i];
        results[i] = ht::verify_theorem32(q.n, q.s, q.t, q.l, deep,
                                          opt.capacity, opt.ceiling);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t passed = 0;
  for (const auto& rep : results) passed += rep->ok ? 1 : 0;
  std::string verdict = std::to_string(passed) + "/" +
                        std::to_string(results.size()) + " pass, " +
                        std::to_string(skipped) + " skipped";
  if (opt.format == "json") {
    ojson o = envelope("sweep");
    o["params"] = ojson{{"n_range", nr},
                        {"s_range", sr},
                        {"t_range", tr},
                        {"l_range", lr},
                        {"deep", deep}};
    o["runs"] = ojson::array();
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const auto& rep = *results[i];
      ojson run;
      run["n"] = tuples[i].n;
      run["s"] = tuples[i].s;
      run["t"] = tuples[i].t;
      run["l"] = tuples[i].l;
      run["parity"] = rep.parity_branch;
      run["stages"] = ojson::array();
      for (const auto& row : rows_of(rep))
        run["stages"].push_back(stage_json(row, opt));
      run["verdict"] =
          rep.ok ? "pass" : "fail at " + rep.stages.back().name;
      o["runs"].push_back(run);
    }
    o["skipped_inadmissible"] = skipped;
    o["verdict"] = verdict;
    emit(o);
  } else {
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const auto& rep = *results[i];
      std::cout << "n=" << tuples[i].n << " s=" << tuples[i].s
                << " t=" << tuples[i].t << " l=" << tuples[i].l << ": ";
      if (rep.ok) {
        std::cout << "pass";
        if (!opt.no_timings) {
          double total = 0;
          for (const auto& st : rep.stages) total += st.elapsed_ms;
          std::cout << " (" << fmt_ms(total) << " ms)";
        }
      } else {
        std::cout << "fail at " << rep.stages.back().name << " ("
                  << rep.stages.back().witness << ")";
      }
      std::cout << "\n";
    }
    std::cout << "skipped " << skipped << " inadmissible tuples\n";
    std::cout << "verdict: " << verdict << "\n";
  }
  return passed == results.size() ? 0 : 1;
}

int cmd_analyze(const std::string& file, const Options& opt) {
  ht::Presentation p = ht::read_presentation_file(file);
  auto rep = ht::analyze_presentation(p, opt.capacity, opt.ceiling);

  auto mismatch_for = [&](const std::string& prefix) -> std::string {
    for (const auto& m : rep.param_mismatches)
      if (m.rfind(prefix, 0) == 0) return m;
    return "";
  };
  std::vector<StageRow> rows;
  {
    std::string bad = mismatch_for("order ");
    rows.push_back({"order", bad.empty(),
                    bad.empty() ? std::to_string(rep.order) : bad, -1.0});
  }
  rows.push_back({"involutions", !rep.degenerate,
                  rep.degenerate ? rep.degenerate_reason
                                 : "all three generators have order 2",
                  -1.0});
  std::string verdict;
  if (rep.degenerate) {
    verdict = "degenerate: " + rep.degenerate_reason;
  } else {
    std::string bad;
    for (const auto& m : rep.param_mismatches)
      if (m.rfind("o(", 0) == 0) bad = bad.empty() ? m : bad + "; " + m;
    std::string type_txt = "(" + std::to_string(rep.type[0]) + "," +
                           std::to_string(rep.type[1]) + "," +
                           std::to_string(rep.type[2]) + ")";
    rows.push_back({"type", bad.empty(), bad.empty() ? type_txt : bad, -1.0});
    rows.push_back({"C-group", rep.cgroup.is_c_group,
                    rep.cgroup.is_c_group
                        ? "intersection property holds"
                        : "fails at witness " +
                              rep.cgroup.failures.front().witness_word,
                    -1.0});
    auto side = [](const std::vector<std::string>& ws) {
      std::string out;
      for (const auto& w : ws) out += (out.empty() ? "" : ", ") + w;
      return "{" + out + "}";
    };
    rows.push_back({"flag transitivity", rep.tits_holds,
                    rep.tits_holds
                        ? side(rep.tits_lhs_words)
                        : side(rep.tits_lhs_words) + " / " +
                              side(rep.tits_rhs_words),
                    -1.0});
    rows.push_back({"hypertope", rep.verdict.ok, rep.verdict.summary, -1.0});
    verdict = rep.verdict.summary;
    auto gg = ht::concretize(p, opt.capacity, opt.ceiling);
    if (auto row = incidence_extras(gg, opt)) rows.push_back(*row);
  }

  auto orderings_txt = [&]() {
    if (rep.string_orderings.empty()) return std::string("none");
    std::string out;
    for (const auto& ord : rep.string_orderings) {
      if (!out.empty()) out += " / ";
      out += std::to_string(ord[0]) + "," + std::to_string(ord[1]) + "," +
             std::to_string(ord[2]);
    }
    return out;
  }();

  if (opt.format == "json") {
    ojson o = envelope("analyze");
    o["params"] = ojson{{"file", file}};
    for (const auto& [k, v] : p.params) o["params"][k] = v;
    o["order"] = rep.order;
    o["degenerate"] = rep.degenerate;
    if (!rep.degenerate) {
      o["type"] = ojson::array({rep.type[0], rep.type[1], rep.type[2]});
      o["string_orderings"] = ojson::array();
      for (const auto& ord : rep.string_orderings)
        o["string_orderings"].push_back(ojson::array({ord[0], ord[1], ord[2]}));
    }
    o["param_mismatches"] = rep.param_mismatches;
    o["stages"] = ojson::array();
    for (const auto& row : rows) o["stages"].push_back(stage_json(row, opt));
    o["verdict"] = verdict;
    emit(o);
  } else {
    std::cout << "analyze " << file << "\n";
    for (const auto& row : rows) print_stage(row, opt);
    if (!rep.degenerate)
      std::cout << "  string orderings: " << orderings_txt << "\n";
    for (const auto& m : rep.param_mismatches)
      std::cout << "  note: " << m << "\n";
    std::cout << "verdict: " << verdict << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented 2-group and incidence geometry toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Options opt;
  app.add_option("--capacity", opt.capacity,
                 "coset table capacity (default 2^20)")
      ->check(CLI::PositiveNumber);
  app.add_option("--element-ceiling", opt.ceiling,
                 "element table ceiling (default 2^14)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timings", opt.no_timings,
               "omit per-stage timings (byte-deterministic output)");
  app.add_option("--dump-incidence", opt.dump_incidence,
                 "write the incidence graph edge list to this path");
  app.add_flag("--verify-incidence", opt.verify_incidence,
               "cross-check incidence via coset intersections");

  auto* p23 = app.add_subcommand(
      "prop23", "orders of the two base families over a range of b");
  std::string b_range;
  p23->add_option("--b-range", b_range, "range a..b with a >= 2")->required();
  p23->fallthrough();

  auto* th = app.add_subcommand(
      "theorem", "run the verification ladder for one parameter tuple");
  long long n = 0, s = 0, t = 0, l = 0;
  bool deep = false;
  th->add_option("--n", n, "log2 of the group order")->required();
  th->add_option("--s", s, "log2 of o(r0*r1)")->required();
  th->add_option("--t", t, "log2 of o(r1*r2)")->required();
  th->add_option("--l", l, "log2 of o(r0*r2)")->required();
  th->add_flag("--deep", deep, "also verify the quotient chain");
  th->fallthrough();

  auto* sw = app.add_subcommand(
      "sweep", "run the ladder over parameter ranges, skipping inadmissible "
               "tuples");
  std::string nr, sr, tr, lr;
  bool sweep_deep = false;
  int jobs = 0;
  sw->add_option("--n-range", nr, "range a..b")->required();
  sw->add_option("--s-range", sr, "range a..b")->required();
  sw->add_option("--t-range", tr, "range a..b")->required();
  sw->add_option("--l-range", lr, "range a..b")->required();
  sw->add_flag("--deep", sweep_deep, "also verify the quotient chain");
  sw->add_option("--jobs", jobs, "parallel jobs (0 = hardware threads)");
  sw->fallthrough();

  auto* an = app.add_subcommand(
      "analyze", "full pipeline on a presentation file");
  std::string file;
  an->add_option("--file", file, "presentation file")->required();
  an->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*p23) return cmd_prop23(b_range, opt);
    if (*th) return cmd_theorem(n, s, t, l, deep, opt);
    if (*sw) return cmd_sweep(nr, sr, tr, lr, sweep_deep, jobs, opt);
    return cmd_analyze(file, opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ht::FamilyParamError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
