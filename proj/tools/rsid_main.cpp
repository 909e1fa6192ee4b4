// rsid: command-line front end for the insdel analysis of Reed-Solomon codes.
//
// Every command prints one JSON document (schema 1) on stdout, or CSV for the
// tabular commands with --format csv. Errors print a JSON diagnostic on stderr.
// Exit codes: 0 ok, 1 other failure, 2 usage or parse error, 3 guard exceeded,
// 4 invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rsid/rsid.hpp"

namespace {

using rsid::Json;

struct Global {
  unsigned threads = rsid::default_threads();
  std::string format = "json";
  std::string output;
  bool timing = false;
};

struct Output {
  Json json;
  std::optional<std::string> csv;  // set when the command has a tabular form
};

struct UsageError : rsid::Error {
  using rsid::Error::Error;
  const char* kind() const noexcept override { return "UsageError"; }
};

rsid::Field field_arg(const std::string& s) { return rsid::parse_field(s); }

rsid::EvaluationVector alpha_arg(const rsid::Field& f, const std::string& s) {
  try {
    return rsid::EvaluationVector(f, rsid::parse_index_list(f, s));
  } catch (const rsid::PreconditionError& e) {
    throw rsid::ParseError(std::string("invalid evaluation vector: ") + e.what());
  }
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string field, alpha, method = "auto";
  std::size_t k = 2, t = 1;
  std::uint64_t max_codewords = 20'000;
  std::uint64_t max_pairs = 50'000'000;
  std::uint64_t max_enumeration = 2'000'000'000;
};

Output run_analyze(const AnalyzeArgs& a, const Global& g) {
  const auto f = field_arg(a.field);
  const auto alpha = alpha_arg(f, a.alpha);
  Json j = rsid::json_header("analyze");
  j["field"] = rsid::format_field(f);
  j["alpha"] = alpha.points();
  j["k"] = a.k;
  rsid::AnalyzeOptions ao;
  ao.threads = g.threads;
  ao.max_codewords = a.max_codewords;
  ao.max_enumeration = a.max_enumeration;
  if (a.method == "optimal") {
    j["result"] = rsid::to_json(rsid::is_optimal_half_rate(alpha, a.k, ao));
    return {j, {}};
  }
  const rsid::RsCode code(alpha, a.k);
  if (a.method == "certificate") {
    rsid::CertificateOptions co;
    co.threads = g.threads;
    co.max_pairs = a.max_pairs;
    j["result"] = rsid::to_json(rsid::rank_certificate(code, a.t, co));
  } else if (a.method == "brute") {
    j["result"] = rsid::to_json(rsid::lcs_code_bruteforce(code, ao));
  } else if (a.method == "affine") {
    if (a.k != 2) throw UsageError("--method affine requires --k 2");
    j["result"] = rsid::to_json(rsid::lcs_code_affine(alpha));
  } else {
    j["result"] = rsid::to_json(rsid::lcs_code(code, ao));
  }
  return {j, {}};
}

// ---- classify -------------------------------------------------------------

Output run_classify(const std::string& field, const std::string& alpha_s) {
  const auto f = field_arg(field);
  const auto alpha = alpha_arg(f, alpha_s);
  if (!alpha.is_full_length()) throw UsageError("classify needs a full-length ordering of the field");
  Json j = rsid::json_header("classify");
  j["field"] = rsid::format_field(f);
  j["alpha"] = alpha.points();
  j["result"] = rsid::to_json(rsid::classify_bad_ordering(alpha));
  return {j, {}};
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
  std::string field;
  bool no_verify = false;
  std::uint64_t max_classes = 362'880;
};

Output run_census(const CensusArgs& a, const Global& g) {
  const auto f = field_arg(a.field);
  rsid::CensusOptions co;
  co.threads = g.threads;
  co.verify = !a.no_verify;
  co.max_classes = a.max_classes;
  const auto c = rsid::census_2dim(f, co);
  Json j = rsid::json_header("census");
  j["field"] = rsid::format_field(f);
  j["result"] = rsid::to_json(c);
  std::ostringstream csv;
  csv << "index,alpha,reason\n";
  for (const auto& b : c.bad_classes)
    csv << b.index << ",\"" << rsid::format_index_list(b.alpha) << "\"," << rsid::to_string(b.verdict.reason) << "\n";
  return {j, csv.str()};
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
  std::string field;
  double delta = 0.5;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::uint32_t max_q = 128;
};

Output run_sample(const SampleArgs& a, const Global& g) {
  const auto f = field_arg(a.field);
  rsid::SampleOptions so;
  so.threads = g.threads;
  so.max_q = a.max_q;
  const auto s = rsid::sample_orderings(f, a.delta, a.trials, a.seed, so);
  Json j = rsid::json_header("sample");
  j["field"] = rsid::format_field(f);
  j["rng"] = "mt19937_64, rejection-sampled Fisher-Yates";
  j["result"] = rsid::to_json(s);
  std::ostringstream csv;
  csv << "trial,lcs\n";
  for (std::size_t t = 0; t < s.lcs.size(); ++t) csv << t << "," << s.lcs[t] << "\n";
  return {j, csv.str()};
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
  std::string field, verify = "exact";
  std::size_t k = 2;
  bool allow_small_q = false, coarse = false, restrict_hamming = false;
};

Output run_construct(const ConstructArgs& a, const Global& g) {
  const auto f = field_arg(a.field);
  rsid::ConstructOptions co;
  co.threads = g.threads;
  co.allow_small_q = a.allow_small_q;
  co.coarse_bound = a.coarse;
  co.restrict_hamming = a.restrict_hamming;
  co.verify = a.verify == "exact" ? rsid::VerifyMode::Exact
              : a.verify == "certificate" ? rsid::VerifyMode::Certificate
                                          : rsid::VerifyMode::None;
  const auto t = rsid::construct_half_rate(f, a.k, co);
  Json j = rsid::json_header("construct");
  j["verify"] = rsid::to_string(co.verify);
  j["restrict_hamming"] = a.restrict_hamming;
  j["result"] = rsid::to_json(t);
  return {j, {}};
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> ell, n, k;
  std::optional<double> delta;
};

Output run_bounds(const BoundsArgs& a) {
  Json j = rsid::json_header("bounds");
  j["q"] = a.q;
  Json reports = Json::array();
  std::ostringstream csv;
  csv << "name,parameters,value\n";
  auto add = [&](const std::string& name, Json params, Json value, const std::string& flat) {
    Json r;
    r["name"] = name;
    r["parameters"] = std::move(params);
    r["value"] = std::move(value);
    reports.push_back(std::move(r));
    csv << name << "," << flat << "\n";
  };
  if (a.n && a.k) {
    const auto v = rsid::half_singleton(*a.n, *a.k);
    add("half_singleton", {{"n", *a.n}, {"k", *a.k}}, v,
        "\"n=" + std::to_string(*a.n) + " k=" + std::to_string(*a.k) + "\"," + std::to_string(v));
  }
  if (a.q >= 4 && rsid::is_prime_power(a.q)) {
    const auto lb = rsid::prop7_lower_bound_classes(a.q);
    add("prop7_lower_bound_classes", {{"q", a.q}}, lb.str(), "\"q=" + std::to_string(a.q) + "\"," + lb.str());
    if (a.q <= rsid::kMaxTabulatedOrder) {
      const auto bad = rsid::exact_bad_class_count(rsid::Field::of_order(a.q));
      add("exact_bad_class_count", {{"q", a.q}}, bad, "\"q=" + std::to_string(a.q) + "\"," + std::to_string(bad));
    }
  }
  if (a.ell) {
    const auto v = rsid::prop6_bad_ordering_bound(a.q, *a.ell);
    add("prop6_bad_ordering_bound", {{"q", a.q}, {"l", *a.ell}}, v.str(),
        "\"q=" + std::to_string(a.q) + " l=" + std::to_string(*a.ell) + "\"," + v.str());
  }
  if (a.delta) {
    const auto c = rsid::claim8_bound(a.q, *a.delta);
    Json cj = rsid::to_json(c);
    add("claim8_bound", {{"q", a.q}, {"delta", *a.delta}}, cj,
        "\"q=" + std::to_string(a.q) + " delta=" + std::to_string(*a.delta) + "\"," +
            (c.holds ? (*c.holds ? "holds" : "violated") : "out-of-regime"));
  }
  if (reports.empty()) throw UsageError("bounds: nothing to evaluate for these arguments");
  j["reports"] = reports;
  return {j, csv.str()};
}

// ---- table1 ---------------------------------------------------------------

struct Table1Args {
  std::uint32_t census_max = 9;
};

Output run_table1(const Table1Args& a, const Global& g) {
  Json j = rsid::json_header("table1");
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "q,method,correcting,total,proportion,prop7_lower_bound,prop7_proportion\n";
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    const auto f = rsid::Field::of_order(q);
    const std::uint64_t total = rsid::factorial_u64(q - 2);
    std::uint64_t correcting;
    std::string method;
    if (q <= a.census_max) {
      rsid::CensusOptions co;
      co.threads = g.threads;
      correcting = rsid::census_2dim(f, co).classes_correcting;
      method = "census";
    } else {
      correcting = total - rsid::exact_bad_class_count(f);
      method = "formula+dedup";
    }
    const auto lb = static_cast<std::uint64_t>(rsid::prop7_lower_bound_classes(q));
    const double prop = static_cast<double>(correcting) / static_cast<double>(total);
    const double lb_prop = static_cast<double>(lb) / static_cast<double>(total);
    Json r;
    r["q"] = q;
    r["method"] = method;
    r["correcting"] = correcting;
    r["total"] = total;
    r["proportion"] = rsid::format_proportion(prop);
    r["prop7_lower_bound"] = lb;
    r["prop7_proportion"] = rsid::format_proportion(lb_prop);
    rows.push_back(r);
    csv << q << "," << method << "," << correcting << "," << total << "," << rsid::format_proportion(prop) << ","
        << lb << "," << rsid::format_proportion(lb_prop) << "\n";
  }
  j["rows"] = rows;
  return {j, csv.str()};
}

int exit_code_for(const rsid::Error& e) {
  if (dynamic_cast<const rsid::GuardExceeded*>(&e)) return 3;
  if (dynamic_cast<const rsid::InvariantViolation*>(&e)) return 4;
  if (dynamic_cast<const rsid::ParseError*>(&e) || dynamic_cast<const rsid::PreconditionError*>(&e) ||
      dynamic_cast<const UsageError*>(&e))
    return 2;
  return 1;
}

void print_diagnostic(const std::string& command, const std::string& kind, const std::string& message, int code) {
  Json d = rsid::json_header(command.c_str());
  d["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << d.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Insdel analysis and construction of Reed-Solomon codes"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads, "Worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", g.output, "Write the result to this file instead of stdout");
  app.add_flag("--timing", g.timing, "Add wall-clock time to the JSON output");

  AnalyzeArgs an;
  auto* c_an = app.add_subcommand("analyze", "LCS(C) and insdel capability of RS_{n,k}(alpha)");
  c_an->add_option("--field", an.field, "Field order or GF(p^m)")->required();
  c_an->add_option("--k", an.k, "Dimension")->required();
  c_an->add_option("--alpha", an.alpha, "Evaluation points as comma-separated indices")->required();
  c_an->add_option("--method", an.method, "auto | brute | affine | certificate | optimal")
      ->check(CLI::IsMember({"auto", "brute", "affine", "certificate", "optimal"}));
  c_an->add_option("--t", an.t, "Insdel errors to certify (certificate method)");
  c_an->add_option("--max-codewords", an.max_codewords, "Guard on q^k for brute force");
  c_an->add_option("--max-pairs", an.max_pairs, "Guard on index pairs for the certificate");
  c_an->add_option("--max-enumeration", an.max_enumeration, "Guard for the optimality check");

  std::string cl_field, cl_alpha;
  auto* c_cl = app.add_subcommand("classify", "Is a full-length ordering bad for one insdel (k = 2)?");
  c_cl->add_option("--field", cl_field)->required();
  c_cl->add_option("--alpha", cl_alpha)->required();

  CensusArgs ce;
  auto* c_ce = app.add_subcommand("census", "Classify every canonical ordering of F_q (k = 2)");
  c_ce->add_option("--field", ce.field)->required();
  c_ce->add_flag("--no-verify", ce.no_verify, "Skip the LCS cross-check of each verdict");
  c_ce->add_option("--max-classes", ce.max_classes, "Guard on (q-2)!");

  SampleArgs sa;
  auto* c_sa = app.add_subcommand("sample", "LCS(C) of random full-length orderings (k = 2)");
  c_sa->add_option("--field", sa.field)->required();
  c_sa->add_option("--delta", sa.delta, "Target: correct (1 - delta) q insdels")->required();
  c_sa->add_option("--trials", sa.trials)->required();
  c_sa->add_option("--seed", sa.seed)->required();
  c_sa->add_option("--max-q", sa.max_q, "Guard on the field size");

  ConstructArgs co;
  auto* c_co = app.add_subcommand("construct", "Build alpha in F_q^{2k} with RS_{2k,k} correcting one insdel");
  c_co->add_option("--field", co.field)->required();
  c_co->add_option("--k", co.k)->required();
  c_co->add_option("--verify", co.verify)->check(CLI::IsMember({"exact", "certificate", "none"}));
  c_co->add_flag("--allow-small-q", co.allow_small_q, "Run below the guaranteed field size");
  c_co->add_flag("--coarse-bound", co.coarse, "Use q >= 100 k^4 as the required field size");
  c_co->add_flag("--restrict-hamming", co.restrict_hamming, "Only index pairs with d_H(I*, J*) >= i - 2");

  BoundsArgs bo;
  auto* c_bo = app.add_subcommand("bounds", "Evaluate the counting bounds");
  c_bo->add_option("--q", bo.q)->required();
  c_bo->add_option("--ell", bo.ell, "Subsequence length for the ordering count");
  c_bo->add_option("--delta", bo.delta, "delta for the normalized bad-ordering bound");
  c_bo->add_option("--n", bo.n, "Code length for the half-Singleton bound");
  c_bo->add_option("--k", bo.k, "Dimension for the half-Singleton bound");

  Table1Args t1;
  auto* c_t1 = app.add_subcommand("table1", "Proportion of full-length 2-dimensional codes correcting one insdel");
  c_t1->add_option("--census-max", t1.census_max, "Largest q handled by the census; larger q use the class formula");

  std::string command = "rsid";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();
    print_diagnostic(command, "UsageError", e.what(), 2);
    return 2;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    const auto start = std::chrono::steady_clock::now();
    Output out;
    if (*c_an) out = run_analyze(an, g);
    else if (*c_cl) out = run_classify(cl_field, cl_alpha);
    else if (*c_ce) out = run_census(ce, g);
    else if (*c_sa) out = run_sample(sa, g);
    else if (*c_co) out = run_construct(co, g);
    else if (*c_bo) out = run_bounds(bo);
    else out = run_table1(t1, g);
    if (g.timing)
      out.json["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string text;
    if (g.format == "csv") {
      if (!out.csv) throw UsageError("--format csv is not available for '" + command + "'");
      text = *out.csv;
    } else {
      text = out.json.dump(2) + "\n";
    }
    if (g.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(g.output, std::ios::binary);
      if (!file) throw rsid::Error("cannot open output file " + g.output);
      file << text;
    }
    return 0;
  } catch (const rsid::Error& e) {
    const int code = exit_code_for(e);
    print_diagnostic(command, e.kind(), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    print_diagnostic(command, "Error", e.what(), 1);
    return 1;
  }
}
