// Command-line front end for the divisor-class calculator.
//
// Subcommands: class | components | slope | table | enumerate | verify.
// Output is exact by default (rational strings); --approx adds decimals.
// Exit codes: 0 ok, 1 internal invariant failure, 2 invalid input,
// 3 compute budget exceeded (override with --force).

#include <stratadiv/stratadiv.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace stratadiv;

// Range commands refuse to go past this genus unless --force is given.
constexpr int kBudgetMaxGenus = 9;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
  std::string format = "text";
  std::optional<int> approx;
  std::string out;
  bool force = false;
};

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
  cmd->add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--approx", g.approx,
                  "Also print decimals with this many fraction digits")
      ->check(CLI::Range(0, 200));
  cmd->add_option("--out", g.out, "Write output to this file instead of stdout");
  cmd->add_flag("--force", g.force, "Override the compute budget");
}

int emit(const std::string& payload, const GlobalOpts& g) {
  if (g.out.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream f(g.out);
  f << payload;
  f.close();
  if (!f) {
    std::cerr << "error: cannot write to " << g.out << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

std::string render_records(const std::vector<OutputRecord>& recs, const GlobalOpts& g,
                           int delta_columns, bool json_as_array) {
  if (g.format == "json") {
    if (json_as_array || recs.size() != 1) {
      nlohmann::json arr = nlohmann::json::array();
      for (const OutputRecord& r : recs) arr.push_back(to_json(r, g.approx));
      return arr.dump(2) + "\n";
    }
    return to_json(recs[0], g.approx).dump(2) + "\n";
  }
  if (g.format == "csv") {
    std::string out = csv_header(delta_columns) + "\n";
    for (const OutputRecord& r : recs) out += csv_row(r, delta_columns) + "\n";
    return out;
  }
  std::string out;
  for (size_t i = 0; i < recs.size(); ++i) {
    if (i) out += "\n";
    out += to_text(recs[i], g.approx);
  }
  return out;
}

int run_class(int genus, const std::vector<int>& kappa, const GlobalOpts& g) {
  Signature sig = signature_new(genus, kappa);
  DivisorClass dc = divisor_class(sig);
  OutputRecord rec = make_record(sig, dc);
  if (g.format == "csv") attach_slope(rec, slope_report(dc));
  return emit(render_records({rec}, g, dc.delta_count(), false), g);
}

int run_components(int genus, const std::vector<int>& kappa, const GlobalOpts& g) {
  Signature sig = signature_new(genus, kappa);
  ComponentClasses cc = component_classes(sig);
  std::vector<OutputRecord> recs;
  for (const DivisorClass& dc : cc.classes) {
    OutputRecord rec = make_record(sig, dc);
    rec.decomposition_known = cc.decomposition_known;
    if (g.format == "csv") attach_slope(rec, slope_report(dc));
    recs.push_back(std::move(rec));
  }
  return emit(render_records(recs, g, genus / 2 + 1, true), g);
}

int run_slope(int genus, const std::vector<int>& kappa, const GlobalOpts& g) {
  Signature sig = signature_new(genus, kappa);
  DivisorClass dc = divisor_class(sig);
  OutputRecord rec = make_record(sig, dc);
  attach_slope(rec, slope_report(dc, sig));
  return emit(render_records({rec}, g, dc.delta_count(), false), g);
}

int run_enumerate(int genus, const GlobalOpts& g) {
  std::vector<Signature> sigs = enumerate_signatures(genus);
  if (g.format == "json") {
    nlohmann::json j;
    j["genus"] = genus;
    nlohmann::json arr = nlohmann::json::array();
    for (const Signature& s : sigs) arr.push_back(s.parts());
    j["signatures"] = arr;
    return emit(j.dump(2) + "\n", g);
  }
  if (g.format == "csv") {
    std::string out = "genus,kappa\n";
    for (const Signature& s : sigs)
      out += std::to_string(genus) + ",\"" + s.str() + "\"\n";
    return emit(out, g);
  }
  std::string out;
  for (const Signature& s : sigs) out += s.str() + "\n";
  return emit(out, g);
}

int run_table(const std::string& genus_range, bool all_kappa,
              const std::vector<int>& kappa, const GlobalOpts& g) {
  int lo = 0, hi = 0;
  {
    auto dash = genus_range.find('-');
    try {
      if (dash == std::string::npos) {
        lo = hi = std::stoi(genus_range);
      } else {
        lo = std::stoi(genus_range.substr(0, dash));
        hi = std::stoi(genus_range.substr(dash + 1));
      }
    } catch (const std::exception&) {
      std::cerr << "error: cannot parse genus range '" << genus_range << "'\n";
      return kExitInvalidInput;
    }
  }
  if (lo < 3 || hi < lo) {
    std::cerr << "error: genus range must be N or N-M with 3 <= N <= M\n";
    return kExitInvalidInput;
  }
  if (all_kappa == !kappa.empty()) {
    std::cerr << "error: pass exactly one of --all-kappa or --kappa\n";
    return kExitInvalidInput;
  }
  if (!kappa.empty() && lo != hi) {
    std::cerr << "error: --kappa requires a single genus, not a range\n";
    return kExitInvalidInput;
  }
  if (hi > kBudgetMaxGenus && !g.force) {
    std::cerr << "error: genus " << hi << " exceeds the compute budget ("
              << kBudgetMaxGenus << "); rerun with --force to override\n";
    return kExitBudget;
  }

  std::vector<OutputRecord> recs;
  auto add_row = [&](const Signature& sig) {
    DivisorClass dc = divisor_class(sig);
    OutputRecord rec = make_record(sig, dc);
    attach_slope(rec, slope_report(dc));
    recs.push_back(std::move(rec));
  };
  if (!kappa.empty()) {
    add_row(signature_new(lo, kappa));
  } else {
    for (int genus = lo; genus <= hi; ++genus)
      for (const Signature& sig : enumerate_signatures(genus)) add_row(sig);
  }

  const int delta_columns = hi / 2 + 1;
  if (g.format == "json")
    return emit(render_records(recs, g, delta_columns, true), g);
  // table's deliverable is CSV; both text and csv formats produce it
  std::string out = csv_header(delta_columns) + "\n";
  for (const OutputRecord& r : recs) out += csv_row(r, delta_columns) + "\n";
  return emit(out, g);
}

int run_verify(int max_genus, const GlobalOpts& g) {
  if (max_genus < 3) {
    std::cerr << "error: --max-genus must be at least 3\n";
    return kExitInvalidInput;
  }
  if (max_genus > kBudgetMaxGenus && !g.force) {
    std::cerr << "error: max genus " << max_genus << " exceeds the compute budget ("
              << kBudgetMaxGenus << "); rerun with --force to override\n";
    return kExitBudget;
  }
  std::vector<verify::CheckResult> results = verify::run_all({max_genus});

  int failed = 0;
  for (const verify::CheckResult& r : results)
    if (!r.passed && !r.report_only) ++failed;

  std::string out;
  if (g.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const verify::CheckResult& r : results)
      arr.push_back({{"name", r.name},
                     {"passed", r.passed},
                     {"report_only", r.report_only},
                     {"cases", r.cases},
                     {"detail", r.detail}});
    out = arr.dump(2) + "\n";
  } else if (g.format == "csv") {
    out = "name,passed,report_only,cases\n";
    for (const verify::CheckResult& r : results)
      out += r.name + "," + (r.passed ? "true" : "false") + "," +
             (r.report_only ? "true" : "false") + "," + std::to_string(r.cases) + "\n";
  } else {
    for (const verify::CheckResult& r : results) {
      if (r.report_only)
        out += "INFO " + r.name + ": " + r.detail + "\n";
      else if (r.passed)
        out += "PASS " + r.name + " (" + std::to_string(r.cases) + " cases)\n";
      else
        out += "FAIL " + r.name + ": " + r.detail + "\n";
    }
    out += std::to_string(results.size() - static_cast<size_t>(failed)) + "/" +
           std::to_string(results.size()) + " checks passed (max genus " +
           std::to_string(max_genus) + ")\n";
  }
  int rc = emit(out, g);
  if (rc != kExitOk) return rc;
  return failed == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor-class calculator for divisorial strata of"
               " abelian differentials"};
  app.require_subcommand(1);

  GlobalOpts g;
  int genus = 0;
  std::vector<int> kappa;
  std::string genus_range;
  bool all_kappa = false;
  int max_genus = 7;

  CLI::App* cmd_class = app.add_subcommand("class", "Full divisor class of one stratum");
  cmd_class->add_option("--genus", genus, "Genus (>= 3)")->required();
  cmd_class->add_option("--kappa", kappa, "Comma-separated zero orders")
      ->required()
      ->delimiter(',');
  add_global_opts(cmd_class, g);

  CLI::App* cmd_components =
      app.add_subcommand("components", "Connected-component classes of one stratum");
  cmd_components->add_option("--genus", genus, "Genus (>= 3)")->required();
  cmd_components->add_option("--kappa", kappa, "Comma-separated zero orders")
      ->required()
      ->delimiter(',');
  add_global_opts(cmd_components, g);

  CLI::App* cmd_slope = app.add_subcommand("slope", "Slope statistics of one stratum");
  cmd_slope->add_option("--genus", genus, "Genus (>= 3)")->required();
  cmd_slope->add_option("--kappa", kappa, "Comma-separated zero orders")
      ->required()
      ->delimiter(',');
  add_global_opts(cmd_slope, g);

  CLI::App* cmd_table =
      app.add_subcommand("table", "CSV table of classes over a genus range");
  cmd_table->add_option("--genus", genus_range, "Genus N or range N-M")->required();
  cmd_table->add_flag("--all-kappa", all_kappa, "Every signature of each genus");
  cmd_table->add_option("--kappa", kappa, "One signature (single genus only)")
      ->delimiter(',');
  add_global_opts(cmd_table, g);

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "List the signatures of one genus");
  cmd_enumerate->add_option("--genus", genus, "Genus (>= 3)")->required();
  add_global_opts(cmd_enumerate, g);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run the self-verification checks");
  cmd_verify->add_option("--max-genus", max_genus, "Sweep signatures up to this genus")
      ->capture_default_str();
  add_global_opts(cmd_verify, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (cmd_class->parsed()) return run_class(genus, kappa, g);
    if (cmd_components->parsed()) return run_components(genus, kappa, g);
    if (cmd_slope->parsed()) return run_slope(genus, kappa, g);
    if (cmd_table->parsed()) return run_table(genus_range, all_kappa, kappa, g);
    if (cmd_enumerate->parsed()) return run_enumerate(genus, g);
    if (cmd_verify->parsed()) return run_verify(max_genus, g);
  } catch (const Error& e) {
    std::cerr << "error [" << Error::name(e.kind()) << "]: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalidInput;
}
