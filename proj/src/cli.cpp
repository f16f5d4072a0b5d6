#include "eccaudit/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "eccaudit/audit.hpp"
#include "eccaudit/bounds.hpp"
#include "eccaudit/corpus.hpp"
#include "eccaudit/graph6.hpp"
#include "eccaudit/indices.hpp"
#include "eccaudit/report.hpp"
#include "eccaudit/transform.hpp"

namespace eccaudit {

namespace {

// Input problems detected after argument parsing; mapped to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<SignPattern> parse_patterns(const std::string& text) {
  if (text == "all") return {all_patterns().begin(), all_patterns().end()};
  std::vector<SignPattern> out;
  for (const auto& s : split_list(text)) out.push_back(SignPattern::parse(s));
  if (out.empty()) throw InputError("no sign patterns given");
  return out;
}

std::vector<BoundKind> parse_kinds(const std::string& text) {
  if (text == "all") return {kAllKinds.begin(), kAllKinds.end()};
  std::vector<BoundKind> out;
  for (const auto& s : split_list(text)) out.push_back(parse_bound_kind(s));
  if (out.empty()) throw InputError("no bound kinds given");
  return out;
}

std::vector<BoundVariant> parse_variants(const std::string& text) {
  if (text == "all") return {kAllVariants.begin(), kAllVariants.end()};
  std::vector<BoundVariant> out;
  for (const auto& s : split_list(text)) out.push_back(parse_bound_variant(s));
  if (out.empty()) throw InputError("no bound variants given");
  return out;
}

struct CorpusFlags {
  std::string source = "enumerate";
  std::size_t n_min = 1;
  std::size_t n_max = 5;
  std::size_t n = 8;
  std::string p = "1/2";
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::string in;
  bool all_graphs = false;
  bool dedup = false;
  bool allow_large = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--source", source, "Corpus source")
        ->check(CLI::IsMember({"enumerate", "gnp", "tree", "file"}))
        ->capture_default_str();
    cmd->add_option("--n-min", n_min, "Smallest order to enumerate")->capture_default_str();
    cmd->add_option("--n-max", n_max, "Largest order to enumerate")->capture_default_str();
    cmd->add_option("--n", n, "Order of gnp/tree graphs")->capture_default_str();
    cmd->add_option("--p", p, "Edge probability for gnp, e.g. 1/2 or 0.3")
        ->capture_default_str();
    cmd->add_option("--count", count, "Number of random graphs")->capture_default_str();
    cmd->add_option("--seed", seed, "Seed for random sources")->capture_default_str();
    cmd->add_option("--in", in, "graph6 input file for --source file");
    cmd->add_flag("--all-graphs", all_graphs, "Enumerate disconnected graphs too");
    cmd->add_flag("--dedup", dedup, "Keep one labeled representative per isomorphism class");
    cmd->add_flag("--allow-large", allow_large, "Permit exhaustive enumeration with n >= 7");
  }

  CorpusSpec spec() const {
    if (source == "enumerate") {
      if (n_max >= 7 && !allow_large) {
        throw InputError("exhaustive enumeration with n >= 7 requires --allow-large");
      }
      return EnumerateSource{n_min, n_max, !all_graphs, dedup};
    }
    if (source == "gnp") return GnpSource{n, parse_rational(p), count, seed};
    if (source == "tree") return TreeSource{n, count, seed};
    if (in.empty()) throw InputError("--source file needs --in PATH");
    return FileSource{in};
  }
};

// Either the caller's stream or an owned file.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw InputError("cannot write to '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void print_indices(const Graph& g, std::ostream& out) {
  const auto d = degree_invariants(g);
  const auto e = ecc_invariants(g);
  const auto ee = edge_ecc_invariants(g);
  auto undef = std::string("undef");
  auto opt = [&](const std::optional<Rational>& r) { return to_string(r); };

  out << "n=" << d.n << "\nm=" << d.m << "\nconnected=" << (e ? "true" : "false")
      << "\nM1=" << d.m1 << "\nM2=" << d.m2 << "\nF=" << d.forgotten
      << "\nID=" << opt(d.inverse_degree) << "\nM1inv=" << to_string(d.m1_inverse) << '\n';
  out << "ECI=" << (e ? to_string(e->eci) : undef)
      << "\nI_ECI=" << (e ? opt(e->i_eci) : undef)
      << "\nM1_ECI=" << (e ? to_string(e->m1_eci) : undef)
      << "\nECI1=" << (e ? to_string(e->eci1) : undef)
      << "\nM1_ECI1=" << (e ? to_string(e->m1_eci1) : undef) << '\n';
  out << "xi_inv=" << (ee ? to_string(ee->xi_inverse) : undef)
      << "\nF_ECI=" << (ee ? to_string(ee->f_eci) : undef)
      << "\nM2_ECI=" << (ee ? to_string(ee->m2_eci) : undef)
      << "\nF_ECI1=" << (ee ? to_string(ee->f_eci1) : undef)
      << "\nM2_ECI1=" << (ee ? to_string(ee->m2_eci1) : undef)
      << "\nS1=" << (ee ? to_string(ee->edge_sum) : undef)
      << "\nS2=" << (ee ? to_string(ee->edge_sum_sq) : undef) << '\n';
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eccentricity-connectivity indices of total transformation graphs and an "
               "exact audit of their published upper bounds",
               "eccaudit"};
  app.require_subcommand(1);

  std::string graph_text;

  auto* indices_cmd = app.add_subcommand("indices", "Print every invariant of one graph");
  indices_cmd->add_option("graph6", graph_text, "Graph in graph6 format")->required();

  std::string pattern_text;
  bool show_provenance = false;
  auto* transform_cmd =
      app.add_subcommand("transform", "Print the graph6 text of a transformation graph");
  transform_cmd->add_option("--pattern", pattern_text, "Sign pattern such as +-+")->required();
  transform_cmd->add_option("graph6", graph_text, "Graph in graph6 format")->required();
  transform_cmd->add_flag("--provenance", show_provenance,
                          "Also list the origin of every transformed vertex");

  std::size_t enum_n = 0;
  bool connected_only = false, enum_dedup = false, enum_allow_large = false;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List every labeled graph on n vertices as graph6");
  enumerate_cmd->add_option("--n", enum_n, "Number of vertices")->required();
  enumerate_cmd->add_flag("--connected-only", connected_only, "Only connected graphs");
  enumerate_cmd->add_flag("--dedup", enum_dedup, "One representative per isomorphism class");
  enumerate_cmd->add_flag("--allow-large", enum_allow_large, "Permit n >= 7");

  auto* bounds_cmd = app.add_subcommand("bounds", "List every implemented bound formula");

  CorpusFlags audit_corpus;
  std::string patterns_text = "all", kinds_text = "all", variants_text = "all";
  std::string format_text = "csv", out_path = "-";
  unsigned jobs = 1;
  bool fail_on_violation = false;
  auto* audit_cmd = app.add_subcommand("audit", "Compare exact indices against every bound");
  audit_corpus.add_to(audit_cmd);
  audit_cmd->add_option("--patterns", patterns_text, "Comma-separated patterns or 'all'")
      ->capture_default_str();
  audit_cmd->add_option("--kinds", kinds_text, "I_ECI,M1_ECI,ECI1,M1_ECI1 or 'all'")
      ->capture_default_str();
  audit_cmd->add_option("--variants", variants_text, "statement,proof or 'all'")
      ->capture_default_str();
  audit_cmd->add_option("--format", format_text, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  audit_cmd->add_option("--out", out_path, "Report path ('-' for stdout)")->capture_default_str();
  audit_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  audit_cmd->add_flag("--fail-on-violation", fail_on_violation,
                      "Exit with status 1 if any bound is violated");

  CorpusFlags cross_corpus;
  auto* cross_cmd = app.add_subcommand(
      "crosscheck", "Compare constructed degrees and eccentricities with closed forms");
  cross_corpus.add_to(cross_cmd);
  cross_cmd->add_option("--patterns", patterns_text, "Comma-separated patterns or 'all'")
      ->capture_default_str();
  cross_cmd->add_option("--format", format_text, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cross_cmd->add_option("--out", out_path, "Report path ('-' for stdout)")->capture_default_str();
  cross_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("eccaudit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*indices_cmd) {
      print_indices(parse_graph6(graph_text), out);
      return 0;
    }
    if (*transform_cmd) {
      const auto t = apply(parse_graph6(graph_text), SignPattern::parse(pattern_text));
      out << encode_graph6(t.graph) << '\n';
      if (show_provenance) {
        for (std::size_t k = 0; k < t.provenance.size(); ++k) {
          out << k << ' ' << t.provenance[k].to_string() << '\n';
        }
      }
      return 0;
    }
    if (*enumerate_cmd) {
      if (enum_n >= 7 && !enum_allow_large) {
        throw InputError("enumeration with n >= 7 requires --allow-large");
      }
      LabeledEnumerator e(enum_n, connected_only, enum_dedup);
      while (auto g = e.next()) out << encode_graph6(*g) << '\n';
      return 0;
    }
    if (*bounds_cmd) {
      for (const auto& b : list_bounds()) {
        out << b.id() << "  [" << b.pattern.to_string() << "]  " << b.formula << '\n';
      }
      return 0;
    }
    if (*audit_cmd) {
      AuditOptions options;
      options.patterns = parse_patterns(patterns_text);
      options.kinds = parse_kinds(kinds_text);
      options.variants = parse_variants(variants_text);
      options.jobs = jobs;
      const CorpusSpec spec = audit_corpus.spec();
      auto corpus = open_corpus(spec);
      Output sink(out_path, out);
      ReportHeader header;
      header.corpus = describe(spec);
      AuditReportWriter writer(sink.get(), parse_report_format(format_text), header);
      std::size_t violated = 0;
      run_audit(*corpus, options, [&](const AuditRow& row) {
        if (row.verdict == Verdict::Violated) ++violated;
        writer.write(row);
      });
      writer.finish();
      if (!sink.get()) throw InputError("error while writing the report");
      return fail_on_violation && violated > 0 ? 1 : 0;
    }
    if (*cross_cmd) {
      const auto patterns = parse_patterns(patterns_text);
      const CorpusSpec spec = cross_corpus.spec();
      auto corpus = open_corpus(spec);
      Output sink(out_path, out);
      ReportHeader header;
      header.corpus = describe(spec);
      CrosscheckReportWriter writer(sink.get(), parse_report_format(format_text), header);
      degree_crosscheck(*corpus, patterns, jobs,
                        [&writer](const CrosscheckRow& row) { writer.write(row); });
      writer.finish();
      if (!sink.get()) throw InputError("error while writing the report");
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace eccaudit
