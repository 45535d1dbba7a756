// nckoszul: command-line front end.
//
//   nckoszul present     --builtin k3 | --graph FILE | --presentation FILE
//   nckoszul complete    SOURCE --order c,b,e,f,a,d --cap 3
//   nckoszul hilbert     SOURCE | --forbidden "cef,cd,ef*b" --generators abcdef
//   nckoszul koszul      SOURCE --nmax 5 --scope decreasing
//   nckoszul verify-paper [--nmax 5] [--strict-paper]
//
// Exit codes: 0 pass, 1 check failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nckoszul/golden.hpp"
#include "nckoszul/json_io.hpp"
#include "nckoszul/nckoszul.hpp"

namespace {

  using namespace nckoszul;

  struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct RunConfig {
    std::string command;
    std::string builtin;
    std::string presentation_file;
    std::string graph_file;
    std::string order;
    std::size_t cap   = 3;
    std::size_t n_max = 0;  // 0: command default
    std::string field = "rational";
    std::string output;
    std::string meta;
    std::string log;
    std::optional<std::string> forbidden;
    std::string generators;
    std::string scope;
    std::size_t max_rules   = 1000;
    std::size_t max_order   = 5;
    bool        families    = true;
    bool        eigen       = false;
    bool        strict      = false;
  };

  // Default precedence for the built-in K3 presentations.
  std::string default_order(std::string const& builtin) {
    if (builtin == "k3") {
      return "c,b,e,f,a,d";
    }
    if (builtin == "gr-k3") {
      return "f,e,d,c,b,a";
    }
    return "";
  }

  Presentation<Rational> load_rational(RunConfig const& cfg) {
    int sources = !cfg.builtin.empty() + !cfg.presentation_file.empty() + !cfg.graph_file.empty();
    if (sources != 1) {
      throw input_error("give exactly one of --builtin, --presentation, --graph");
    }
    if (!cfg.graph_file.empty()) {
      return qn_graph_presentation<Rational>(parse_graph(read_file(cfg.graph_file)));
    }
    if (!cfg.presentation_file.empty()) {
      auto p = parse_presentation<Rational>(read_file(cfg.presentation_file));
      validate(p);
      return p;
    }
    auto const& b = cfg.builtin;
    if (b == "k3") {
      return k3_fixture<Rational>();
    }
    if (b == "gr-k3") {
      return gr_k3_fixture<Rational>();
    }
    if (b == "free3") {
      return free_fixture<Rational>(3);
    }
    if (b.rfind("qn-graph:", 0) == 0) {
      return qn_graph_presentation<Rational>(parse_graph(read_file(b.substr(9))));
    }
    throw input_error("unknown built-in '" + b + "' (k3, gr-k3, free3, qn-graph:<path>)");
  }

  // Text inputs are parsed directly over F so that relations such as
  // "1/3 ab" survive reduction mod p only when they make sense there.
  template <exact_field F>
  Presentation<F> load(RunConfig const& cfg) {
    if constexpr (std::is_same_v<F, Rational>) {
      return load_rational(cfg);
    } else {
      if (!cfg.presentation_file.empty()) {
        auto p = parse_presentation<F>(read_file(cfg.presentation_file));
        validate(p);
        return p;
      }
      return load_rational(cfg).template map_field<F>();
    }
  }

  class Output {
   public:
    explicit Output(std::string const& path) {
      if (!path.empty()) {
        file_.open(path, std::ios::binary);
        if (!file_) {
          throw input_error("cannot write " + path);
        }
      }
    }
    std::ostream& stream() {
      return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    }

   private:
    std::ofstream file_;
  };

  void write_meta(RunConfig const& cfg, int exit_code) {
    if (cfg.meta.empty()) {
      return;
    }
    json m;
    m["command"]   = cfg.command;
    m["source"]    = !cfg.builtin.empty()             ? cfg.builtin
                     : !cfg.presentation_file.empty() ? cfg.presentation_file
                                                      : cfg.graph_file;
    m["field"]     = cfg.field;
    m["order"]     = cfg.order;
    m["cap"]       = cfg.cap;
    m["n_max"]     = cfg.n_max;
    m["exit_code"] = exit_code;
    std::ofstream out(cfg.meta, std::ios::binary);
    out << m.dump(2) << "\n";
  }

  template <exact_field F>
  int cmd_present(RunConfig const& cfg) {
    Output out(cfg.output);
    if (cfg.eigen) {
      if constexpr (std::is_same_v<F, Cyclotomic>) {
        out.stream() << to_text(eigenbasis(load_rational(cfg)));
        return 0;
      } else {
        throw input_error("--eigenbasis needs --field cyclotomic");
      }
    }
    auto p = load<F>(cfg);
    if (!p.relations.empty()) {
      p = canonicalize(std::move(p));
    }
    out.stream() << to_text(p);
    return 0;
  }

  template <exact_field F>
  RewriteSystem<F> run_completion(RunConfig const& cfg, Presentation<F> const& p) {
    std::string order_text = cfg.order.empty() ? default_order(cfg.builtin) : cfg.order;
    auto        order      = order_text.empty()
                                 ? MonomialOrder::descending_ids(p.generators.size())
                                 : MonomialOrder::parse(p.generators, order_text);
    return complete(p, order, cfg.cap, CompletionOptions{cfg.max_rules});
  }

  template <exact_field F>
  int cmd_complete(RunConfig const& cfg) {
    auto p   = load<F>(cfg);
    auto sys = run_completion(cfg, p);
    Output out(cfg.output);
    out.stream() << to_text(sys);
    if (!cfg.log.empty()) {
      std::ofstream log(cfg.log, std::ios::binary);
      log << log_to_json(sys).dump(2) << "\n";
    }
    return 0;
  }

  int cmd_hilbert(RunConfig const& cfg) {
    std::size_t const n_max = cfg.n_max ? cfg.n_max : 12;
    json              j;
    std::optional<Automaton> aut;
    if (cfg.forbidden) {
      std::string letters = cfg.generators.empty() ? "abcdef" : cfg.generators;
      auto        alpha   = Alphabet::letters(letters);
      auto        pats    = parse_patterns(alpha, *cfg.forbidden);
      std::vector<std::string> shown;
      for (auto const& pt : pats) {
        shown.push_back(pt.str(alpha));
      }
      j["source"]    = "forbidden patterns";
      j["forbidden"] = shown;
      aut            = build_automaton(alpha.size(), pats);
    } else {
      auto p    = load<Rational>(cfg);
      auto sys  = run_completion(cfg, p);
      auto pats = forbidden_patterns(sys, cfg.families);
      std::vector<std::string> shown;
      for (auto const& pt : pats) {
        shown.push_back(pt.str(p.generators));
      }
      j["source"]    = p.name;
      j["cap"]       = cfg.cap;
      j["forbidden"] = shown;
      aut            = build_automaton(p.generators.size(), pats);
    }
    auto c = counts(*aut, n_max);
    try {
      j["fit"] = to_json(fit_recurrence(c, cfg.max_order));
    } catch (fit_error const& e) {
      j["counts"] = to_json(c);
      j["error"]  = e.what();
      Output out(cfg.output);
      out.stream() << j.dump(2) << "\n";
      return 1;
    }
    if (cfg.builtin == "k3" || cfg.builtin == "gr-k3") {
      j["notes"] = {"the printed denominator x^3 - 6x^2 + 5x - 1 is the negative of "
                    "the recurrence-consistent one"};
    }
    Output out(cfg.output);
    out.stream() << j.dump(2) << "\n";
    return 0;
  }

  std::optional<CertificateScope> parse_scope(std::string const& s) {
    static std::map<std::string, CertificateScope> const names{
        {"unrestricted", CertificateScope::unrestricted},
        {"all", CertificateScope::all_weights},
        {"decreasing", CertificateScope::decreasing_weights},
        {"reduced", CertificateScope::reduced}};
    if (s.empty()) {
      return std::nullopt;
    }
    auto it = names.find(s);
    if (it == names.end()) {
      throw input_error("unknown scope '" + s + "' (unrestricted, all, decreasing, reduced)");
    }
    return it->second;
  }

  template <exact_field F>
  int cmd_koszul(RunConfig const& cfg) {
    auto        p     = load<F>(cfg);
    std::size_t n_max = cfg.n_max ? cfg.n_max : 5;
    auto        scope = parse_scope(cfg.scope);
    if (!scope) {
      scope = RelationLattice<F>(p).weight_graded() ? CertificateScope::decreasing_weights
                                                    : CertificateScope::unrestricted;
    }
    auto rep = koszul_certificate(p, n_max, *scope);
    json j   = to_json(rep);
    j["presentation"] = p.name;
    j["field"]        = F::name();
    Output out(cfg.output);
    out.stream() << j.dump(2) << "\n";
    return rep.pass() ? 0 : 1;
  }

  int cmd_verify(RunConfig const& cfg) {
    golden::Options opt;
    if (cfg.n_max) {
      opt.n_max = cfg.n_max;
    }
    auto checks = golden::run_all(opt);
    Output out(cfg.output);
    auto&  os    = out.stream();
    int    fails = 0;
    int    warns = 0;
    for (auto const& c : checks) {
      os << golden::status_str(c.status) << "  " << c.id << "  [" << c.location << "]  "
         << c.detail << "\n";
      fails += c.status == golden::Status::fail;
      warns += c.status == golden::Status::warn;
    }
    auto notes = golden::notes(golden::Context{});
    for (auto const& n : notes) {
      os << "NOTE  " << n.id << "  [" << n.location << "]  " << n.detail << "\n";
    }
    if (cfg.strict) {
      os << "\nprinted values that differ from computed ones:\n";
      for (auto const& c : checks) {
        if (!c.printed.empty()) {
          os << "  " << c.id << ": printed " << c.printed << "; computed " << c.detail << "\n";
        }
      }
      for (auto const& n : notes) {
        os << "  " << n.id << ": " << n.detail << "\n";
      }
    }
    os << "\n"
       << checks.size() - static_cast<std::size_t>(fails + warns) << " PASS, " << fails
       << " FAIL, " << warns << " WARN (linear algebra through n_max = " << opt.n_max << ")\n";
    return fails ? 1 : 0;
  }

  template <exact_field F>
  int dispatch_field(RunConfig const& cfg) {
    if (cfg.command == "present") {
      return cmd_present<F>(cfg);
    }
    if (cfg.command == "complete") {
      return cmd_complete<F>(cfg);
    }
    if (cfg.command == "koszul") {
      return cmd_koszul<F>(cfg);
    }
    throw input_error("unknown command");
  }

  int run(RunConfig const& cfg) {
    if (cfg.command == "hilbert") {
      return cmd_hilbert(cfg);
    }
    if (cfg.command == "verify-paper") {
      return cmd_verify(cfg);
    }
    if (cfg.field == "rational") {
      return dispatch_field<Rational>(cfg);
    }
    if (cfg.field == "prime") {
      return dispatch_field<Fp>(cfg);
    }
    if (cfg.field == "cyclotomic") {
      return dispatch_field<Cyclotomic>(cfg);
    }
    throw input_error("unknown field '" + cfg.field + "' (rational, prime, cyclotomic)");
  }

  void add_source(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--builtin,-b", cfg.builtin, "k3, gr-k3, free3 or qn-graph:<path>");
    sub->add_option("--presentation,-p", cfg.presentation_file, "presentation text file");
    sub->add_option("--graph,-g", cfg.graph_file, "graph file (JSON or \"n=3; 1-2 2-3\")");
    sub->add_option("--field", cfg.field, "rational, prime (p = 2147483647) or cyclotomic");
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
    sub->add_option("--meta", cfg.meta, "write run metadata to this file");
  }

  void add_order(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--order", cfg.order, "generator labels, highest first");
    sub->add_option("--cap", cfg.cap, "completion degree cap")->check(CLI::Range(2, 64));
    sub->add_option("--max-rules", cfg.max_rules, "runaway guard for completion");
  }

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App  app{"Noncommutative quadratic algebras: rewriting, Hilbert series, Koszul checks"};
  app.require_subcommand(1);

  auto* present = app.add_subcommand("present", "print a canonical presentation");
  add_source(present, cfg);
  present->add_flag("--eigenbasis", cfg.eigen, "rewrite a K3-type presentation over Q(w)");

  auto* comp = app.add_subcommand("complete", "complete a rewriting system to a degree cap");
  add_source(comp, cfg);
  add_order(comp, cfg);
  comp->add_option("--log", cfg.log, "write the ambiguity log as JSON");

  auto* hil = app.add_subcommand("hilbert", "count normal words and fit the Hilbert series");
  add_source(hil, cfg);
  add_order(hil, cfg);
  hil->add_option("--nmax", cfg.n_max, "count words up to this length (default 12)");
  hil->add_option("--forbidden", cfg.forbidden, "comma-separated patterns, e.g. \"fe,ef*b\"");
  hil->add_option("--generators", cfg.generators, "one-letter generator names (default abcdef)");
  hil->add_option("--max-order", cfg.max_order, "largest recurrence order to try");
  hil->add_flag("!--no-families", cfg.families, "do not generalize e f^j b style families");

  auto* kos = app.add_subcommand("koszul", "distributive-triple certificate through n_max");
  add_source(kos, cfg);
  kos->add_option("--nmax", cfg.n_max, "highest degree (default 5)");
  kos->add_option("--scope", cfg.scope, "unrestricted, all, decreasing or reduced");

  auto* ver = app.add_subcommand("verify-paper", "recompute every golden value");
  ver->add_option("--nmax", cfg.n_max, "highest degree for linear algebra (default 5)")
      ->check(CLI::Range(3, 6));
  ver->add_flag("--strict-paper", cfg.strict, "list printed values that differ");
  ver->add_option("-o,--output", cfg.output, "output file (default stdout)");
  ver->add_option("--meta", cfg.meta, "write run metadata to this file");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  int code = 2;
  try {
    code = run(cfg);
  } catch (completion_error const& e) {
    std::cerr << "nckoszul: " << e.what() << "\n";
    code = 1;
  } catch (fit_error const& e) {
    std::cerr << "nckoszul: " << e.what() << "\n";
    code = 1;
  } catch (std::exception const& e) {
    std::cerr << "nckoszul: " << e.what() << "\n";
    code = 2;
  }
  write_meta(cfg, code);
  return code;
}
