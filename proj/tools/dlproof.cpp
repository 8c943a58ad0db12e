// dlproof: command-line front end for proofs, experiments and the server.

#include <algorithm>
#include <csignal>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dlproof/bench.hpp"
#include "dlproof/elh.hpp"
#include "dlproof/error.hpp"
#include "dlproof/fbp.hpp"
#include "dlproof/proofs.hpp"
#include "dlproof/server.hpp"
#include "dlproof/syntax.hpp"
#include "dlproof/tableau.hpp"

using namespace dlproof;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Ontology loadOntology(const std::string& path) {
  return parseOntology(slurp(path), std::filesystem::path(path).stem().string());
}

// Whitespace-separated names; '#' starts a comment. A name is a role if the
// ontology uses it as one.
Signature loadSignature(const std::string& path, const Ontology& o) {
  Signature roles = signatureOf(o);
  Signature s;
  std::istringstream lines(slurp(path));
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      if (roles.roles.count(RoleName(w))) {
        s.roles.insert(RoleName(w));
      } else {
        s.concepts.insert(ConceptName(w));
      }
    }
  }
  return s;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error("cannot write " + out);
  f << text;
}

struct ProveArgs {
  std::string ontology;
  std::string goal;
  std::string method = "elk-minimal";
  std::string measure = "size";
  std::string known;
  std::string out;
  long budgetMs = 300000;
  long perForgetMs = 2000;
  std::int64_t sizeBound = 1000000;
};

int prove(const ProveArgs& a) {
  Ontology o = loadOntology(a.ontology);
  Axiom goal = parseAxiom(a.goal);
  Signature known = a.known.empty() ? Signature{} : loadSignature(a.known, o);
  auto measure = parseMeasure(a.measure);
  if (!measure) throw Error("unknown measure " + a.measure);
  Proof p;
  if (a.method == "elk-minimal") {
    DerivationStructure d = saturate(o);
    p = extractOptimalProof(d, goal, *measure, known);
  } else if (auto m = parseFbpMethod(a.method)) {
    FbpTask t;
    t.ontology = o;
    t.goal = goal;
    t.method = *m;
    t.overallBudget = std::chrono::milliseconds(a.budgetMs);
    t.perForgetTimeout = std::chrono::milliseconds(a.perForgetMs);
    t.sizeBound = a.sizeBound;
    p = fbpProof(t).proof;
  } else {
    throw Error("unknown method " + a.method);
  }
  emit(a.out, proofToJson(p, "proof", a.method, known).dump(2) + "\n");
  return 0;
}

struct BenchArgs {
  std::string ontology;
  std::string signature;
  std::uint64_t seed = 1;
  std::string out;
  std::size_t sample = 500;
  int minSymbols = 5;
  bool noTimings = false;
  std::vector<std::string> methods{"heur", "symb", "size"};
  long budgetMs = 300000;
  long perForgetMs = 2000;
  std::size_t justifications = 8;
  bool nonElh = false;
};

std::string csvText(const std::vector<ResultRow>& rows, bool timings) {
  std::ostringstream s;
  writeCsv(s, rows, timings);
  return s.str();
}

int benchCondense(const BenchArgs& a) {
  Ontology o = loadOntology(a.ontology);
  std::optional<Signature> s;
  if (!a.signature.empty()) s = loadSignature(a.signature, o);
  auto tasks = extractTasks(o, s, s ? a.minSymbols : 0, a.sample, a.seed);
  auto rows = runCondensation(o, tasks, s.value_or(Signature{}));
  emit(a.out, csvText(rows, !a.noTimings));
  std::cerr << rows.size() << " condensation rows\n";
  return 0;
}

int benchFbp(const BenchArgs& a) {
  Ontology o = loadOntology(a.ontology);
  MiningOptions mining;
  mining.justificationBound = a.justifications;
  mining.requireNonElh = a.nonElh;
  MiningReport report = minePatterns(o, mining);
  std::vector<MinedPattern> patterns = report.patterns;
  if (patterns.size() > a.sample) {
    std::vector<MinedPattern> picked;
    std::mt19937_64 rng(a.seed);
    std::sample(patterns.begin(), patterns.end(), std::back_inserter(picked), a.sample, rng);
    patterns = std::move(picked);
  }
  std::vector<FbpMethod> methods;
  for (const auto& m : a.methods) {
    auto parsed = parseFbpMethod(m);
    if (!parsed) throw Error("unknown method " + m);
    methods.push_back(*parsed);
  }
  ComparisonOptions opts;
  opts.budget = std::chrono::milliseconds(a.budgetMs);
  opts.perForgetTimeout = std::chrono::milliseconds(a.perForgetMs);
  auto rows = runFbpComparison(patterns, methods, opts);
  emit(a.out, csvText(rows, !a.noTimings));
  std::cerr << report.goals << " entailments, " << report.patterns.size() << " patterns, "
            << report.exhausted << " exhausted, " << rows.size() << " rows\n";
  return 0;
}

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string staticDir;
  std::string store;
  long budgetMs = 300000;
};

HttpServer* running = nullptr;

int serve(const ServeArgs& a) {
  WorkbenchOptions opts;
  if (!a.store.empty()) opts.storeDir = a.store;
  opts.fbpBudget = std::chrono::milliseconds(a.budgetMs);
  Workbench wb(opts);
  std::optional<std::filesystem::path> dir;
  if (!a.staticDir.empty()) dir = a.staticDir;
  HttpServer server(wb, dir);
  running = &server;
  std::signal(SIGINT, [](int) {
    if (running) running->stop();
  });
  std::cerr << "listening on http://" << a.host << ":" << a.port << "\n";
  if (!server.listen(a.host, a.port)) throw Error("cannot listen on port " + std::to_string(a.port));
  return 0;
}

int classify(const std::string& path) {
  Ontology o = loadOntology(path);
  Fragment f = fragmentOf(o);
  Signature sig = signatureOf(o);
  std::cout << "fragment: " << fragmentName(f) << "\n"
            << "axioms: " << o.size() << "\n"
            << "concept names: " << sig.concepts.size() << "\n"
            << "role names: " << sig.roles.size() << "\n";
  std::vector<Axiom> entailed;
  if (f == Fragment::ELH) {
    entailed = entailedAtomicCIs(o);
  } else if (f == Fragment::ALCH) {
    for (auto a : sig.concepts) {
      for (auto b : sig.concepts) {
        Axiom g = Axiom::inclusion(Concept::atomic(a), Concept::atomic(b));
        if (!(a == b) && entails(o, g)) entailed.push_back(g);
      }
    }
  } else {
    throw FragmentError("classification needs an ALCH ontology");
  }
  for (const auto& g : entailed) std::cout << render(g, RenderStyle::Pretty) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proofs and explanations for description logic entailments"};
  app.require_subcommand(1);

  ProveArgs pa;
  auto* proveCmd = app.add_subcommand("prove", "Write a proof of an entailment as JSON");
  proveCmd->add_option("--ontology", pa.ontology, "Ontology file (functional syntax)")->required();
  proveCmd->add_option("--goal", pa.goal, "Goal axiom, e.g. 'SubClassOf(A B)'")->required();
  proveCmd->add_option("--method", pa.method, "elk-minimal, heur, symb, size or size-weighted")
      ->capture_default_str();
  proveCmd->add_option("--measure", pa.measure, "size, depth or weighted-size (elk-minimal)")
      ->capture_default_str();
  proveCmd->add_option("--known-signature", pa.known, "File with names the reader already knows");
  proveCmd->add_option("--out", pa.out, "Output file; stdout when omitted");
  proveCmd->add_option("--budget-ms", pa.budgetMs, "Overall budget of forgetting-based methods")
      ->capture_default_str();
  proveCmd->add_option("--per-forget-ms", pa.perForgetMs, "Timeout of one forgetting call")
      ->capture_default_str();
  proveCmd->add_option("--size-bound", pa.sizeBound, "Initial bound of the size-optimizing search")
      ->capture_default_str();

  BenchArgs ba;
  auto* benchCmd = app.add_subcommand("bench", "Run an experiment and write CSV rows");
  benchCmd->require_subcommand(1);
  auto common = [&ba](CLI::App* c) {
    c->add_option("--ontology", ba.ontology, "Ontology file")->required();
    c->add_option("--seed", ba.seed, "Sampling seed")->capture_default_str();
    c->add_option("--out", ba.out, "CSV file; stdout when omitted");
    c->add_option("--sample", ba.sample, "Maximum number of tasks")->capture_default_str();
    c->add_flag("--no-timings", ba.noTimings, "Write elapsed_ms as 0 for reproducible files");
  };
  auto* condenseCmd = benchCmd->add_subcommand("condense", "Minimal proofs with and without a known signature");
  common(condenseCmd);
  condenseCmd->add_option("--signature", ba.signature, "Known-signature file");
  condenseCmd->add_option("--min-symbols", ba.minSymbols, "Signature names a task's proof must use")
      ->capture_default_str();
  auto* fbpCmd = benchCmd->add_subcommand("fbp", "Compare forgetting-based methods on mined patterns");
  common(fbpCmd);
  fbpCmd->add_option("--signature", ba.signature, "Ignored; accepted for symmetry with condense");
  fbpCmd->add_option("--methods", ba.methods, "Methods to compare")->delimiter(',')->capture_default_str();
  fbpCmd->add_option("--budget-ms", ba.budgetMs, "Budget per proof")->capture_default_str();
  fbpCmd->add_option("--per-forget-ms", ba.perForgetMs, "Timeout of one forgetting call")
      ->capture_default_str();
  fbpCmd->add_option("--justifications", ba.justifications, "Justifications collected per entailment")
      ->capture_default_str();
  fbpCmd->add_flag("--non-elh", ba.nonElh, "Keep only patterns with an axiom outside ELH");

  ServeArgs sa;
  auto* serveCmd = app.add_subcommand("serve", "Serve the REST API and a static site");
  serveCmd->add_option("--port", sa.port, "TCP port")->capture_default_str();
  serveCmd->add_option("--host", sa.host, "Bind address")->capture_default_str();
  serveCmd->add_option("--static", sa.staticDir, "Directory served at /");
  serveCmd->add_option("--store", sa.store, "Directory for persisted projects and proofs");
  serveCmd->add_option("--budget-ms", sa.budgetMs, "Budget per forgetting-based proof")->capture_default_str();

  std::string classifyPath;
  auto* classifyCmd = app.add_subcommand("classify", "Print the fragment and entailed atomic subsumptions");
  classifyCmd->add_option("--ontology", classifyPath, "Ontology file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*proveCmd) return prove(pa);
    if (*condenseCmd) return benchCondense(ba);
    if (*fbpCmd) return benchFbp(ba);
    if (*serveCmd) return serve(sa);
    if (*classifyCmd) return classify(classifyPath);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
