#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "strathom/strathom.hpp"

#ifndef STRATHOM_CORPUS_DIR
#define STRATHOM_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;
using namespace strathom;
using report::Json;
using report::Status;

namespace {

struct Settings {
  std::size_t cutoff = kDefaultCutoff;
  std::string field = "q";
  std::uint32_t seed = kDefaultSeed;
  std::string format = "json";
  std::string corpus_dir = STRATHOM_CORPUS_DIR;
  bool timing = false;
};

struct Invocation {
  cli::Request req;
  std::string file;
  bool all = false;
  std::string only;
};

fs::path locate(const std::string& file, const Settings& s) {
  fs::path p(file);
  if (fs::exists(p) || p.is_absolute()) return p;
  fs::path q = fs::path(s.corpus_dir) / p;
  if (fs::exists(q)) return q;
  return p;  // read_file reports the missing path
}

Status worst(Status a, Status b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

Json outcome_json(const cli::Outcome& o) {
  return {{"status", report::to_string(o.status)}, {"result", o.result}, {"certificates", o.certificates}};
}

template <class K>
Status run_workspace(const Invocation& inv, const Settings& s, Json& out) {
  auto ws = corpus::load_workspace<K>(locate(inv.file, s));
  if (inv.req.command != "run") {
    auto o = cli::execute_reporting(ws, inv.req, s.cutoff);
    out["result"] = o.result;
    out["certificates"] = o.certificates;
    return o.status;
  }
  if (ws.pipeline.empty()) throw ParseError(inv.file + ": no [pipeline] section");
  Json steps = Json::array();
  Status st = Status::positive;
  for (const auto& step : ws.pipeline) {
    cli::Request r;
    r.command = step.command;
    r.seed = s.seed;
    for (const auto& [k, v] : step.options) {
      if (k == "args") {
        std::istringstream is(v);
        for (std::string w; is >> w;) r.args.push_back(w);
      } else if (k == "follow-ups") {
        r.follow_ups = v == "true";
      } else {
        r.opts[k] = v;
      }
    }
    auto o = cli::execute_reporting(ws, r, s.cutoff);
    Json j = outcome_json(o);
    j["command"] = step.command;
    steps.push_back(j);
    st = worst(st, o.status);
  }
  out["result"]["steps"] = steps;
  return st;
}

template <class K>
Status run_corpus(const Invocation& inv, const Settings& s, Json& out) {
  if (!inv.all && inv.only.empty()) throw ParseError("corpus run: pass --all or --only <prefix>");
  auto rep = corpus::run_manifest<K>(s.corpus_dir, inv.only, s.cutoff);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    std::string args;
    for (const auto& a : c.args) args += (args.empty() ? "" : " ") + a;
    checks.push_back({{"name", c.name}, {"query", c.query}, {"args", args}, {"expected", c.expected},
                      {"actual", c.actual}, {"passed", c.passed}});
  }
  out["result"] = {{"dir", s.corpus_dir}, {"passed", rep.passed()}, {"total", rep.checks.size()}, {"checks", checks}};
  return rep.ok() ? Status::positive : Status::negative;
}

template <class K>
Status dispatch(const Invocation& inv, const Settings& s, Json& out) {
  if (inv.req.command == "corpus run") return run_corpus<K>(inv, s, out);
  return run_workspace<K>(inv, s, out);
}

bool use_color() {
  const char* c = std::getenv("STRATHOM_COLOR");
  if (!c) return false;
  std::string v(c);
  if (v == "always" || v == "1") return true;
  return v == "auto" && isatty(STDOUT_FILENO);
}

std::string colorize(std::string md, Status st) {
  const char* code = st == Status::positive ? "\033[32m" : st == Status::negative ? "\033[31m" : "\033[33m";
  const std::string key = std::string("| status | ") + report::to_string(st) + " |";
  auto pos = md.find(key);
  if (pos != std::string::npos)
    md.replace(pos, key.size(), std::string("| status | ") + code + report::to_string(st) + "\033[0m |");
  return md;
}

void add_file(CLI::App* c, Invocation& inv) { c->add_option("file", inv.file, "input file (looked up in the corpus directory too)")->required(); }
void add_hom(CLI::App* c, Invocation& inv) { c->add_option("--hom", inv.req.opts["hom"], "ring map name"); }
void add_algebra(CLI::App* c, Invocation& inv) { c->add_option("--algebra", inv.req.opts["algebra"], "algebra name"); }
void add_degree(CLI::App* c, Invocation& inv, const char* help) { c->add_option("--degree", inv.req.opts["degree"], help); }

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  Invocation inv;
  CLI::App app{"strathom: homological invariants of finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cutoff", s.cutoff, "resolution length bound")->capture_default_str();
  app.add_option("--field", s.field, "q or fp:P")->capture_default_str();
  app.add_option("--seed", s.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--format", s.format, "json or md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  app.add_option("--corpus-dir", s.corpus_dir, "directory with manifest.toml and data files")->capture_default_str();
  app.add_flag("--timing", s.timing, "add wall-clock timing to the report");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& command, const std::string& help) {
    auto* c = parent->add_subcommand(name, help);
    c->callback([&inv, command] { inv.req.command = command; });
    return c;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  auto* alg = group("alg", "algebra queries");
  auto* info = leaf(alg, "info", "alg info", "dimension, quiver, Cartan matrix, Ext^1 quiver, gldim");
  add_file(info, inv);
  add_algebra(info, inv);

  auto* mod = group("mod", "module queries");
  auto* resolve = leaf(mod, "resolve", "mod resolve", "minimal projective resolution");
  add_file(resolve, inv);
  resolve->add_option("module", inv.req.args, "module name")->required();
  auto* ext = leaf(mod, "ext", "mod ext", "dim Ext^n(M, N)");
  add_file(ext, inv);
  ext->add_option("modules", inv.req.args, "M N")->required()->expected(2);
  add_degree(ext, inv, "degrees, e.g. 1 or 0:3 or 1,2 (default: up to pd M)");
  auto* tor = leaf(mod, "tor", "mod tor", "dim Tor_n(M, B) for a ring map's target B, or A");
  add_file(tor, inv);
  tor->add_option("args", inv.req.args, "M and a ring map name or an algebra name")->required()->expected(2);
  add_degree(tor, inv, "degrees (default: up to pd M)");

  auto* hom = group("hom", "ring map certificates");
  for (const char* n : {"check-epi", "check-homepi", "check-surjective", "check-kernel"}) {
    auto* c = leaf(hom, n, std::string("hom ") + n, std::string("certificate: ") + n);
    add_file(c, inv);
    add_hom(c, inv);
  }

  auto* strat = group("strat", "stratifying ideals");
  auto* ci = leaf(strat, "check-ideal", "strat check-ideal", "is AeA a stratifying ideal");
  auto* cs = leaf(&app, "check-strat", "check-strat", "same as strat check-ideal");
  for (auto* c : {ci, cs}) {
    add_file(c, inv);
    add_algebra(c, inv);
    c->add_option("--e", inv.req.opts["e"], "idempotent, e.g. e2+e3")->required();
  }

  auto* c1 = leaf(&app, "construct-one", "construct-one", "tilting construction for an injective homological epi");
  add_file(c1, inv);
  add_hom(c1, inv);
  auto* c2 = leaf(&app, "construct-two", "construct-two", "endomorphisms of the cone of a ring epi");
  add_file(c2, inv);
  add_hom(c2, inv);
  c2->add_flag("--follow-ups", inv.req.follow_ups, "also certify mu and its kernel");

  auto* der = group("derived", "derived category");
  auto* dh = leaf(der, "hom", "derived hom", "dim Hom(X, Y[n]); X, Y are M, M@deg or cone:HOM");
  add_file(dh, inv);
  dh->add_option("complexes", inv.req.args, "X Y")->required()->expected(2);
  add_degree(dh, inv, "shifts n (default 0)");
  auto* dx = leaf(der, "exceptional", "derived exceptional", "Hom(X, X[n]) = k for n = 0 and 0 otherwise");
  add_file(dx, inv);
  dx->add_option("complex", inv.req.args, "X")->required();

  auto* cor = group("corpus", "built-in examples");
  auto* run = leaf(cor, "run", "corpus run", "check every expectation in the manifest");
  run->add_flag("--all", inv.all, "run every check");
  run->add_option("--only", inv.only, "run checks whose name starts with this prefix");

  auto* pipe = leaf(&app, "run", "run", "execute the [pipeline] section of a file");
  add_file(pipe, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  inv.req.seed = s.seed;

  std::string echo;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--format" && i + 1 < argc) {
      ++i;
      continue;
    }
    if (a.rfind("--format=", 0) == 0) continue;
    echo += (echo.empty() ? "" : " ") + a;
  }
  Json out = report::skeleton(echo, s.field, s.cutoff, s.seed);
  Status st = Status::positive;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (s.field == "q") {
      st = dispatch<Rational>(inv, s, out);
    } else if (s.field.rfind("fp:", 0) == 0) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(s.field.substr(3));
      } catch (const std::exception&) {
        throw ParseError("--field: bad prime in '" + s.field + "'");
      }
      ScopedPrimeField guard(p);
      st = dispatch<Fp>(inv, s, out);
    } else {
      throw ParseError("--field must be q or fp:P");
    }
  } catch (const Error& e) {
    std::cerr << "strathom: input error: " << e.what() << "\n";
    return report::exit_code(Status::input_error);
  }
  out["status"] = report::to_string(st);
  if (s.timing)
    out["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (s.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    auto md = report::to_markdown(out);
    std::cout << (use_color() ? colorize(md, st) : md);
  }
  return report::exit_code(st);
}
