#include "sparsef2/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "sparsef2/codes.hpp"
#include "sparsef2/errors.hpp"
#include "sparsef2/graph.hpp"
#include "sparsef2/io.hpp"
#include "sparsef2/kernels.hpp"
#include "sparsef2/reductions.hpp"
#include "sparsef2/solvers.hpp"

namespace sparsef2::cli {

namespace {

const std::set<std::string> kOverrideKeys = {
    "n",     "p",          "D",       "dim",      "length", "c_bal", "simplex_fallback", "sketch_rows", "sketch_delta",
    "K",     "r",          "c",       "Kexp",     "zeta",   "samples", "mem_cap",        "graph",       "homogeneous",
    "weight_cap", "distance",
};

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string hex64(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string support_string(const std::vector<std::size_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i] + 1);
  }
  return out;
}

// Typed access to the --override block.
class Overrides {
 public:
  explicit Overrides(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  std::optional<std::string> text(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> count(const std::string& key) const {
    const auto v = text(key);
    if (!v) return std::nullopt;
    std::size_t pos = 0;
    unsigned long long x = 0;
    try {
      x = std::stoull(*v, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != v->size() || v->empty() || v->front() == '-') {
      throw InputError("--override " + key + " expects a non-negative integer, got '" + *v + "'");
    }
    return static_cast<std::size_t>(x);
  }
  std::optional<double> number(const std::string& key) const {
    const auto v = text(key);
    if (!v) return std::nullopt;
    std::size_t pos = 0;
    double x = 0;
    try {
      x = std::stod(*v, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != v->size() || v->empty()) throw InputError("--override " + key + " expects a number, got '" + *v + "'");
    return x;
  }
  bool flag(const std::string& key) const { return count(key).value_or(0) != 0; }
  std::size_t need_count(const std::string& key) const {
    const auto v = count(key);
    if (!v) throw InputError("missing --override " + key + "=...");
    return *v;
  }

 private:
  const std::map<std::string, std::string>& raw_;
};

template <typename T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag ") + flag);
  return *v;
}

struct Context {
  const RunConfig& cfg;
  Overrides ov;
  std::ostream& out;
  std::string input_text;
  std::uint64_t cap() const { return cfg.cap.value_or(kDefaultEnumerationCap); }
  std::uint64_t mem_cap() const { return ov.count("mem_cap").value_or(kDefaultMemoryCap); }

  const std::string& input() {
    if (input_text.empty()) input_text = io::read_file(need(cfg.in, "--in"));
    return input_text;
  }
  io::Kind kind(io::Kind fallback) const { return cfg.kind ? io::parse_kind(*cfg.kind) : fallback; }

  Provenance step_provenance() {
    Provenance p;
    p.push_back("sparsef2 " + cfg.command + (cfg.op.empty() ? "" : " " + cfg.op));
    if (cfg.in) p.push_back("source fnv1a=" + hex64(fnv1a(input().data(), input().size())));
    const std::string canon = cfg.canonical();
    p.push_back("config " + canon);
    p.push_back("config_hash fnv1a=" + hex64(fnv1a(canon.data(), canon.size())));
    return p;
  }

  // Writes an instance to --out or stdout.
  void write_instance(const io::Instance& inst, Report& report) {
    const std::string text = io::emit_instance(inst);
    if (cfg.out) {
      io::write_file(*cfg.out, text);
      report.add("output", *cfg.out);
      out << report.render(cfg.format);
    } else {
      out << text;
    }
  }

  void write_report(const Report& report) {
    const std::string text = report.render(cfg.format);
    if (cfg.out) io::write_file(*cfg.out, text);
    out << text;
  }
};

void append(Provenance& dst, const Provenance& src) { dst.insert(dst.end(), src.begin(), src.end()); }

// ---- gen-graph ----

int gen_graph(Context& ctx) {
  const std::string family = ctx.cfg.kind.value_or("random");
  const std::size_t n = ctx.ov.need_count("n");
  io::GraphFile file;
  Provenance extra;
  if (family == "random") {
    file.graph = random_graph(n, ctx.ov.number("p").value_or(0.5), ctx.cfg.seed);
  } else if (family == "planted") {
    auto planted = planted_clique(n, need(ctx.cfg.k, "--k"), ctx.ov.number("p").value_or(0.5), ctx.cfg.seed);
    file.graph = std::move(planted.graph);
    std::string w;
    for (std::size_t v : planted.witness) w += " " + std::to_string(v);
    extra.push_back("planted clique" + w);
  } else if (family == "regular") {
    auto reg = random_regular(n, ctx.ov.need_count("D"), ctx.cfg.seed);
    file.graph = std::move(reg.graph);
    extra.push_back("spectral degree=" + std::to_string(reg.cert.degree) + " lambda=" + real(reg.cert.lambda) +
                    " lambda2=" + real(reg.cert.lambda2) + " tolerance=" + real(reg.cert.tolerance));
  } else if (family == "complete") {
    file.graph = Graph::complete(n);
  } else if (family == "cycle") {
    file.graph = Graph::cycle(n);
  } else if (family == "path") {
    file.graph = Graph::path(n);
  } else {
    throw InputError("gen-graph: unknown --kind '" + family + "' (random|planted|regular|complete|cycle|path)");
  }
  file.provenance = ctx.step_provenance();
  append(file.provenance, extra);
  Report report;
  report.add("vertices", std::to_string(file.graph.vertex_count()));
  report.add("edges", std::to_string(file.graph.edge_count()));
  ctx.write_instance(file, report);
  return 0;
}

// ---- reduce ----

PointValueSet load_pointvalues(Context& ctx) {
  const io::Kind kind = ctx.kind(io::Kind::kPointValues);
  if (kind == io::Kind::kVectorSum) return vectorsum_to_pointvalues(io::parse_vectorsum(ctx.input()));
  if (kind == io::Kind::kPointValues) return io::parse_pointvalues(ctx.input());
  throw InputError("expected --kind vectorsum or pointvalues");
}

io::PointsFile load_points(Context& ctx) {
  const io::Kind kind = ctx.kind(io::Kind::kPoints);
  if (kind == io::Kind::kPoints) return io::parse_points(ctx.input());
  if (kind == io::Kind::kPointValues) {
    auto pv = io::parse_pointvalues(ctx.input());
    return io::PointsFile{pv.dim, std::move(pv.points), std::move(pv.provenance)};
  }
  if (kind == io::Kind::kMatrix) {
    auto m = io::parse_matrix(ctx.input());
    return io::PointsFile{m.m.cols(), m.m.row_list(), std::move(m.provenance)};
  }
  throw InputError("expected --kind points, pointvalues or matrix");
}

BalancedOptions balanced_options(const Context& ctx) {
  BalancedOptions opts;
  if (auto c = ctx.ov.number("c_bal")) opts.c_bal = *c;
  if (auto len = ctx.ov.count("length")) opts.length = *len;
  opts.simplex_fallback = ctx.ov.flag("simplex_fallback");
  return opts;
}

ViolaOptions viola_options(const Context& ctx) {
  ViolaOptions v;
  v.cap = ctx.mem_cap();
  v.samples = ctx.ov.count("samples");
  v.seed = ctx.cfg.seed;
  return v;
}

int reduce(Context& ctx) {
  const std::string& op = ctx.cfg.op;
  Report report;
  report.add("reduction", op);
  if (op == "clique2vs") {
    auto g = io::parse_graph(ctx.input());
    auto [inst, layout] = clique_to_vectorsum(g.graph, need(ctx.cfg.k, "--k"));
    inst.provenance = g.provenance;
    append(inst.provenance, ctx.step_provenance());
    report.add("rows", std::to_string(inst.m.rows()));
    report.add("cols", std::to_string(inst.m.cols()));
    report.add("k", std::to_string(inst.k));
    ctx.write_instance(inst, report);
    return 0;
  }
  if (op == "vs2es") {
    const auto src = io::parse_vectorsum(ctx.input());
    EvenSetConfig ec;
    ec.eps = ctx.cfg.eps.value_or(ec.eps);
    ec.c = ctx.ov.number("c").value_or(ec.c);
    ec.sketch_rows = ctx.ov.count("sketch_rows");
    ec.sketch_delta = ctx.ov.count("sketch_delta");
    ec.big_k = ctx.ov.count("K");
    ec.r = ctx.ov.count("r");
    ec.seed = ctx.cfg.seed;
    auto [e, layout] = vectorsum_to_evenset(src, ec);
    append(e.provenance, ctx.step_provenance());
    report.add("variables", std::to_string(layout.variable_count()));
    report.add("equations", std::to_string(e.m.rows()));
    report.add("K", std::to_string(layout.big_k));
    report.add("r", std::to_string(layout.r));
    report.add("threshold", std::to_string(e.k));
    ctx.write_instance(e, report);
    return 0;
  }
  if (op == "amplify" || op == "junta") {
    const auto pv = load_pointvalues(ctx);
    PointValueSet outv;
    if (op == "amplify") {
      outv = amplify_pointvalues(pv, ctx.cfg.eps.value_or(0.1), ctx.cfg.seed, balanced_options(ctx));
    } else {
      const std::size_t k = ctx.cfg.k ? *ctx.cfg.k : need(pv.k, "--k");
      outv = junta_hardness_instance(pv, ctx.cfg.delta.value_or(0.25), k, ctx.cfg.seed, balanced_options(ctx));
    }
    append(outv.provenance, ctx.step_provenance());
    report.add("pairs", std::to_string(outv.size()));
    report.add("eps", real(*outv.eps));
    ctx.write_instance(outv, report);
    return 0;
  }
  if (op == "viola") {
    auto pts = load_points(ctx);
    io::PointsFile outp;
    outp.dim = pts.dim;
    outp.points = viola_shift(pts.points, need(ctx.cfg.deg, "--deg"), viola_options(ctx));
    outp.provenance = pts.provenance;
    append(outp.provenance, ctx.step_provenance());
    report.add("points", std::to_string(outp.points.size()));
    ctx.write_instance(outp, report);
    return 0;
  }
  if (op == "evenset-fool") {
    const auto e = io::parse_evenset(ctx.input());
    io::PointsFile outp;
    outp.dim = e.m.cols();
    outp.points = evenset_to_fooling_points(e, ctx.cfg.eps.value_or(0.1), ctx.cfg.deg.value_or(1), ctx.cfg.seed,
                                            viola_options(ctx), balanced_options(ctx));
    outp.provenance = e.provenance;
    append(outp.provenance, ctx.step_provenance());
    report.add("points", std::to_string(outp.points.size()));
    ctx.write_instance(outp, report);
    return 0;
  }
  if (op == "mdc-tensor" || op == "mdc-walk" || op == "mdc-learn") {
    const auto a = io::parse_matrix(ctx.input());
    if (op == "mdc-learn") {
      PointValueSet pv = mdc_to_learning(a.m, need(ctx.cfg.deg, "--deg"), ctx.mem_cap());
      pv.provenance = a.provenance;
      append(pv.provenance, ctx.step_provenance());
      report.add("pairs", std::to_string(pv.size()));
      ctx.write_instance(pv, report);
      return 0;
    }
    io::Matrix result;
    result.provenance = a.provenance;
    if (op == "mdc-tensor") {
      result.m = mdc_tensor(a.m, ctx.ov.need_count("Kexp"), ctx.mem_cap());
    } else {
      Graph g;
      if (auto path = ctx.ov.text("graph")) {
        g = io::parse_graph(io::read_file(*path)).graph;
      } else {
        g = random_regular(a.m.rows(), ctx.ov.need_count("D"), ctx.cfg.seed).graph;
      }
      result.m = mdc_walk_amplify(a.m, g, need(ctx.cfg.walk_len, "--walk-len"), ctx.mem_cap());
    }
    append(result.provenance, ctx.step_provenance());
    report.add("rows", std::to_string(result.m.rows()));
    report.add("cols", std::to_string(result.m.cols()));
    ctx.write_instance(result, report);
    return 0;
  }
  throw InputError("reduce: unknown reduction '" + op +
                   "' (clique2vs|vs2es|amplify|junta|viola|evenset-fool|mdc-walk|mdc-learn|mdc-tensor)");
}

// ---- solve ----

int solve(Context& ctx) {
  const std::string& op = ctx.cfg.op;
  SolveReport r;
  if (op == "evenset-min") {
    const auto e = io::parse_evenset(ctx.input());
    EvenSetSolveOptions opts;
    opts.weight_cap = ctx.ov.count("weight_cap");
    opts.enumeration_cap = ctx.cap();
    r = evenset_min_weight(e, opts);
  } else {
    const auto inst = io::parse_vectorsum(ctx.input());
    SolveOptions opts;
    opts.enumeration_cap = ctx.cap();
    opts.memory_cap = ctx.mem_cap();
    if (op == "exhaustive") {
      r = solve_exhaustive(inst, opts);
    } else if (op == "mitm") {
      r = solve_mitm(inst, opts);
    } else if (op == "bfs") {
      r = solve_bfs(inst, opts);
    } else {
      throw InputError("solve: unknown algorithm '" + op + "' (exhaustive|mitm|bfs|evenset-min)");
    }
  }
  Report report;
  report.add("algorithm", r.algorithm);
  report.add("feasible", r.feasible ? "yes" : "no");
  if (r.weight) report.add("weight", std::to_string(*r.weight));
  if (r.witness) {
    report.add("witness", r.witness->to_string());
    report.add("support", support_string(r.witness->support()));
  }
  report.add("work", std::to_string(r.work));
  ctx.write_report(report);
  return r.feasible ? 0 : 1;
}

// ---- verify ----

int verify(Context& ctx) {
  const std::string& op = ctx.cfg.op;
  Report report;
  report.add("suite", op);
  bool ok = true;

  if (op == "balance") {
    const double eps = ctx.cfg.eps.value_or(0.1);
    LinearCode code;
    if (ctx.cfg.in) {
      code = io::parse_code(ctx.input()).to_code();
    } else {
      code = balanced_code(ctx.ov.need_count("dim"), eps, ctx.cfg.seed, balanced_options(ctx));
    }
    const WeightRange w = codeword_weight_range(code.require_generator(), Exec::kSerial);
    const double t = static_cast<double>(code.length);
    ok = w.zero_messages == 0 && w.min_weight >= (0.5 - eps) * t && w.max_weight <= (0.5 + eps) * t;
    report.add("length", std::to_string(code.length));
    report.add("dim", std::to_string(code.dim));
    report.add("min_weight", std::to_string(w.min_weight));
    report.add("max_weight", std::to_string(w.max_weight));
    report.add("codewords", std::to_string(w.codewords));
  } else if (op == "bch") {
    const std::size_t n = ctx.ov.need_count("n");
    const std::size_t delta = ctx.ov.need_count("distance");
    const BitMat r = bch_parity_check(n, delta);
    const std::size_t bound = bch_row_bound(n, delta);
    if (binomial_prefix(n, delta - 1) > ctx.cap()) throw ResourceError("verify bch: enumeration exceeds the cap");
    const kernels::ColumnPack cols(r.columns(), r.rows());
    const std::vector<std::uint64_t> zero(cols.words(), 0);
    const auto hit = kernels::find_lightest_combination(cols, zero, 1, delta - 1, Exec::kParallel);
    ok = !hit.support && r.rows() <= bound;
    report.add("rows", std::to_string(r.rows()));
    report.add("row_bound", std::to_string(bound));
    report.add("checked", std::to_string(hit.work));
    if (hit.support) report.add("counterexample", support_string(*hit.support));
  } else if (op == "density") {
    LinearCode code;
    if (ctx.cfg.in) {
      code = io::parse_code(ctx.input()).to_code();
    } else {
      code = best_balanced_of_length(ctx.ov.need_count("dim"), ctx.ov.need_count("length"), ctx.cfg.seed, 1);
    }
    const DensityReport d = product_density_check(code, ctx.cfg.cap.value_or(std::uint64_t{1} << 20));
    ok = d.passes;
    report.add("distance", std::to_string(d.distance));
    report.add("bound", std::to_string(d.bound));
    report.add("checked", std::to_string(d.checked));
    if (d.min_weight) report.add("min_weight", std::to_string(*d.min_weight));
  } else if (op == "bias") {
    const auto pts = load_points(ctx);
    const BiasReport b = distribution_bias(pts.points, need(ctx.cfg.k, "--k"), ctx.cap());
    report.add("bias", real(b.bias));
    report.add("support", support_string(b.support));
    if (ctx.cfg.eps) ok = b.bias <= *ctx.cfg.eps;
  } else if (op == "parity") {
    const auto pv = load_pointvalues(ctx);
    const std::size_t k = ctx.cfg.k ? *ctx.cfg.k : need(pv.k, "--k");
    const ParityAgreement best = best_parity_agreement(pv, k, ctx.ov.flag("homogeneous"), ctx.cap());
    report.add("agreement", real(best.fraction()));
    report.add("support", support_string(best.support));
    report.add("constant", best.constant ? "1" : "0");
    if (ctx.cfg.eps) {
      // Every form that misses some pair must agree on [1/2 - eps, 1/2 + eps].
      const double lo = 0.5 - *ctx.cfg.eps;
      const double hi = 0.5 + *ctx.cfg.eps;
      std::size_t outside = 0;
      for (const auto& f : all_parity_agreements(pv, k, ctx.cap())) {
        for (std::uint64_t agreed : {f.agreed, f.total - f.agreed}) {
          if (agreed == f.total) continue;
          const double frac = static_cast<double>(agreed) / static_cast<double>(f.total);
          if (frac < lo || frac > hi) ++outside;
        }
      }
      report.add("outside_interval", std::to_string(outside));
      ok = outside == 0;
    } else {
      ok = best.agreed == best.total;
    }
  } else if (op == "junta") {
    const auto pv = load_pointvalues(ctx);
    const std::size_t k = ctx.cfg.k ? *ctx.cfg.k : need(pv.k, "--k");
    const JuntaAgreement j = best_junta_agreement(pv, k, ctx.cap());
    report.add("agreement", real(j.fraction()));
    report.add("support", support_string(j.support));
    if (auto delta = ctx.cfg.delta ? ctx.cfg.delta : pv.delta) ok = j.fraction() <= 0.5 + *delta;
  } else if (op == "poly") {
    const auto pts = load_points(ctx);
    const std::size_t d = need(ctx.cfg.deg, "--deg");
    const PolyAgreement p = poly_agreement_bound(pts.points, need(ctx.cfg.k, "--k"), d, ctx.cap());
    report.add("advantage", real(p.advantage()));
    report.add("support", support_string(p.support));
    if (ctx.cfg.eps) {
      const double bound = 16.0 * std::pow(*ctx.cfg.eps, 1.0 / std::ldexp(1.0, static_cast<int>(d) - 1));
      report.add("bound", real(bound));
      ok = p.advantage() <= bound;
    }
  } else if (op == "roundtrip") {
    const io::Kind kind = io::parse_kind(need(ctx.cfg.kind, "--kind"));
    const auto first = io::parse_instance(ctx.input(), kind);
    const std::string emitted = io::emit_instance(first);
    const auto second = io::parse_instance(emitted, kind);
    ok = first == second && io::emit_instance(second) == emitted;
    report.add("kind", io::kind_name(kind));
    report.add("bytes", std::to_string(emitted.size()));
  } else {
    throw InputError("verify: unknown suite '" + op + "' (balance|bch|density|bias|parity|junta|poly|roundtrip)");
  }
  report.add("result", ok ? "verified" : "refuted");
  ctx.write_report(report);
  return ok ? 0 : 1;
}

void build_app(CLI::App& app, RunConfig& cfg) {
  app.description("Sparse solutions of F2 linear systems: instance reductions, solvers and verifiers");
  app.add_option("command", cfg.command, "gen-graph | reduce | solve | verify")->required();
  app.add_option("op", cfg.op, "reduction, solver or verification suite");
  app.add_option("--in", cfg.in, "input file");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--kind", cfg.kind, "input kind, or graph family for gen-graph");
  app.add_option("--k", cfg.k, "sparsity / support parameter");
  app.add_option("--eps", cfg.eps, "bias parameter");
  app.add_option("--delta", cfg.delta, "junta soundness parameter");
  app.add_option("--deg", cfg.deg, "polynomial degree / row-combination size");
  app.add_option("--walk-len", cfg.walk_len, "walk length in vertices");
  app.add_option("--alg", cfg.alg, "algorithm tag (alternative to the positional solver name)");
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--cap", cfg.cap, "enumeration cap");
  app.add_option("--override", [&cfg](const std::vector<std::string>& items) {
       for (const auto& item : items) {
         const auto eq = item.find('=');
         if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--override", "expected KEY=VAL");
         const std::string key = item.substr(0, eq);
         if (!kOverrideKeys.count(key)) throw CLI::ValidationError("--override", "unknown key '" + key + "'");
         cfg.overrides[key] = item.substr(eq + 1);
       }
       return true;
     }, "KEY=VAL (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "lines"}));
}

}  // namespace

std::string RunConfig::canonical() const {
  std::ostringstream s;
  s << "command=" << command << " op=" << op << " seed=" << seed;
  if (kind) s << " kind=" << *kind;
  if (alg) s << " alg=" << *alg;
  if (k) s << " k=" << *k;
  if (eps) s << " eps=" << real(*eps);
  if (delta) s << " delta=" << real(*delta);
  if (deg) s << " deg=" << *deg;
  if (walk_len) s << " walk_len=" << *walk_len;
  if (cap) s << " cap=" << *cap;
  for (const auto& [key, value] : overrides) s << ' ' << key << '=' << value;
  return s.str();
}

std::string Report::render(const std::string& format) const {
  std::string out;
  const std::string sep = format == "lines" ? "=" : ": ";
  for (const auto& [key, value] : items_) out += key + sep + value + '\n';
  return out;
}

RunConfig parse_command_line(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"sparsef2"};
  build_app(app, cfg);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }
  return cfg;
}

int run(const RunConfig& given, std::ostream& out) {
  RunConfig cfg = given;
  if (cfg.alg && cfg.op.empty()) cfg.op = *cfg.alg;
  Context ctx{cfg, Overrides(cfg.overrides), out, {}};
  if (cfg.command == "gen-graph") return gen_graph(ctx);
  if (cfg.command == "reduce") return reduce(ctx);
  if (cfg.command == "solve") return solve(ctx);
  if (cfg.command == "verify") return verify(ctx);
  throw InputError("unknown command '" + cfg.command + "' (gen-graph|reduce|solve|verify)");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"sparsef2"};
  build_app(app, cfg);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInputError);
  }
  try {
    return run(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInputError);
  }
}

}  // namespace sparsef2::cli
