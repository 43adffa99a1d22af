// Copyright 2026 The fockop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockop_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fockop/classify.hpp"
#include "fockop/growth.hpp"
#include "fockop/hankel.hpp"
#include "fockop/operator_expr.hpp"
#include "fockop/oracle.hpp"
#include "fockop/symbol.hpp"
#include "report.hpp"
#include "sweeps.hpp"

namespace fockop::cli {

namespace {

struct Options {
  std::size_t n = 1;
  std::size_t m = 0;
  std::string f;
  std::string g;
  std::string op;
  std::string alpha;
  std::string ray = "ones";
  std::string base;
  std::string t = "64:4096:geometric";
  unsigned jobs = 1;
  std::string format;
  std::uint64_t seed = 42;
  std::uint64_t samples = 10'000'000;
  std::optional<double> tol;
  double window = 0.02;
  bool timing = false;
  bool check = false;
  std::string input;
  std::string method;
  std::optional<std::uint32_t> max_order;
  std::uint32_t max_component = 2;
  std::uint32_t alpha_max = 12;
};

// Failed verification: the report is still printed, exit code 1.
struct VerificationFailed {};

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// "lo:hi:geometric[:ratio]", "lo:hi:linear[:step]" or "t1,t2,...".
std::vector<std::uint64_t> parse_t_grid(const std::string& text) {
  if (text.find(':') == std::string::npos) {
    std::vector<std::uint64_t> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_u64(part, "t value"));
    return out;
  }
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 4) {
    throw std::invalid_argument("--t expects lo:hi:geometric[:ratio] or lo:hi:linear[:step]");
  }
  const std::uint64_t lo = parse_u64(parts[0], "t lower bound");
  const std::uint64_t hi = parse_u64(parts[1], "t upper bound");
  if (parts[2] == "geometric") return geometric_t(lo, hi, parts.size() == 4 ? parse_u64(parts[3], "ratio") : 2);
  if (parts[2] == "linear") return linear_t(lo, hi, parts.size() == 4 ? parse_u64(parts[3], "step") : 1);
  throw std::invalid_argument("unknown t spacing '" + parts[2] + "' (expected geometric or linear)");
}

MultiIndex parse_index(const std::string& text, std::size_t n, const char* what) {
  MultiIndex a = MultiIndex::parse(text);
  if (a.dimension() != n) {
    throw std::invalid_argument(std::string(what) + " '" + text + "' has dimension " + std::to_string(a.dimension()) +
                                ", expected " + std::to_string(n));
  }
  return a;
}

void collect_symbols(const OperatorExpr& expr, std::vector<SymbolPolynomial>& out) {
  struct Visitor {
    std::vector<SymbolPolynomial>& out;
    void operator()(const ToeplitzNode& t) const { out.push_back(t.symbol); }
    void operator()(const HankelProductNode& h) const {
      out.push_back(h.f);
      out.push_back(h.g);
    }
    void operator()(const CompositionNode& c) const {
      collect_symbols(*c.left, out);
      collect_symbols(*c.right, out);
    }
  };
  std::visit(Visitor{out}, expr.node());
}

// Default base: componentwise max of the validity bounds over all symbol pairs.
MultiIndex default_base(const OperatorExpr& expr) {
  std::vector<SymbolPolynomial> symbols;
  collect_symbols(expr, symbols);
  MultiIndex base(expr.dimension());
  for (const auto& a : symbols) {
    for (const auto& b : symbols) base = base.max_with(hankel_validity_bound(a, b));
  }
  return base;
}

RaySpec build_ray(const Options& o, const MultiIndex& default_base_index) {
  RaySpec ray;
  ray.base = o.base.empty() ? default_base_index : parse_index(o.base, o.n, "--base");
  if (o.ray == "ones") {
    ray.direction = MultiIndex::filled(o.n, 1);
  } else {
    const std::string text = o.ray.starts_with("custom:") ? o.ray.substr(7) : o.ray;
    ray.direction = parse_index(text, o.n, "--ray direction");
  }
  ray.t_values = parse_t_grid(o.t);
  ray.validate();
  return ray;
}

std::optional<MonomialKey> single_monomial(const SymbolPolynomial& p) {
  if (p.term_count() != 1) return std::nullopt;
  return p.terms().begin()->first;
}

// Monomial shapes with a predicted growth exponent: T(f), T(f) * T(g), HP(f; g).
std::optional<std::pair<GrowthKind, MonomialPair>> monomial_shape(const OperatorExpr& expr) {
  const std::size_t n = expr.dimension();
  if (const auto* t = std::get_if<ToeplitzNode>(&expr.node())) {
    if (auto k = single_monomial(t->symbol)) {
      return std::pair{GrowthKind::ToeplitzMonoProduct,
                       MonomialPair{k->holomorphic, k->antiholomorphic, MultiIndex(n), MultiIndex(n)}};
    }
  } else if (const auto* h = std::get_if<HankelProductNode>(&expr.node())) {
    auto kf = single_monomial(h->f);
    auto kg = single_monomial(h->g);
    if (kf && kg) {
      return std::pair{GrowthKind::HankelMonoProduct,
                       MonomialPair{kf->holomorphic, kf->antiholomorphic, kg->holomorphic, kg->antiholomorphic}};
    }
  } else if (const auto* c = std::get_if<CompositionNode>(&expr.node())) {
    const auto* l = std::get_if<ToeplitzNode>(&c->left->node());
    const auto* r = std::get_if<ToeplitzNode>(&c->right->node());
    if (l && r) {
      auto kl = single_monomial(l->symbol);
      auto kr = single_monomial(r->symbol);
      if (kl && kr) {
        return std::pair{GrowthKind::ToeplitzMonoProduct,
                         MonomialPair{kl->holomorphic, kl->antiholomorphic, kr->holomorphic, kr->antiholomorphic}};
      }
    }
  }
  return std::nullopt;
}

Json space_json(const Options& o) { return Json{{"n", o.n}, {"m", o.m}}; }

SymbolPolynomial require_symbol(const std::string& text, const char* flag, std::size_t n) {
  if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
  return parse_symbol(text, n);
}

Json symbol_json(const SymbolPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) {
    terms.push_back(Json{{"beta", key.holomorphic.to_string()},
                         {"gamma", key.antiholomorphic.to_string()},
                         {"coefficient", to_json(c)}});
  }
  const auto split_parts = holomorphic_split(p);
  return Json{{"canonical", p.to_string()},
              {"terms", std::move(terms)},
              {"holomorphic", is_holomorphic(p)},
              {"constant", is_constant(p)},
              {"holomorphic_part", split_parts.pure_holomorphic.to_string()},
              {"remainder", split_parts.remainder.to_string()}};
}

Json cmd_parse(const Options& o, Json& inputs) {
  if (o.f.empty() == o.op.empty()) throw std::invalid_argument("parse needs exactly one of -f or --op");
  if (!o.f.empty()) {
    inputs["f"] = o.f;
    return Json{{"symbol", symbol_json(parse_symbol(o.f, o.n))}};
  }
  inputs["op"] = o.op;
  return Json{{"operator", parse_operator(o.op, o.n).to_string()}};
}

Json cmd_classify(const std::string& kind, const Options& o, Json& inputs) {
  const SymbolPolynomial f = require_symbol(o.f, "-f", o.n);
  inputs["f"] = f.to_string();
  Verdict verdict;
  std::optional<OperatorExpr> expr;
  SymbolPolynomial g = f;
  if (kind == "toeplitz-product" || kind == "hankel-product") {
    g = require_symbol(o.g, "-g", o.n);
    inputs["g"] = g.to_string();
    if (kind == "toeplitz-product") {
      verdict = classify_toeplitz_product(f, g);
      expr = toeplitz_product_operator(f, g);
    } else {
      verdict = classify_hankel_product(f, g);
      expr = hankel_product_operator(f, g);
    }
  } else {
    const SingleKind single = kind == "toeplitz"   ? SingleKind::Toeplitz
                              : kind == "hankel"   ? SingleKind::HankelBounded
                                                   : SingleKind::HankelCompact;
    verdict = classify_single(single, f);
    expr = single_operator(single, f);
  }
  Json out{{"verdict", to_json(verdict)}};
  if (o.check) {
    const RaySpec ray = build_ray(o, hankel_validity_bound(f, g));
    const Corroboration c = corroborate(verdict, *expr, SpaceParams(o.n, o.m), ray, o.jobs);
    Json samples = Json::array();
    for (const auto& s : c.samples) samples.push_back(to_json(s));
    out["check"] = Json{{"operator", expr->to_string()},
                        {"consistent", c.consistent},
                        {"detail", c.detail},
                        {"fit", to_json(c.fit)},
                        {"norms", std::move(samples)}};
  }
  return out;
}

Json cmd_apply(const Options& o, Json& inputs) {
  if (o.op.empty()) throw std::invalid_argument("--op is required");
  if (o.alpha.empty()) throw std::invalid_argument("--alpha is required");
  const OperatorExpr expr = parse_operator(o.op, o.n);
  const MultiIndex alpha = parse_index(o.alpha, o.n, "--alpha");
  inputs["op"] = expr.to_string();
  inputs["alpha"] = alpha.to_string();
  return Json{{"result", to_json(apply_operator(expr, BasisExpansion::basis(SpaceParams(o.n, o.m), alpha)))}};
}

Json ray_json(const RaySpec& ray) {
  return Json{{"base", ray.base.to_string()}, {"direction", ray.direction.to_string()}, {"t", ray.t_values}};
}

Json cmd_norms(const Options& o, Json& inputs) {
  if (o.op.empty()) throw std::invalid_argument("--op is required");
  const OperatorExpr expr = parse_operator(o.op, o.n);
  const RaySpec ray = build_ray(o, default_base(expr));
  inputs["op"] = expr.to_string();
  inputs["ray"] = ray_json(ray);
  Json samples = Json::array();
  for (const auto& s : sample_norms(expr, SpaceParams(o.n, o.m), ray, o.jobs)) samples.push_back(to_json(s));
  return Json{{"samples", std::move(samples)}};
}

std::vector<NormSample> read_samples_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty sample input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,alpha,squared_norm") throw std::invalid_argument("sample input must start with t,alpha,squared_norm");
  std::vector<NormSample> out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3) throw std::invalid_argument("line " + std::to_string(row) + ": expected 3 fields");
    out.push_back(NormSample{parse_u64(fields[0], "t"), MultiIndex::parse(fields[1]), BigRational::parse(fields[2])});
  }
  return out;
}

Json cmd_fit(const Options& o, Json& inputs) {
  std::vector<NormSample> samples;
  std::optional<PredictedExponent> predicted;
  if (!o.input.empty()) {
    inputs["input"] = o.input;
    if (o.input == "-") {
      samples = read_samples_csv(std::cin);
    } else {
      std::ifstream file(o.input);
      if (!file) throw std::invalid_argument("cannot open '" + o.input + "'");
      samples = read_samples_csv(file);
    }
  } else {
    if (o.op.empty()) throw std::invalid_argument("fit needs --input or --op");
    const OperatorExpr expr = parse_operator(o.op, o.n);
    const RaySpec ray = build_ray(o, default_base(expr));
    inputs["op"] = expr.to_string();
    inputs["ray"] = ray_json(ray);
    samples = sample_norms(expr, SpaceParams(o.n, o.m), ray, o.jobs);
    if (auto shape = monomial_shape(expr)) predicted = predicted_exponent(shape->first, shape->second, ray);
  }
  ExponentReport report = fit_exponent(samples);
  if (predicted) report.predicted = predicted->exponent;

  const double tol = o.tol.value_or(0.05);
  Json out{{"fit", to_json(report)}, {"tolerance", tol}};
  if (predicted) out["fit"]["degenerate_prediction"] = predicted->degenerate;
  Json samples_json = Json::array();
  for (const auto& s : report.samples) samples_json.push_back(to_json(s));
  out["samples"] = std::move(samples_json);
  if (report.predicted && report.status == FitStatus::Ok) {
    const double p = report.predicted->to_double();
    out["within_tolerance"] = std::abs(report.fitted - p) <= tol;
    Json ratios = Json::array();
    bool in_window = true;
    for (const auto& s : report.samples) {
      if (s.t < 1024) continue;
      for (const auto& s2 : report.samples) {
        if (s2.t != 2 * s.t) continue;
        const double r = ratio_stabilization(s, s2, p);
        in_window = in_window && std::abs(r - 1.0) <= o.window;
        ratios.push_back(Json{{"t", s.t}, {"ratio", r}});
      }
    }
    out["ratio_stabilization"] = Json{{"window", o.window}, {"ratios", ratios}, {"within_window", in_window}};
  }
  return out;
}

Json cmd_verify(const std::string& what, const Options& o, Json& inputs, bool& failed) {
  const SpaceParams sp(o.n, o.m);
  if (what == "orthonormality") {
    const std::uint32_t k = o.max_order.value_or(8);
    inputs["max_order"] = k;
    const auto r = sweep_orthonormality(sp, k, o.jobs);
    failed = r.failures > 0;
    return Json{{"pairs", r.pairs}, {"failures", r.failures}, {"examples", r.examples}, {"passed", !failed}};
  }
  if (what == "hankel-closed-form") {
    inputs["max_component"] = o.max_component;
    inputs["alpha_max"] = o.alpha_max;
    const auto r = sweep_hankel_closed_form(sp, o.max_component, o.alpha_max, o.jobs);
    failed = r.mismatches > 0;
    return Json{{"symbol_pairs", r.symbol_pairs},
                {"coefficients", r.coefficients},
                {"mismatches", r.mismatches},
                {"mismatch_examples", r.mismatch_examples},
                {"passed", !failed},
                {"vanishing_criterion", Json{{"violations", r.vanishing_violations},
                                             {"examples", r.vanishing_examples},
                                             {"holds", r.vanishing_violations == 0}}}};
  }
  // oracle
  const OracleMethod method = o.method.empty()
                                  ? (o.n == 1 ? OracleMethod::RadialQuadrature : OracleMethod::MonteCarlo)
                                  : parse_oracle_method(o.method);
  OracleConfig config;
  config.seed = o.seed;
  config.samples = o.samples;
  config.jobs = o.jobs;
  config = OracleConfig::from_env(config);
  const std::uint32_t k = o.max_order.value_or(o.n == 1 ? 10 : 4);
  const double tol = o.tol.value_or(1e-10);
  inputs["max_order"] = k;
  inputs["method"] = std::string(to_string(method));
  if (method == OracleMethod::MonteCarlo) {
    inputs["seed"] = config.seed;
    inputs["samples"] = config.samples;
  } else {
    inputs["tolerance"] = tol;
  }
  const auto r = sweep_oracle(sp, k, method, config, tol);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"a", row.a.to_string()}, {"exact", row.exact}, {"estimate", to_json(row.estimate)},
                        {"agrees", row.agrees}});
  }
  failed = r.disagreements > 0;
  Json out{{"rows", std::move(rows)}, {"disagreements", r.disagreements}, {"passed", !failed}};
  if (method != OracleMethod::MonteCarlo) out["max_relative_error"] = r.max_relative_error;
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Toeplitz and Hankel operator calculator on Fock-Sobolev spaces", "fockop"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-n", o.n, "complex dimension n >= 1");
  app.add_option("-m", o.m, "Sobolev order m >= 0");
  app.add_option("-f", o.f, "symbol f");
  app.add_option("-g", o.g, "symbol g");
  app.add_option("--op", o.op, "operator expression, e.g. \"T(z*conj(z)) * HP(conj(z); conj(z))\"");
  app.add_option("--alpha", o.alpha, "basis index a1|a2|...");
  app.add_option("--ray", o.ray, "ray direction: ones or d1|d2|...");
  app.add_option("--base", o.base, "ray base a1|a2|...");
  app.add_option("--t", o.t, "t grid lo:hi:geometric[:ratio], lo:hi:linear[:step] or t1,t2,...");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json, table or csv");
  app.add_option("--seed", o.seed, "Monte Carlo seed (FOCKOP_SEED overrides)");
  app.add_option("--samples", o.samples, "Monte Carlo sample count");
  app.add_option("--tol", o.tol, "fit tolerance (fit) or relative tolerance (verify oracle)");
  app.add_option("--window", o.window, "ratio-stabilization window for fit");
  app.add_flag("--timing", o.timing, "add wall-clock timing to the report");
  app.add_flag("--check", o.check, "corroborate a verdict with exact norms along the ray");
  app.add_option("--input", o.input, "sample CSV for fit ('-' for stdin)");
  app.add_option("--method", o.method, "oracle method: quadrature, gamma or monte-carlo");
  app.add_option("--max-order", o.max_order, "largest |alpha| for verify sweeps");
  app.add_option("--max-component", o.max_component, "largest symbol exponent component (hankel-closed-form)");
  app.add_option("--alpha-max", o.alpha_max, "largest alpha component (hankel-closed-form)");
  app.fallthrough();

  auto* parse_cmd = app.add_subcommand("parse", "parse and canonicalize a symbol or operator");
  auto* classify_cmd = app.add_subcommand("classify", "boundedness or compactness verdict");
  classify_cmd->require_subcommand(1);
  classify_cmd->fallthrough();
  for (const char* kind : {"toeplitz-product", "hankel-product", "toeplitz", "hankel", "hankel-compact"}) {
    classify_cmd->add_subcommand(kind)->fallthrough();
  }
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a basis vector e_alpha");
  auto* norms_cmd = app.add_subcommand("norms", "exact squared norms along a ray");
  auto* fit_cmd = app.add_subcommand("fit", "fit the growth exponent of norm samples");
  auto* verify_cmd = app.add_subcommand("verify", "exact and numerical verification sweeps");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  for (const char* what : {"orthonormality", "hankel-closed-form", "oracle"}) {
    verify_cmd->add_subcommand(what)->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::string command;
  std::string format = "json";
  for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
  const auto start = std::chrono::steady_clock::now();
  Json inputs = Json::object();
  Json outputs;
  bool failed = false;
  if (parse_cmd->parsed()) {
    outputs = cmd_parse(o, inputs);
  } else if (classify_cmd->parsed()) {
    outputs = cmd_classify(classify_cmd->get_subcommands().front()->get_name(), o, inputs);
  } else if (apply_cmd->parsed()) {
    outputs = cmd_apply(o, inputs);
  } else if (norms_cmd->parsed()) {
    format = "csv";
    outputs = cmd_norms(o, inputs);
  } else if (fit_cmd->parsed()) {
    outputs = cmd_fit(o, inputs);
  } else {
    outputs = cmd_verify(verify_cmd->get_subcommands().front()->get_name(), o, inputs, failed);
  }
  if (!o.format.empty()) format = o.format;

  Json report{{"command", command}, {"space", space_json(o)}, {"inputs", inputs}, {"outputs", outputs}};
  if (o.timing) {
    report["timing"] = Json{
        {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  }
  render(report, parse_format(format), out);
  return failed ? 1 : 0;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fockop::cli
