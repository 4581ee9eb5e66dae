#pragma once

// Command-line front end. Every report is a JSON object with sorted keys;
// `--format text` prints the same fields one per line and `--format csv`
// is accepted only for matrices.
//
// Exit codes: 0 success, 1 failed internal assertion or failed verification,
// 2 invalid parameters.

#include "symprod/acceptance.hpp"
#include "symprod/serialize.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symprod {

namespace cli_detail {

constexpr int kSoftMaxGenus = 8;
constexpr int kSoftMaxPower = 6;

struct Params {
  std::optional<int> g;
  std::optional<int> n;
  std::optional<long long> k;
  std::optional<int> degree;
  std::string format = "json";
  std::string suite;
};

inline int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing required flag ") + flag);
  return *v;
}

inline CurveContext context(const Params& p, std::optional<int> default_n = std::nullopt) {
  const int g = require(p.g, "--g");
  const int n = p.n ? *p.n : require(default_n, "--n");
  return CurveContext(g, n);
}

// Commands that build the tensor-power model are held to documented limits.
inline void soft_limits(const CurveContext& ctx) {
  if (ctx.g > kSoftMaxGenus)
    throw InvalidArgument("g = " + std::to_string(ctx.g) + " exceeds the limit g <= " + std::to_string(kSoftMaxGenus));
  if (ctx.n > kSoftMaxPower)
    throw InvalidArgument("n = " + std::to_string(ctx.n) + " exceeds the limit n <= " + std::to_string(kSoftMaxPower));
}

inline std::string as_text(const json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  return out;
}

struct Output {
  json report;
  std::optional<std::string> csv;
  int status = 0;
};

inline Output betti_cmd(const Params& p) {
  const CurveContext ctx = context(p);
  json b = json::array();
  for (auto x : betti_numbers(ctx)) b.push_back(x);
  return {{{"g", ctx.g}, {"n", ctx.n}, {"betti", b}}};
}

inline Output euler_cmd(const Params& p) {
  const CurveContext ctx = context(p);
  return {{{"g", ctx.g}, {"n", ctx.n}, {"euler_characteristic", to_json(euler_characteristic(ctx))}}};
}

inline Output signature_cmd(const Params& p) {
  const CurveContext ctx = context(p, 2);
  soft_limits(ctx);
  return {{{"g", ctx.g}, {"n", ctx.n}, {"signature", signature(intersection_matrix(ctx))}}};
}

inline Output intersection_matrix_cmd(const Params& p) {
  const CurveContext ctx = context(p, 2);
  soft_limits(ctx);
  const IntersectionMatrix im = intersection_matrix(ctx);
  return {to_json(im), to_csv(im)};
}

inline Output chern_cmd(const Params& p) {
  const CurveContext ctx = context(p, 2);
  soft_limits(ctx);
  const CohomologyRing ring(ctx);
  const auto c = chern_classes(ring);
  return {{{"g", ctx.g}, {"n", ctx.n}, {"c1", to_json(c.c1)}, {"c2", to_json(c.c2)}}};
}

inline Output canonical_cmd(const Params& p) {
  const CurveContext ctx = context(p, 2);
  soft_limits(ctx);
  const CohomologyRing ring(ctx);
  const PoincareDuality pd(ring);
  const auto k = canonical_class(pd);
  return {{{"g", ctx.g}, {"n", ctx.n}, {"K_coh", to_json(k.cohomology)}, {"K_hom", to_json(k.homology)}}};
}

inline Output clifford_cmd(const Params& p) {
  const CurveContext ctx = context(p);
  soft_limits(ctx);
  return {to_json(clifford_bound(CohomologyRing(ctx)))};
}

inline Output obstruction_cmd(const Params& p) {
  const CurveContext ctx = context(p, 2);
  if (ctx.n != 2) throw InvalidArgument("obstruction is defined for n = 2");
  soft_limits(ctx);
  if (!p.k) throw InvalidArgument("missing required flag --k");
  const CohomologyRing ring(ctx);
  const PoincareDuality pd(ring);
  return {to_json(km_admissible(pd, Integer(*p.k)))};
}

inline Output rational_curves_cmd(const Params& p) {
  const int g = require(p.g, "--g");
  return {{{"g", g}, {"degrees", rational_curve_degrees(g)}}};
}

inline Output primitive_cmd(const Params& p) {
  const CurveContext ctx = context(p);
  const int m = p.degree ? *p.degree : 2;
  json basis = json::array();
  for (const auto& x : primitive_basis(ctx, m)) basis.push_back(to_json(x));
  return {{{"g", ctx.g}, {"n", ctx.n}, {"degree", m}, {"basis", basis}}};
}

inline json criterion_json(const acceptance::CriterionResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}};
}

inline Output verify_cmd(const Params& p) {
  if (p.suite == "macdonald") {
    const CurveContext ctx = context(p);
    soft_limits(ctx);
    const auto s = acceptance::verify_macdonald(ctx.g, ctx.n);
    return {{{"relations_checked", s.relations_checked}, {"failures", s.failures}}, std::nullopt, s.failures == 0 ? 0 : 1};
  }
  int id = 0;
  if (p.suite != "acceptance" && p.suite != "all") {
    try {
      std::size_t used = 0;
      id = std::stoi(p.suite, &used);
      if (used != p.suite.size()) throw std::invalid_argument(p.suite);
    } catch (const std::logic_error&) {
      throw InvalidArgument("unknown suite '" + p.suite + "' (expected macdonald, acceptance, or 1..12)");
    }
  }
  json list = json::array();
  bool ok = true;
  for (const auto& r : acceptance::run(id)) {
    list.push_back(criterion_json(r));
    ok = ok && r.passed;
  }
  return {{{"suite", p.suite}, {"passed", ok}, {"criteria", list}}, std::nullopt, ok ? 0 : 1};
}

}  // namespace cli_detail

/// Parses argv, runs one subcommand and writes its report to `out`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Exact homology and cohomology of symmetric products of a surface", "symprod"};
  app.require_subcommand(1);
  Params p;

  struct Command {
    const char* name;
    const char* help;
    std::function<Output(const Params&)> run;
    std::vector<std::string> flags;
  };
  const std::vector<Command> commands = {
      {"betti", "Betti numbers of C^(n)", betti_cmd, {"g", "n"}},
      {"euler", "Euler characteristic of C^(n)", euler_cmd, {"g", "n"}},
      {"signature", "signature of the intersection form (n defaults to 2)", signature_cmd, {"g", "n"}},
      {"intersection-matrix", "middle-degree intersection matrix (n defaults to 2)", intersection_matrix_cmd, {"g", "n"}},
      {"chern", "first and second Chern classes", chern_cmd, {"g", "n"}},
      {"canonical", "canonical class and its homology dual", canonical_cmd, {"g", "n"}},
      {"clifford", "Clifford bound with ring-level certificate", clifford_cmd, {"g", "n"}},
      {"obstruction", "characteristic and Kervaire-Milnor test for k u in C^(2)", obstruction_cmd, {"g", "n", "k"}},
      {"rational-curves", "degrees k allowed by adjunction for rational curves", rational_curves_cmd, {"g"}},
      {"primitive", "integral primitives of the Pontryagin ring (degree defaults to 2)", primitive_cmd, {"g", "n", "degree"}},
      {"verify", "run a verification suite", verify_cmd, {"g", "n", "suite"}},
  };

  std::map<const CLI::App*, const Command*> dispatch;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    for (const auto& f : c.flags) {
      if (f == "g") sub->add_option("--g", p.g, "genus g >= 0");
      if (f == "n") sub->add_option("--n", p.n, "symmetric power n >= 1");
      if (f == "k") sub->add_option("--k", p.k, "multiple of the spherical class");
      if (f == "degree") sub->add_option("--degree", p.degree, "homological degree");
      if (f == "suite") sub->add_option("--suite", p.suite, "macdonald, acceptance, or a criterion number 1..12")->required();
    }
    sub->add_option("--format", p.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    dispatch[sub] = &c;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Command* cmd = nullptr;
  for (const auto* sub : app.get_subcommands()) cmd = dispatch.at(sub);

  try {
    Output o = cmd->run(p);
    if (p.format == "csv") {
      if (!o.csv) throw InvalidArgument("csv output is only available for intersection-matrix");
      out << *o.csv;
    } else if (p.format == "text") {
      out << as_text(o.report);
    } else {
      out << o.report.dump() << "\n";
    }
    return o.status;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace symprod
