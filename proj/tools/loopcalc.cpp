// loopcalc: command-line front end.
//
//   loopcalc [--json] eval  --model M EXPR
//   loopcalc [--json] basis --model M --degree K
//   loopcalc [--json] tqft  --model M --genus G --in P --out Q EXPR...
//   loopcalc [--json] check --model M [--window W] [--seed S]
//   loopcalc [--json] show  --model M
//
// Exit status: 0 success, 1 a check failed, 2 usage, parse or evaluation
// error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopcalc/loopcalc.hpp"

namespace {

using nlohmann::json;
using namespace loopcalc;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json degree_json(const Degree& d) {
  if (d.is_zero()) return "zero";
  if (!d.homogeneous()) return "inhomogeneous";
  return d.value;
}

Degree degree_of_value(const Value& v) {
  return std::visit([](const auto& x) { return degree_of(x); }, v);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string modulus_text(const Integer& m) {
  return m == 0 ? "Z" : "Z/" + m.str();
}

int cmd_eval(const ModelDoc& doc, const std::string& expr, bool as_json) {
  const Value v = eval(doc.model, parse_expr(expr, doc.model.algebra()));
  if (as_json) {
    print({{"model", doc.provenance},
           {"expr", expr},
           {"value", format_value(v)},
           {"arity", arity_of(v)},
           {"degree", degree_json(degree_of_value(v))}});
  } else {
    std::cout << format_value(v) << "\n";
  }
  return kOk;
}

int cmd_basis(const ModelDoc& doc, std::int64_t degree, bool as_json) {
  const auto& alg = doc.model.algebra();
  const auto entries = alg.enumerate_basis(degree);
  if (as_json) {
    json list = json::array();
    for (const auto& e : entries)
      list.push_back({{"monomial", format_monomial(alg, e.monomial)},
                      {"modulus", integer_json(e.modulus)}});
    print({{"model", doc.provenance},
           {"degree", degree},
           {"h_degree", to_homological_degree(degree, doc.model.dim())},
           {"basis", list}});
  } else {
    for (const auto& e : entries)
      std::cout << format_monomial(alg, e.monomial) << " "
                << modulus_text(e.modulus) << "\n";
  }
  return kOk;
}

int cmd_tqft(const ModelDoc& doc, std::int64_t g, std::int64_t p, std::int64_t q,
             const std::vector<std::string>& exprs, bool as_json) {
  const Surface s = Surface::make(g, p, q);
  const auto& model = doc.model;
  // Either one expression per incoming circle, or a single arity-p tensor.
  std::vector<TensorElement> parts;
  for (const auto& e : exprs) parts.push_back(as_tensor(eval(model, parse_expr(e, model.algebra()))));
  TensorElement input = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) input = tensor_concat(input, parts[i]);
  const TensorElement out = string_operation(model, s, input);
  const Vanishing cert = vanishing_certificate(s);
  if (as_json) {
    print({{"model", doc.provenance},
           {"surface", {{"genus", g}, {"inputs", p}, {"outputs", q}}},
           {"euler_char", euler_char(s)},
           {"certificate", to_string(cert)},
           {"input", format_tensor(input)},
           {"value", format_tensor(out)},
           {"degree", degree_json(degree_of(out))}});
  } else {
    std::cout << format_tensor(out) << "\n";
  }
  return kOk;
}

int cmd_check(const ModelDoc& doc, std::int64_t window, std::uint64_t seed,
              bool as_json) {
  CheckOptions opt;
  opt.window = window;
  opt.seed = seed;
  const CheckReport report = run_checks(doc, opt);
  if (as_json) {
    json results = json::array();
    for (const auto& r : report.results)
      results.push_back({{"name", r.name},
                         {"status", to_string(r.status)},
                         {"cases", r.cases},
                         {"note", r.note},
                         {"witness", r.witness}});
    print({{"model", report.model},
           {"window", report.window},
           {"seed", report.seed},
           {"passed", report.passed()},
           {"results", results}});
  } else {
    std::cout << format_report(report);
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_show(const ModelDoc& doc, bool as_json) {
  const std::string text = print_model(doc.model);
  if (as_json)
    print({{"model", doc.provenance}, {"text", text}});
  else
    std::cout << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for loop homology, loop coproduct and string operations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output (sorted keys)");

  std::string model_name, expr;
  std::int64_t degree = 0, genus = 0, inputs = 1, outputs = 1, window = 12;
  std::uint64_t seed = 1;
  std::vector<std::string> exprs;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("--model", model_name, "Built-in name or model file")->required();
  eval_cmd->add_option("expr", expr, "Expression")->required();

  auto* basis_cmd = app.add_subcommand("basis", "List normal monomials of a degree");
  basis_cmd->add_option("--model", model_name, "Built-in name or model file")->required();
  basis_cmd->add_option("--degree", degree, "Degree in the loop grading")->required();

  auto* tqft_cmd = app.add_subcommand("tqft", "Evaluate a string operation");
  tqft_cmd->add_option("--model", model_name, "Built-in name or model file")->required();
  tqft_cmd->add_option("--genus", genus, "Genus g")->required();
  tqft_cmd->add_option("--in", inputs, "Incoming circles p")->required();
  tqft_cmd->add_option("--out", outputs, "Outgoing circles q")->required();
  tqft_cmd->add_option("exprs", exprs, "One element per input, or one tensor")->required();

  auto* check_cmd = app.add_subcommand("check", "Run the law and invariant suite");
  check_cmd->add_option("--model", model_name, "Built-in name or model file")->required();
  check_cmd->add_option("--window", window, "Basis window |degree| <= W");
  check_cmd->add_option("--seed", seed, "Seed for random cases");

  auto* show_cmd = app.add_subcommand("show", "Print the model in canonical form");
  show_cmd->add_option("--model", model_name, "Built-in name or model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const ModelDoc doc = load_model(model_name);
    if (*eval_cmd) return cmd_eval(doc, expr, as_json);
    if (*basis_cmd) return cmd_basis(doc, degree, as_json);
    if (*tqft_cmd) return cmd_tqft(doc, genus, inputs, outputs, exprs, as_json);
    if (*check_cmd) return cmd_check(doc, window, seed, as_json);
    if (*show_cmd) return cmd_show(doc, as_json);
  } catch (const ModelParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << model_name << ": " << d.str() << "\n";
    return kUsage;
  } catch (const ExprError& e) {
    std::cerr << "expression error at " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
