#pragma once

// Model file format (line oriented, '#' starts a comment):
//
//   dim = INT
//   euler = INT
//   generator NAME deg = INT [geometric]
//   relation INT * MONOMIAL
//   c0 = EXPR
//   delta NAME = EXPR
//   bracket [NAME,NAME] = EXPR
//   flag simply_connected
//
// Lines may appear in any order. Expressions are ring expressions over the
// declared generators.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loopcalc/builtin.hpp"
#include "loopcalc/expr.hpp"
#include "loopcalc/format.hpp"
#include "loopcalc/model.hpp"

namespace loopcalc {

struct Diagnostic {
  std::size_t line = 0;    // 0 = whole file
  std::size_t column = 0;  // 0 = whole line
  std::string message;

  std::string str() const {
    if (line == 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }
};

class ModelParseError : public std::runtime_error {
 public:
  explicit ModelParseError(std::vector<Diagnostic> diagnostics)
      : std::runtime_error(join(diagnostics)),
        diagnostics_(std::move(diagnostics)) {}
  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  static std::string join(const std::vector<Diagnostic>& ds) {
    std::string out;
    for (const auto& d : ds) {
      if (!out.empty()) out += "\n";
      out += d.str();
    }
    return out;
  }
  std::vector<Diagnostic> diagnostics_;
};

struct ModelDoc {
  std::string source;
  LoopModel model;
  std::string provenance;  // built-in name or file path
};

/// Canonical model text: fixed statement order, explicit relations only.
inline std::string print_model(const LoopModel& model) {
  const auto& alg = model.algebra();
  std::ostringstream os;
  os << "dim = " << model.dim() << "\n";
  os << "euler = " << model.euler().str() << "\n";
  for (const auto& g : alg.generators())
    os << "generator " << g.name << " deg = " << g.degree
       << (g.geometric ? " geometric" : "") << "\n";
  for (const auto& r : alg.relations())
    if (!r.implicit)
      os << "relation " << r.coefficient.str() << "*"
         << format_monomial(alg, r.monomial) << "\n";
  os << "c0 = " << format_element(model.c0()) << "\n";
  if (model.has_delta())
    for (std::size_t i = 0; i < alg.size(); ++i)
      os << "delta " << alg.generator_spec(i).name << " = "
         << format_element(model.delta_of_generator(i)) << "\n";
  if (model.has_bracket())
    for (std::size_t i = 0; i < alg.size(); ++i)
      for (std::size_t j = i; j < alg.size(); ++j)
        os << "bracket [" << alg.generator_spec(i).name << ","
           << alg.generator_spec(j).name << "] = "
           << format_element(model.bracket_of_generators(i, j)) << "\n";
  if (model.simply_connected()) os << "flag simply_connected\n";
  return os.str();
}

namespace detail {

struct PendingExpr {
  std::size_t line;
  std::string key;  // "c0", "delta:NAME", "bracket:L,R"
  std::string left, right;
  std::vector<Token> tokens;
  std::size_t start;
};

class ModelFileParser {
 public:
  explicit ModelFileParser(std::string_view text) : text_(text) {}

  LoopModel parse() {
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text_.size()) {
      std::size_t end = text_.find('\n', begin);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      std::string_view line = text_.substr(begin, end - begin);
      if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      try {
        statement(line_no, line);
      } catch (const ExprError& e) {
        error(line_no, e.column(), e.message());
      }
      begin = end + 1;
    }
    if (!dim_) error(0, 0, "dim required");
    if (!euler_) error(0, 0, "euler required");
    if (pending_c0_ == npos) error(0, 0, "c0 required");
    if (!diags_.empty()) throw ModelParseError(diags_);

    std::shared_ptr<const GradedAlgebra> algebra;
    try {
      algebra = GradedAlgebra::create(generators_, relations_);
    } catch (const ModelError& e) {
      report(e);
      throw ModelParseError(diags_);
    }

    LoopModelData data;
    data.algebra = algebra;
    data.dim = static_cast<std::int64_t>(dim_->first);
    data.euler = euler_->first;
    data.simply_connected = simply_connected_;
    for (const auto& p : pending_) {
      std::optional<Element> value;
      try {
        ExprParser parser(p.tokens, p.start, *algebra);
        value = eval_ring(algebra, ExprAst{parser.parse_all()});
      } catch (const ExprError& e) {
        error(p.line, e.column(), e.message());
      } catch (const std::exception& e) {
        error(p.line, 0, e.what());
      }
      if (!value) continue;
      if (p.key == "c0") {
        data.c0 = *value;
      } else if (p.key.starts_with("delta:")) {
        data.has_delta = true;
        data.delta.emplace_back(p.left, *value);
      } else {
        data.has_bracket = true;
        data.bracket.push_back({p.left, p.right, *value});
      }
    }
    if (!diags_.empty()) throw ModelParseError(diags_);
    try {
      return LoopModel::create(std::move(data));
    } catch (const ModelError& e) {
      report(e);
      throw ModelParseError(diags_);
    }
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  using K = Token::Kind;

  void error(std::size_t line, std::size_t column, std::string message) {
    diags_.push_back({line, column, std::move(message)});
  }

  void report(const ModelError& e) {
    for (const auto& issue : e.issues()) {
      auto it = lines_.find(issue.where);
      error(it == lines_.end() ? 0 : it->second, 0, issue.message);
    }
  }

  static const Token& at(const std::vector<Token>& t, std::size_t i) {
    return i < t.size() ? t[i] : t.back();
  }

  static void expect(const std::vector<Token>& t, std::size_t i, K kind,
                     const char* what) {
    const Token& tok = at(t, i);
    if (tok.kind != kind)
      throw ExprError(tok.column,
                      std::string("expected ") + what +
                          (tok.kind == K::End ? "" : ", found '" + tok.text + "'"));
  }

  static void expect_end(const std::vector<Token>& t, std::size_t i) {
    const Token& tok = at(t, i);
    if (tok.kind != K::End)
      throw ExprError(tok.column, "unexpected '" + tok.text + "'");
  }

  // [-]INT starting at i; advances i.
  static Integer signed_int(const std::vector<Token>& t, std::size_t& i) {
    bool negative = false;
    if (at(t, i).kind == K::Minus) {
      negative = true;
      ++i;
    }
    expect(t, i, K::Int, "an integer");
    Integer v(at(t, i).text);
    ++i;
    return negative ? Integer(-v) : v;
  }

  static std::int64_t small_int(const std::vector<Token>& t, std::size_t& i) {
    const std::size_t col = at(t, i).column;
    Integer v = signed_int(t, i);
    if (v > Integer(std::numeric_limits<std::int64_t>::max()) ||
        v < Integer(std::numeric_limits<std::int64_t>::min()))
      throw ExprError(col, "integer out of range");
    return static_cast<std::int64_t>(v);
  }

  void statement(std::size_t line, std::string_view text) {
    auto t = tokenize(text);
    if (t.front().kind == K::End) return;
    if (t.front().kind != K::Ident)
      throw ExprError(t.front().column, "expected a keyword");
    const std::string& kw = t.front().text;
    std::size_t i = 1;
    if (kw == "dim" || kw == "euler") {
      expect(t, i++, K::Equals, "'='");
      auto& slot = kw == "dim" ? dim_ : euler_;
      if (slot) {
        error(line, 0, kw + " given twice (first on line " +
                           std::to_string(slot->second) + ")");
        return;
      }
      const std::size_t col = at(t, i).column;
      Integer v = signed_int(t, i);
      expect_end(t, i);
      if (kw == "dim") {
        if (v < 1 || v > Integer(std::numeric_limits<std::int64_t>::max()))
          throw ExprError(col, "dim must be a positive integer");
        dim_ = {{v, line}};
      } else {
        euler_ = {{v, line}};
      }
      lines_[kw] = line;
    } else if (kw == "generator") {
      expect(t, i, K::Ident, "a generator name");
      const std::string name = at(t, i++).text;
      expect(t, i, K::Ident, "'deg'");
      if (at(t, i).text != "deg") throw ExprError(at(t, i).column, "expected 'deg'");
      ++i;
      expect(t, i++, K::Equals, "'='");
      const std::int64_t deg = small_int(t, i);
      bool geometric = false;
      if (at(t, i).kind == K::Ident && at(t, i).text == "geometric") {
        geometric = true;
        ++i;
      }
      expect_end(t, i);
      if (auto it = generator_lines_.find(name); it != generator_lines_.end()) {
        error(line, 0, "duplicate generator '" + name + "' (first declared on line " +
                           std::to_string(it->second) + ")");
        return;
      }
      generator_lines_[name] = line;
      lines_["generator:" + name] = line;
      generators_.push_back({name, deg, geometric});
    } else if (kw == "relation") {
      expect(t, i, K::Int, "a positive coefficient");
      Integer k(at(t, i++).text);
      expect(t, i++, K::Star, "'*'");
      RelationSpec rel{k, {}};
      while (true) {
        expect(t, i, K::Ident, "a generator name");
        std::string name = at(t, i++).text;
        std::int64_t e = 1;
        if (at(t, i).kind == K::Caret) {
          ++i;
          expect(t, i, K::Int, "an exponent");
          e = small_int(t, i);
        }
        rel.factors.emplace_back(std::move(name), e);
        if (at(t, i).kind != K::Star) break;
        ++i;
      }
      expect_end(t, i);
      lines_["relation:" + std::to_string(relations_.size())] = line;
      relations_.push_back(std::move(rel));
    } else if (kw == "c0") {
      expect(t, i++, K::Equals, "'='");
      if (pending_c0_ != npos) {
        error(line, 0, "c0 given twice (first on line " +
                           std::to_string(pending_[pending_c0_].line) + ")");
        return;
      }
      pending_c0_ = pending_.size();
      lines_["c0"] = line;
      pending_.push_back({line, "c0", "", "", std::move(t), i});
    } else if (kw == "delta") {
      expect(t, i, K::Ident, "a generator name");
      const std::string name = at(t, i++).text;
      expect(t, i++, K::Equals, "'='");
      lines_["delta:" + name] = line;
      lines_.try_emplace("delta", line);
      pending_.push_back({line, "delta:" + name, name, "", std::move(t), i});
    } else if (kw == "bracket") {
      expect(t, i++, K::LBracket, "'['");
      expect(t, i, K::Ident, "a generator name");
      const std::string left = at(t, i++).text;
      expect(t, i++, K::Comma, "','");
      expect(t, i, K::Ident, "a generator name");
      const std::string right = at(t, i++).text;
      expect(t, i++, K::RBracket, "']'");
      expect(t, i++, K::Equals, "'='");
      const std::string key = "bracket:" + left + "," + right;
      lines_[key] = line;
      pending_.push_back({line, key, left, right, std::move(t), i});
    } else if (kw == "flag") {
      expect(t, i, K::Ident, "a flag name");
      if (at(t, i).text != "simply_connected")
        throw ExprError(at(t, i).column, "unknown flag '" + at(t, i).text + "'");
      ++i;
      expect_end(t, i);
      simply_connected_ = true;
    } else {
      throw ExprError(t.front().column, "unknown statement '" + kw + "'");
    }
  }

  std::string_view text_;
  std::vector<Diagnostic> diags_;
  std::optional<std::pair<Integer, std::size_t>> dim_;
  std::optional<std::pair<Integer, std::size_t>> euler_;
  std::vector<GeneratorSpec> generators_;
  std::vector<RelationSpec> relations_;
  std::map<std::string, std::size_t> generator_lines_;
  std::map<std::string, std::size_t> lines_;
  std::vector<PendingExpr> pending_;
  std::size_t pending_c0_ = npos;
  bool simply_connected_ = false;
};

}  // namespace detail

/// Parses and validates a model file. Throws ModelParseError carrying
/// every diagnostic with its line number.
inline ModelDoc parse_model(std::string_view text, std::string provenance = "") {
  detail::ModelFileParser parser(text);
  LoopModel model = parser.parse();
  return ModelDoc{std::string(text), std::move(model), std::move(provenance)};
}

/// Resolves a built-in name or reads a model file.
inline ModelDoc load_model(const std::string& name_or_path) {
  if (builtin::looks_builtin(name_or_path)) {
    auto spec = builtin::spec_by_name(name_or_path);
    if (!spec)
      throw std::invalid_argument("unknown built-in model '" + name_or_path + "'");
    LoopModel model = validate_model(*spec);
    std::string text = print_model(model);
    return ModelDoc{std::move(text), std::move(model), name_or_path};
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::invalid_argument("cannot open model file '" + name_or_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), name_or_path);
}

}  // namespace loopcalc
