// Copyright 2026 The Conga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conga/games/game_file.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

namespace conga::games {
namespace {

using csp::Domain;
using csp::Relation;

enum class Tok {
  kIdent,
  kInt,
  kString,
  kPunct,  // ( ) { } , * + - = <= >= ..
  kEnd,    // end of statement
};

struct Token {
  Tok kind;
  std::string text;
  Value value = 0;
  int line = 0;
};

// Splits the input into statements. A newline ends a statement unless a
// bracket is open.
std::vector<std::vector<Token>> Lex(std::string_view in) {
  std::vector<std::vector<Token>> statements;
  std::vector<Token> cur;
  int line = 1;
  int depth = 0;
  auto flush = [&] {
    if (!cur.empty()) statements.push_back(std::move(cur));
    cur.clear();
  };
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (c == '\n') {
      if (depth == 0) flush();
      ++line;
      ++i;
    } else if (c == ';') {
      // Statement separator, for one-liners.
      if (depth != 0) throw GameFileError(line, "';' inside brackets");
      flush();
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < in.size() && in[i] != '\n') ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '_')) {
        ++j;
      }
      cur.push_back({Tok::kIdent, std::string(in.substr(i, j - i)), 0, line});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) {
        ++j;
      }
      Value v = 0;
      const auto res = std::from_chars(in.data() + i, in.data() + j, v);
      if (res.ec != std::errc()) {
        throw GameFileError(line, "integer out of range: " +
                                      std::string(in.substr(i, j - i)));
      }
      cur.push_back({Tok::kInt, std::string(in.substr(i, j - i)), v, line});
      i = j;
    } else if (c == '"') {
      std::string s;
      ++i;
      while (true) {
        if (i >= in.size() || in[i] == '\n') {
          throw GameFileError(line, "unterminated string");
        }
        if (in[i] == '"') break;
        if (in[i] == '\\' && i + 1 < in.size()) ++i;
        s += in[i++];
      }
      ++i;
      cur.push_back({Tok::kString, std::move(s), 0, line});
    } else {
      std::string p(1, c);
      if ((c == '<' || c == '>') && i + 1 < in.size() && in[i + 1] == '=') {
        p += '=';
      } else if (c == '.' && i + 1 < in.size() && in[i + 1] == '.') {
        p += '.';
      } else if (std::string_view("(){},*+-=").find(c) == std::string::npos) {
        throw GameFileError(line, std::string("unexpected character '") + c +
                                      "'");
      }
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') {
        if (--depth < 0) throw GameFileError(line, "unbalanced '" + p + "'");
      }
      cur.push_back({Tok::kPunct, p, 0, line});
      i += p.size();
    }
  }
  if (depth != 0) throw GameFileError(line, "unclosed bracket at end of input");
  flush();
  return statements;
}

struct VarDecl {
  std::string name;
  Domain domain;
  int owner = -1;
  int line = 0;
};

struct PendingConstraint {
  int player = -1;  // -1: hard
  csp::Constraint c;
};

class Parser {
 public:
  Game Parse(std::string_view text) {
    for (auto& st : Lex(text)) {
      toks_ = std::move(st);
      pos_ = 0;
      Statement();
    }
    return Build();
  }

 private:
  const Token& Peek() const {
    static const Token kEnd{Tok::kEnd, "end of statement", 0, 0};
    return pos_ < toks_.size() ? toks_[pos_] : kEnd;
  }
  int Line() const {
    return pos_ < toks_.size() ? toks_[pos_].line : toks_.back().line;
  }
  [[noreturn]] void Fail(const std::string& msg) const {
    throw GameFileError(Line(), msg);
  }
  std::string Describe(const Token& t) const {
    return t.kind == Tok::kEnd ? t.text : "'" + t.text + "'";
  }

  bool IsPunct(const char* p) const {
    return Peek().kind == Tok::kPunct && Peek().text == p;
  }
  bool Accept(const char* p) {
    if (!IsPunct(p)) return false;
    ++pos_;
    return true;
  }
  void Expect(const char* p) {
    if (!Accept(p)) {
      Fail(std::string("expected '") + p + "', found " + Describe(Peek()));
    }
  }
  void ExpectEnd() {
    if (Peek().kind != Tok::kEnd) {
      Fail("unexpected " + Describe(Peek()) + " at end of statement");
    }
  }

  // An identifier or a quoted string.
  std::string Name(const char* what) {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent && t.kind != Tok::kString) {
      Fail(std::string("expected ") + what + ", found " + Describe(t));
    }
    ++pos_;
    return t.text;
  }
  bool AtName() const {
    return Peek().kind == Tok::kIdent || Peek().kind == Tok::kString;
  }

  Value Int() {
    bool negative = false;
    while (IsPunct("-") || IsPunct("+")) negative ^= Toks(pos_++).text == "-";
    if (Peek().kind != Tok::kInt) Fail("expected integer, found " + Describe(Peek()));
    const Value v = Toks(pos_++).value;
    return negative ? -v : v;
  }
  const Token& Toks(std::size_t k) const { return toks_[k]; }

  VarId Var() {
    const std::string name = Name("variable");
    const auto it = var_index_.find(name);
    if (it == var_index_.end()) {
      --pos_;
      Fail("unknown variable '" + name + "'");
    }
    return VarId{it->second};
  }
  int Player() {
    const std::string name = Name("player");
    const auto it = player_index_.find(name);
    if (it == player_index_.end()) {
      --pos_;
      Fail("unknown player '" + name + "'");
    }
    return it->second;
  }

  // "( a b c )", commas optional.
  template <typename F>
  void List(F item) {
    if (Accept("(")) {
      while (!Accept(")")) {
        item();
        Accept(",");
      }
      return;
    }
    Fail("expected '(', found " + Describe(Peek()));
  }

  Domain ParseDomain() {
    if (Accept("{")) {
      std::vector<Value> vals;
      while (!Accept("}")) {
        vals.push_back(Int());
        Accept(",");
      }
      if (vals.empty()) Fail("empty domain");
      return Domain::FromValues(std::move(vals));
    }
    const Value lo = Int();
    Expect("..");
    const Value hi = Int();
    if (lo > hi) Fail("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
    return Domain::Interval(lo, hi);
  }

  void Statement() {
    const int line = Line();
    const Token head = Peek();
    if (head.kind != Tok::kIdent) Fail("expected a statement keyword, found " + Describe(head));
    ++pos_;
    const std::string& kw = head.text;
    if (kw == "game") {
      if (name_) Fail("game name given twice");
      name_ = Name("game name");
    } else if (kw == "var") {
      std::vector<std::string> names;
      while (AtName() && !(Peek().kind == Tok::kIdent && Peek().text == "in")) {
        names.push_back(Name("variable"));
        Accept(",");
      }
      if (names.empty()) Fail("expected variable name");
      if (!(Peek().kind == Tok::kIdent && Peek().text == "in")) {
        Fail("expected 'in', found " + Describe(Peek()));
      }
      ++pos_;
      const Domain d = ParseDomain();
      for (auto& n : names) {
        if (var_index_.count(n)) Fail("variable '" + n + "' declared twice");
        var_index_[n] = static_cast<int>(vars_.size());
        vars_.push_back({n, d, -1, line});
      }
    } else if (kw == "player") {
      const std::string name = Name("player name");
      if (player_index_.count(name)) Fail("player '" + name + "' declared twice");
      if (!(Peek().kind == Tok::kIdent && Peek().text == "controls")) {
        Fail("expected 'controls', found " + Describe(Peek()));
      }
      ++pos_;
      const int p = static_cast<int>(players_.size());
      player_index_[name] = p;
      players_.push_back(name);
      opts_.emplace_back();
      bool any = false;
      while (AtName()) {
        const VarId v = Var();
        VarDecl& d = vars_[v.index];
        if (d.owner >= 0) {
          --pos_;
          Fail("variable '" + d.name + "' is already controlled by player '" +
               players_[d.owner] + "'");
        }
        d.owner = p;
        any = true;
        Accept(",");
      }
      if (!any) Fail("player '" + name + "' controls no variable");
    } else if (kw == "goal") {
      const int p = Player();
      constraints_.push_back({p, Constraint()});
    } else if (kw == "hard") {
      constraints_.push_back({-1, Constraint()});
    } else if (kw == "maximize" || kw == "minimize") {
      const int p = Player();
      const VarId v = Var();
      if (opts_[p]) Fail("player '" + players_[p] + "' already has an objective");
      opts_[p] = csp::OptGoal{kw == "maximize" ? csp::OptGoal::Direction::kMaximize
                                                : csp::OptGoal::Direction::kMinimize,
                              v};
    } else {
      --pos_;
      Fail("unknown statement '" + kw + "'");
    }
    ExpectEnd();
    if (kw == "goal" || kw == "hard") constraint_lines_.push_back(line);
  }

  std::vector<csp::LinearTerm> Terms() {
    std::vector<csp::LinearTerm> terms;
    bool first = true;
    while (true) {
      Value sign = 1;
      if (Accept("-")) {
        sign = -1;
      } else if (!Accept("+") && !first) {
        break;
      }
      Value coef = 1;
      if (Peek().kind == Tok::kInt) {
        coef = Toks(pos_++).value;
        Expect("*");
      }
      terms.push_back({sign * coef, Var()});
      first = false;
    }
    return terms;
  }

  Relation Rel() {
    if (Accept("=")) return Relation::kEq;
    if (Accept("<=")) return Relation::kLe;
    if (Accept(">=")) return Relation::kGe;
    Fail("expected '=', '<=' or '>=', found " + Describe(Peek()));
  }

  csp::Constraint Constraint() {
    const Token head = Peek();
    if (head.kind != Tok::kIdent) Fail("expected a constraint kind, found " + Describe(head));
    ++pos_;
    const std::string& k = head.text;
    if (k == "linear" || k == "boolsum") {
      auto terms = Terms();
      const Relation rel = Rel();
      const Value rhs = Int();
      if (k == "linear") return csp::Linear{std::move(terms), rel, rhs};
      return csp::WeightedBoolSum{std::move(terms), rel, rhs};
    }
    if (k == "alldifferent") {
      csp::AllDifferent a;
      List([&] { a.vars.push_back(Var()); });
      return a;
    }
    if (k == "absoffset") {
      csp::AbsOffset a;
      a.result = Var();
      a.x = Var();
      a.center = Int();
      a.offset = Int();
      return a;
    }
    if (k == "min") {
      csp::MinOf m;
      m.result = Var();
      List([&] { m.args.push_back(Var()); });
      if (m.args.empty()) Fail("min needs at least one argument");
      return m;
    }
    if (k == "reif") {
      csp::ReifEqConst r;
      r.flag = Var();
      r.x = Var();
      r.value = Int();
      return r;
    }
    if (k == "imply") {
      csp::ImplyEqVars r;
      r.flag = Var();
      r.x = Var();
      r.y = Var();
      return r;
    }
    if (k == "table") {
      csp::Table t;
      List([&] { t.vars.push_back(Var()); });
      List([&] {
        std::vector<Value> row;
        List([&] { row.push_back(Int()); });
        if (row.size() != t.vars.size()) {
          Fail("table row has " + std::to_string(row.size()) +
               " values, expected " + std::to_string(t.vars.size()));
        }
        t.tuples.push_back(std::move(row));
      });
      return t;
    }
    --pos_;
    Fail("unknown constraint kind '" + k + "'");
  }

  Game Build() {
    if (!name_) throw GameFileError(0, "missing 'game' statement");
    GameBuilder b(*name_);
    for (const auto& p : players_) b.AddPlayer(p);
    for (const auto& v : vars_) {
      try {
        if (v.owner >= 0) {
          b.AddControlled(PlayerId{v.owner}, v.name, v.domain);
        } else {
          b.AddExistential(v.name, v.domain);
        }
      } catch (const std::exception& e) {
        throw GameFileError(v.line, e.what());
      }
    }
    // Checked against a scratch model first, to tie errors to a line.
    csp::Csp scratch;
    for (const auto& v : vars_) scratch.AddVariable(v.name, v.domain);
    for (std::size_t k = 0; k < constraints_.size(); ++k) {
      try {
        scratch.Add(constraints_[k].c);
        if (constraints_[k].player < 0) {
          b.AddHard(constraints_[k].c);
        } else {
          b.AddGoal(PlayerId{constraints_[k].player}, constraints_[k].c);
        }
      } catch (const std::exception& e) {
        throw GameFileError(constraint_lines_[k], e.what());
      }
    }
    for (std::size_t p = 0; p < opts_.size(); ++p) {
      if (!opts_[p]) continue;
      if (opts_[p]->direction == csp::OptGoal::Direction::kMaximize) {
        b.Maximize(PlayerId{static_cast<int>(p)}, opts_[p]->objective);
      } else {
        b.Minimize(PlayerId{static_cast<int>(p)}, opts_[p]->objective);
      }
    }
    try {
      return b.Build();
    } catch (const std::invalid_argument& e) {
      throw GameFileError(0, e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  std::optional<std::string> name_;
  std::vector<VarDecl> vars_;
  std::map<std::string, int> var_index_;
  std::vector<std::string> players_;
  std::map<std::string, int> player_index_;
  std::vector<std::optional<csp::OptGoal>> opts_;
  std::vector<PendingConstraint> constraints_;
  std::vector<int> constraint_lines_;
};

bool IsIdent(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::string Quote(const std::string& s) {
  if (IsIdent(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class Writer {
 public:
  explicit Writer(const Game& g) : g_(g) {}

  std::string Run() {
    out_ << "game " << Quote(g_.name()) << "\n\n";
    for (int v = 0; v < g_.num_vars(); ++v) {
      out_ << "var " << VarName(VarId{v}) << " in "
           << DomainText(g_.domains()[v]) << "\n";
    }
    out_ << "\n";
    for (int p = 0; p < g_.num_players(); ++p) {
      out_ << "player " << Quote(g_.player_name(PlayerId{p})) << " controls";
      for (VarId v : g_.vars_of(PlayerId{p})) out_ << " " << VarName(v);
      out_ << "\n";
    }
    for (int p = 0; p < g_.num_players(); ++p) {
      const std::string who = Quote(g_.player_name(PlayerId{p}));
      const auto& goal = g_.goal(PlayerId{p}).csp().constraints();
      const auto& opt = g_.opt(PlayerId{p});
      if (goal.empty() && !opt) continue;
      out_ << "\n";
      for (const auto& c : goal) out_ << "goal " << who << " " << Text(c) << "\n";
      if (opt) {
        out_ << (opt->direction == csp::OptGoal::Direction::kMaximize
                     ? "maximize "
                     : "minimize ")
             << who << " " << VarName(opt->objective) << "\n";
      }
    }
    const auto& hard = g_.hard().csp().constraints();
    if (!hard.empty()) out_ << "\n";
    for (const auto& c : hard) out_ << "hard " << Text(c) << "\n";
    return out_.str();
  }

 private:
  std::string VarName(VarId v) const { return Quote(g_.var_name(v)); }

  static std::string DomainText(const Domain& d) {
    if (d.size() == static_cast<std::uint64_t>(d.max() - d.min() + 1)) {
      return std::to_string(d.min()) + ".." + std::to_string(d.max());
    }
    std::string s = "{";
    bool first = true;
    for (Value v : d.Values()) {
      s += (first ? "" : ", ") + std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  std::string Vars(const std::vector<VarId>& vars) const {
    std::string s = "(";
    for (std::size_t k = 0; k < vars.size(); ++k) {
      s += (k ? " " : "") + VarName(vars[k]);
    }
    return s + ")";
  }

  std::string Sum(const std::vector<csp::LinearTerm>& terms, Relation rel,
                  Value rhs) const {
    std::string s;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      Value c = terms[k].coef;
      if (k > 0) {
        s += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      } else if (c < 0) {
        s += "-";
        c = -c;
      }
      if (c != 1) s += std::to_string(c) + "*";
      s += VarName(terms[k].var);
    }
    s += rel == Relation::kEq ? " = " : rel == Relation::kLe ? " <= " : " >= ";
    return s + std::to_string(rhs);
  }

  std::string Text(const csp::Constraint& con) const {
    using std::to_string;
    if (const auto* l = std::get_if<csp::Linear>(&con)) {
      return "linear " + Sum(l->terms, l->rel, l->rhs);
    }
    if (const auto* l = std::get_if<csp::WeightedBoolSum>(&con)) {
      return "boolsum " + Sum(l->terms, l->rel, l->rhs);
    }
    if (const auto* a = std::get_if<csp::AllDifferent>(&con)) {
      return "alldifferent " + Vars(a->vars);
    }
    if (const auto* a = std::get_if<csp::AbsOffset>(&con)) {
      return "absoffset " + VarName(a->result) + " " + VarName(a->x) + " " +
             to_string(a->center) + " " + to_string(a->offset);
    }
    if (const auto* m = std::get_if<csp::MinOf>(&con)) {
      return "min " + VarName(m->result) + " " + Vars(m->args);
    }
    if (const auto* r = std::get_if<csp::ReifEqConst>(&con)) {
      return "reif " + VarName(r->flag) + " " + VarName(r->x) + " " +
             to_string(r->value);
    }
    if (const auto* r = std::get_if<csp::ImplyEqVars>(&con)) {
      return "imply " + VarName(r->flag) + " " + VarName(r->x) + " " +
             VarName(r->y);
    }
    const auto& t = std::get<csp::Table>(con);
    std::string s = "table " + Vars(t.vars) + " (";
    for (std::size_t k = 0; k < t.tuples.size(); ++k) {
      s += k % 8 == 0 ? "\n    (" : " (";
      for (std::size_t j = 0; j < t.tuples[k].size(); ++j) {
        s += (j ? " " : "") + to_string(t.tuples[k][j]);
      }
      s += ")";
    }
    return s + ")";
  }

  const Game& g_;
  std::ostringstream out_;
};

}  // namespace

GameFileError::GameFileError(int line, const std::string& message,
                             const std::string& source)
    : std::runtime_error(
          (source.empty() ? "" : source + ":") +
          (line > 0 ? (source.empty() ? "line " : "") + std::to_string(line) +
                          ": "
                    : (source.empty() ? "" : " ")) +
          message),
      line_(line),
      message_(message) {}

Game ParseGame(std::string_view text) { return Parser().Parse(text); }

Game LoadGame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameFileError(0, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  try {
    return ParseGame(s.str());
  } catch (const GameFileError& e) {
    throw GameFileError(e.line(), e.message(), path);
  }
}

std::string SerializeGame(const Game& game) { return Writer(game).Run(); }

}  // namespace conga::games
