#include "kfmodal/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace kfmodal {

struct Formula::Node {
  Conn conn;
  int atom = -1;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Formula Formula::atom(int index) {
  if (index < 0) throw Error("atom index must be nonnegative");
  auto n = std::make_shared<Node>();
  n->conn = Conn::atom;
  n->atom = index;
  return Formula(std::move(n));
}

Formula Formula::top() {
  auto n = std::make_shared<Node>();
  n->conn = Conn::top;
  return Formula(std::move(n));
}

Formula Formula::bot() {
  auto n = std::make_shared<Node>();
  n->conn = Conn::bot;
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::neg;
  n->lhs = f.node_;
  return Formula(std::move(n));
}

Formula Formula::box(Formula f) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::box;
  n->lhs = f.node_;
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::conj;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::disj;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Formula(std::move(n));
}

Formula Formula::fc(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::fc;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Formula(std::move(n));
}

Conn Formula::conn() const { return node_->conn; }

bool Formula::is(Conn c) const { return node_->conn == c; }

int Formula::atom_index() const {
  if (node_->conn != Conn::atom) throw Error("atom_index on non-atom");
  return node_->atom;
}

Formula Formula::child() const {
  if (node_->conn != Conn::neg && node_->conn != Conn::box)
    throw Error("child on non-unary formula");
  return Formula(node_->lhs);
}

Formula Formula::left() const {
  if (!node_->lhs) throw Error("left on leaf formula");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (!node_->rhs) throw Error("right on non-binary formula");
  return Formula(node_->rhs);
}

std::strong_ordering Formula::cmp(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a->conn <=> b->conn; c != 0) return c;
  switch (a->conn) {
    case Conn::atom:
      return a->atom <=> b->atom;
    case Conn::top:
    case Conn::bot:
      return std::strong_ordering::equal;
    case Conn::neg:
    case Conn::box:
      return cmp(a->lhs.get(), b->lhs.get());
    default:
      if (auto c = cmp(a->lhs.get(), b->lhs.get()); c != 0) return c;
      return cmp(a->rhs.get(), b->rhs.get());
  }
}

bool Formula::operator==(const Formula& other) const {
  return cmp(node_.get(), other.node_.get()) == 0;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  return cmp(node_.get(), other.node_.get());
}

namespace {

void collect_atoms(const Formula& f, std::set<int>& out) {
  switch (f.conn()) {
    case Conn::atom:
      out.insert(f.atom_index());
      break;
    case Conn::top:
    case Conn::bot:
      break;
    case Conn::neg:
    case Conn::box:
      collect_atoms(f.child(), out);
      break;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

int neg_complexity(const Formula& f);

int pos_complexity(const Formula& f) {
  switch (f.conn()) {
    case Conn::atom:
    case Conn::top:
    case Conn::bot:
      return 1;
    case Conn::neg:
      return neg_complexity(f.child());
    case Conn::box:
      return pos_complexity(f.child()) + 1;
    case Conn::fc:
      return std::max(pos_complexity(f.left()), pos_complexity(f.right())) + 1;
    default:
      return std::max(pos_complexity(f.left()), pos_complexity(f.right())) + 1;
  }
}

// Complexity of ~f, measured through the dual without materializing it.
int neg_complexity(const Formula& f) {
  switch (f.conn()) {
    case Conn::atom:
    case Conn::top:
    case Conn::bot:
      return 1;
    case Conn::neg:
      return pos_complexity(f.child()) + 1;
    case Conn::box:
      return neg_complexity(f.child()) + 1;
    case Conn::fc:
      return std::max(pos_complexity(f.left()), neg_complexity(f.right())) + 1;
    default:
      return std::max(neg_complexity(f.left()), neg_complexity(f.right())) + 1;
  }
}

}  // namespace

std::vector<int> prop_set(const Formula& f) {
  std::set<int> s;
  collect_atoms(f, s);
  return std::vector<int>(s.begin(), s.end());
}

std::vector<int> prop_set(const std::vector<Formula>& fs) {
  std::set<int> s;
  for (const auto& f : fs) collect_atoms(f, s);
  return std::vector<int>(s.begin(), s.end());
}

int modal_depth(const Formula& f) {
  switch (f.conn()) {
    case Conn::atom:
    case Conn::top:
    case Conn::bot:
      return 0;
    case Conn::neg:
      return modal_depth(f.child());
    case Conn::box:
      return modal_depth(f.child()) + 1;
    default:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
}

int positive_complexity(const Formula& f) { return pos_complexity(f); }

int syntactic_depth(const Formula& f) {
  switch (f.conn()) {
    case Conn::atom:
    case Conn::top:
    case Conn::bot:
      return 0;
    case Conn::neg:
    case Conn::box:
      return syntactic_depth(f.child()) + 1;
    default:
      return std::max(syntactic_depth(f.left()), syntactic_depth(f.right())) +
             1;
  }
}

bool has_fc(const Formula& f) {
  switch (f.conn()) {
    case Conn::atom:
    case Conn::top:
    case Conn::bot:
      return false;
    case Conn::neg:
    case Conn::box:
      return has_fc(f.child());
    case Conn::fc:
      return true;
    default:
      return has_fc(f.left()) || has_fc(f.right());
  }
}

FormulaStats stats(const Formula& f) {
  FormulaStats st;
  st.prop_set = prop_set(f);
  st.modal_depth = modal_depth(f);
  st.positive_complexity = positive_complexity(f);
  return st;
}

namespace {

enum class Tok {
  atom,
  top,
  bot,
  tilde,
  box,
  diamond,
  conj,
  disj,
  arrow,
  fcarrow,
  iff,
  lparen,
  rparen,
  end
};

struct Token {
  Tok kind;
  int atom = -1;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    char c = text_[i_];
    auto rest = [&](std::size_t n) { return text_.substr(i_, n); };
    if (c == 'p' && i_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
      std::size_t j = i_ + 1;
      long value = 0;
      while (j < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[j]))) {
        value = value * 10 + (text_[j] - '0');
        if (value > 1000000) throw ParseError("atom index too large", i_);
        ++j;
      }
      cur_.kind = Tok::atom;
      cur_.atom = static_cast<int>(value);
      i_ = j;
      return;
    }
    if (c == 'T') {
      cur_.kind = Tok::top;
      ++i_;
      return;
    }
    if (c == 'F') {
      cur_.kind = Tok::bot;
      ++i_;
      return;
    }
    if (c == '~') {
      cur_.kind = Tok::tilde;
      ++i_;
      return;
    }
    if (rest(2) == "[]") {
      cur_.kind = Tok::box;
      i_ += 2;
      return;
    }
    if (rest(3) == "<->") {
      cur_.kind = Tok::iff;
      i_ += 3;
      return;
    }
    if (rest(2) == "<>") {
      cur_.kind = Tok::diamond;
      i_ += 2;
      return;
    }
    if (rest(2) == "/\\") {
      cur_.kind = Tok::conj;
      i_ += 2;
      return;
    }
    if (rest(2) == "\\/") {
      cur_.kind = Tok::disj;
      i_ += 2;
      return;
    }
    if (rest(3) == "->>") {
      cur_.kind = Tok::fcarrow;
      i_ += 3;
      return;
    }
    if (rest(2) == "->") {
      cur_.kind = Tok::arrow;
      i_ += 2;
      return;
    }
    if (c == '(') {
      cur_.kind = Tok::lparen;
      ++i_;
      return;
    }
    if (c == ')') {
      cur_.kind = Tok::rparen;
      ++i_;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i_);
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(const std::string& text, Dialect dialect)
      : lex_(text), dialect_(dialect) {}

  Formula run() {
    Formula f = parse_iff();
    if (lex_.peek().kind != Tok::end)
      throw ParseError("trailing input after formula", lex_.peek().pos);
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_fcarrow();
    while (lex_.peek().kind == Tok::iff) {
      lex_.take();
      Formula g = parse_fcarrow();
      f = Formula::conj(Formula::disj(Formula::neg(f), g),
                        Formula::disj(Formula::neg(g), f));
    }
    return f;
  }

  Formula parse_fcarrow() {
    Formula f = parse_arrow();
    if (lex_.peek().kind == Tok::fcarrow) {
      std::size_t pos = lex_.peek().pos;
      if (dialect_ != Dialect::fc)
        throw ParseError("->> requires the fc dialect", pos);
      lex_.take();
      return Formula::fc(f, parse_fcarrow());
    }
    return f;
  }

  Formula parse_arrow() {
    Formula f = parse_disj();
    if (lex_.peek().kind == Tok::arrow) {
      lex_.take();
      return Formula::disj(Formula::neg(f), parse_arrow());
    }
    return f;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (lex_.peek().kind == Tok::disj) {
      lex_.take();
      f = Formula::disj(f, parse_conj());
    }
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::conj) {
      lex_.take();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::tilde:
        lex_.take();
        return Formula::neg(parse_unary());
      case Tok::box:
        lex_.take();
        return Formula::box(parse_unary());
      case Tok::diamond:
        lex_.take();
        return Formula::neg(Formula::box(Formula::neg(parse_unary())));
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::atom:
        return Formula::atom(t.atom);
      case Tok::top:
        return Formula::top();
      case Tok::bot:
        return Formula::bot();
      case Tok::lparen: {
        Formula f = parse_iff();
        Token close = lex_.take();
        if (close.kind != Tok::rparen)
          throw ParseError("expected ')'", close.pos);
        return f;
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  Lexer lex_;
  Dialect dialect_;
};

constexpr int kPrecUnary = 5;
constexpr int kPrecConj = 4;
constexpr int kPrecDisj = 3;
constexpr int kPrecFc = 1;

int precedence(const Formula& f) {
  switch (f.conn()) {
    case Conn::conj:
      return kPrecConj;
    case Conn::disj:
      return kPrecDisj;
    case Conn::fc:
      return kPrecFc;
    default:
      return kPrecUnary;
  }
}

void print_rec(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f);
  bool wrap = prec < min_prec;
  if (wrap) out += '(';
  switch (f.conn()) {
    case Conn::atom:
      out += 'p';
      out += std::to_string(f.atom_index());
      break;
    case Conn::top:
      out += 'T';
      break;
    case Conn::bot:
      out += 'F';
      break;
    case Conn::neg:
      out += '~';
      print_rec(f.child(), kPrecUnary, out);
      break;
    case Conn::box:
      out += "[]";
      print_rec(f.child(), kPrecUnary, out);
      break;
    case Conn::conj:
      print_rec(f.left(), kPrecConj, out);
      out += " /\\ ";
      print_rec(f.right(), kPrecConj + 1, out);
      break;
    case Conn::disj:
      print_rec(f.left(), kPrecDisj, out);
      out += " \\/ ";
      print_rec(f.right(), kPrecDisj + 1, out);
      break;
    case Conn::fc:
      print_rec(f.left(), kPrecFc + 1, out);
      out += " ->> ";
      print_rec(f.right(), kPrecFc, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Formula parse(const std::string& text, Dialect dialect) {
  return Parser(text, dialect).run();
}

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

Formula nabla_bar(const Formula& f) {
  return Formula::disj(Formula::box(f), Formula::box(Formula::neg(f)));
}

Formula nabla(const Formula& f) { return Formula::neg(nabla_bar(f)); }

Formula nabla_bar_pair(const Formula& f, const Formula& g) {
  return Formula::conj(nabla_bar(f), nabla_bar(g));
}

Formula substitute(const Formula& f,
                   const std::vector<std::pair<int, Formula>>& map) {
  switch (f.conn()) {
    case Conn::atom:
      for (const auto& [atom, g] : map)
        if (atom == f.atom_index()) return g;
      return f;
    case Conn::top:
    case Conn::bot:
      return f;
    case Conn::neg:
      return Formula::neg(substitute(f.child(), map));
    case Conn::box:
      return Formula::box(substitute(f.child(), map));
    case Conn::conj:
      return Formula::conj(substitute(f.left(), map),
                           substitute(f.right(), map));
    case Conn::disj:
      return Formula::disj(substitute(f.left(), map),
                           substitute(f.right(), map));
    default:
      return Formula::fc(substitute(f.left(), map),
                         substitute(f.right(), map));
  }
}

FormulaSet make_set(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

bool set_contains(const FormulaSet& s, const Formula& f) {
  return std::binary_search(s.begin(), s.end(), f);
}

FormulaSet set_add(FormulaSet s, const Formula& f) {
  auto it = std::lower_bound(s.begin(), s.end(), f);
  if (it == s.end() || !(*it == f)) s.insert(it, f);
  return s;
}

FormulaSet set_remove(FormulaSet s, const Formula& f) {
  auto it = std::lower_bound(s.begin(), s.end(), f);
  if (it != s.end() && *it == f) s.erase(it);
  return s;
}

FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::strong_ordering Sequent::operator<=>(const Sequent& other) const {
  if (auto c = ant_ <=> other.ant_; c != 0) return c;
  return suc_ <=> other.suc_;
}

std::string print(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ant().size(); ++i) {
    if (i) out += ", ";
    out += print(s.ant()[i]);
  }
  out += " => ";
  for (std::size_t i = 0; i < s.suc().size(); ++i) {
    if (i) out += ", ";
    out += print(s.suc()[i]);
  }
  return out;
}

std::vector<Formula> enumerate_formulas(int num_atoms, int max_depth,
                                        bool with_box, bool with_fc) {
  std::vector<Formula> all;
  std::set<Formula> seen;
  auto push = [&](const Formula& f) {
    if (seen.insert(f).second) all.push_back(f);
  };
  for (int i = 0; i < num_atoms; ++i) push(Formula::atom(i));
  push(Formula::top());
  push(Formula::bot());
  std::size_t level_begin = 0;
  for (int d = 1; d <= max_depth; ++d) {
    std::size_t level_end = all.size();
    std::vector<Formula> fresh;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      fresh.push_back(Formula::neg(all[i]));
      if (with_box) fresh.push_back(Formula::box(all[i]));
    }
    for (std::size_t i = 0; i < level_end; ++i)
      for (std::size_t j = 0; j < level_end; ++j) {
        if (i < level_begin && j < level_begin) continue;
        fresh.push_back(Formula::conj(all[i], all[j]));
        fresh.push_back(Formula::disj(all[i], all[j]));
        if (with_fc) fresh.push_back(Formula::fc(all[i], all[j]));
      }
    // Formulas of depth exactly d combine at least one depth d-1 child with
    // children of any smaller depth; the skip above drops pairs already
    // produced at earlier levels.
    level_begin = level_end;
    for (const auto& f : fresh) push(f);
  }
  return all;
}

}  // namespace kfmodal
