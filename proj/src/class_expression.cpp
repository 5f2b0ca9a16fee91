#include "patlab/class_expression.hpp"

#include <cctype>
#include <optional>

#include "patlab/errors.hpp"

namespace patlab {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class TermParser {
 public:
  TermParser(const std::string& full, std::size_t begin, std::size_t end)
      : full_(full), pos_(begin), end_(end) {}

  ClassTerm parse() {
    while (pos_ < end_ && is_space(full_[pos_])) ++pos_;
    while (end_ > pos_ && is_space(full_[end_ - 1])) --end_;
    if (pos_ == end_) fail(pos_, "empty class term");
    start_ = pos_;
    ClassTerm term;
    term.text = full_.substr(start_, end_ - start_);
    term.column = start_;
    const char head = full_[pos_];
    if (head == 'M' || head == 'D') {
      term.pattern = parse_macro(head);
    } else {
      term.pattern = parse_letters();
    }
    return term;
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(message, full_, column);
  }

  void skip_spaces() {
    while (pos_ < end_ && is_space(full_[pos_])) ++pos_;
  }

  int read_int() {
    skip_spaces();
    if (pos_ >= end_ || !is_digit(full_[pos_])) fail(pos_, "expected an integer");
    long value = 0;
    while (pos_ < end_ && is_digit(full_[pos_])) {
      value = value * 10 + (full_[pos_] - '0');
      if (value > 1000000) fail(pos_, "integer too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void expect(char c) {
    skip_spaces();
    if (pos_ >= end_ || full_[pos_] != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::variant<Permutation, DistantPattern, AlmostDistantPattern> parse_macro(char head) {
    ++pos_;
    expect('(');
    std::vector<int> args{read_int()};
    while (true) {
      skip_spaces();
      if (pos_ < end_ && full_[pos_] == ',') {
        ++pos_;
        args.push_back(read_int());
        continue;
      }
      break;
    }
    expect(')');
    skip_spaces();
    if (pos_ != end_) fail(pos_, "unexpected text after macro");
    try {
      if (head == 'M') {
        if (args.size() != 3) fail(start_, "M takes three arguments: M(k,j,i)");
        MonotoneSpec spec{args[0], args[1], args[2]};
        return monotone_class(spec);
      }
      if (args.size() != 2) fail(start_, "D takes two arguments: D(k,j)");
      return monotone_distant(args[0], args[1]);
    } catch (const ParseError&) {
      throw;
    } catch (const UsageError& e) {
      fail(start_, e.what());
    }
  }

  void check_gap_size(std::size_t column) {
    const int r = read_int();
    if (r < 1) fail(column, "gap size must be at least 1");
    if (r >= 2) fail(column, "minimum gaps larger than one are not supported");
  }

  std::variant<Permutation, DistantPattern, AlmostDistantPattern> parse_letters() {
    bool spaced = false;
    for (std::size_t t = pos_; t < end_; ++t) spaced = spaced || is_space(full_[t]);

    std::vector<int> values;
    std::optional<int> box_pos;
    std::optional<int> removed;
    std::size_t bracket_column = 0;

    while (pos_ < end_) {
      const char c = full_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (is_digit(c)) {
        if (spaced) {
          values.push_back(read_int());
        } else {
          values.push_back(c - '0');
          ++pos_;
        }
      } else if (c == '#' || c == '[') {
        if (box_pos) fail(pos_, "only one gap is allowed per term");
        box_pos = static_cast<int>(values.size()) + 1;
        const std::size_t column = pos_++;
        if (c == '#') {
          if (pos_ < end_ && full_[pos_] == '^') {
            ++pos_;
            check_gap_size(column);
          } else if (spaced && pos_ < end_ && is_digit(full_[pos_])) {
            check_gap_size(column);
          }
        } else {
          bracket_column = column;
          removed = read_int();
          expect(']');
        }
      } else {
        fail(pos_, std::string("unexpected character '") + c + "'");
      }
    }

    Permutation underlying;
    try {
      underlying = Permutation(values);
    } catch (const UsageError&) {
      fail(start_, "letters do not form a permutation of 1.." + std::to_string(values.size()));
    }
    const int k = underlying.size();
    if (removed) {
      if (*removed < 1 || *removed > k + 1) {
        fail(bracket_column, "removed value must lie in 1.." + std::to_string(k + 1));
      }
      return AlmostDistantPattern{underlying, *box_pos, *removed};
    }
    if (box_pos) return DistantPattern{underlying, *box_pos};
    if (k == 0) fail(start_, "empty class term");
    return underlying;
  }

  const std::string& full_;
  std::size_t pos_;
  std::size_t end_;
  std::size_t start_ = 0;
};

}  // namespace

PatternBasis ClassTerm::basis() const {
  struct Visitor {
    PatternBasis operator()(const Permutation& q) const { return PatternBasis({q}); }
    PatternBasis operator()(const DistantPattern& d) const { return expand_distant(d); }
    PatternBasis operator()(const AlmostDistantPattern& a) const {
      return expand_almost_distant(a);
    }
  };
  PatternBasis b = std::visit(Visitor{}, pattern);
  b.set_label(text);
  return b;
}

PatternBasis ClassExpression::basis() const {
  PatternBasis out({}, text);
  for (const auto& term : terms) {
    const PatternBasis piece = term.basis();
    for (const auto& q : piece.patterns()) out.insert(q);
  }
  return out;
}

ClassExpression parse_class_expression(std::string_view text) {
  ClassExpression expr;
  expr.text = std::string(text);
  std::size_t begin = 0;
  while (true) {
    const std::size_t semi = expr.text.find(';', begin);
    const std::size_t end = semi == std::string::npos ? expr.text.size() : semi;
    expr.terms.push_back(TermParser(expr.text, begin, end).parse());
    if (semi == std::string::npos) break;
    begin = semi + 1;
  }
  return expr;
}

std::string caret_diagnostic(const std::string& expression, std::size_t column,
                             const std::string& message) {
  return "error: " + message + "\n  " + expression + "\n  " + std::string(column, ' ') + "^\n";
}

}  // namespace patlab
