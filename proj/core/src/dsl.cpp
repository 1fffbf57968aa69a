#include "mpreg/dsl.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <vector>

#include "mpreg/errors.hpp"

namespace mpreg {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    std::size_t digits = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max() / 4) {
        throw ParseError(ParseError::Kind::Syntax, start, "integer out of range");
      }
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail(allow_sign ? "expected a signed integer" : "expected an integer");
    }
    return static_cast<int>(negative ? -value : value);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, pos_,
                     what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Atom as written, before it is placed on a factor.
struct RawAtom {
  bool line = true;
  int p = 0;
  std::vector<int> values;  // several values only for the O(a_1,...,a_s) shorthand
  std::size_t position = 0;
};

RawAtom parse_atom(Cursor& in) {
  RawAtom atom;
  atom.position = in.pos();
  if (in.accept('O')) {
    in.expect('(');
    atom.values.push_back(in.integer(true));
    while (in.accept(',')) atom.values.push_back(in.integer(true));
    in.expect(')');
  } else if (in.accept('W')) {
    atom.line = false;
    atom.p = in.integer(false);
    in.expect('(');
    atom.values.push_back(in.integer(true));
    in.expect(')');
  } else {
    in.fail("expected an atom 'O(..)' or 'Wp(..)'");
  }
  return atom;
}

BoxSummand place_summand(const Space& space, const std::vector<RawAtom>& raw) {
  const int s = space.size();
  if (raw.size() == 1 && raw[0].line && raw[0].values.size() > 1) {
    if (static_cast<int>(raw[0].values.size()) != s) {
      throw ParseError(ParseError::Kind::Arity, raw[0].position,
                       "O(...) lists " + std::to_string(raw[0].values.size()) + " degrees but the space has " +
                           std::to_string(s) + " factors");
    }
    return BoxSummand::line(raw[0].values);
  }
  if (static_cast<int>(raw.size()) != s) {
    throw ParseError(ParseError::Kind::Arity, raw.empty() ? 0 : raw.front().position,
                     "summand has " + std::to_string(raw.size()) + " atoms but the space has " +
                         std::to_string(s) + " factors");
  }
  std::vector<Atom> atoms;
  atoms.reserve(raw.size());
  for (int j = 0; j < s; ++j) {
    const RawAtom& r = raw[static_cast<std::size_t>(j)];
    if (r.values.size() != 1) {
      throw ParseError(ParseError::Kind::Arity, r.position, "multi-degree O(...) must be the whole summand");
    }
    if (r.line) {
      atoms.push_back(Atom::line(r.values[0]));
    } else {
      if (r.p > space[j]) {
        throw ParseError(ParseError::Kind::Dimension, r.position,
                         "W" + std::to_string(r.p) + " does not exist on P^" + std::to_string(space[j]));
      }
      atoms.push_back(Atom::cotangent(space[j], r.p, r.values[0]));
    }
  }
  return BoxSummand(std::move(atoms));
}

}  // namespace

Space parse_space(std::string_view text) {
  Cursor in(text);
  std::vector<int> factors;
  do {
    in.expect('P');
    std::size_t at = in.pos();
    int n = in.integer(false);
    if (n < 1) {
      throw ParseError(ParseError::Kind::Dimension, at, "factor P^" + std::to_string(n) + " needs n >= 1");
    }
    factors.push_back(n);
  } while (in.accept('x') || in.accept('X'));
  if (!in.at_end()) in.fail("unexpected trailing input");
  return Space(std::move(factors));
}

Bundle parse_bundle(const Space& space, std::string_view text) {
  Cursor in(text);
  std::vector<BoxSummand> summands;
  do {
    std::vector<RawAtom> raw;
    raw.push_back(parse_atom(in));
    while (in.accept('*')) raw.push_back(parse_atom(in));
    summands.push_back(place_summand(space, raw));
  } while (in.accept('+'));

  std::optional<MultiTwist> global;
  if (in.accept('@')) {
    std::size_t at = in.pos();
    in.expect('(');
    std::vector<int> t{in.integer(true)};
    while (in.accept(',')) t.push_back(in.integer(true));
    in.expect(')');
    if (static_cast<int>(t.size()) != space.size()) {
      throw ParseError(ParseError::Kind::Arity, at,
                       "global twist has " + std::to_string(t.size()) + " entries but the space has " +
                           std::to_string(space.size()) + " factors");
    }
    global = MultiTwist(std::move(t));
  }
  if (!in.at_end()) in.fail("unexpected trailing input");

  Bundle bundle(space, std::move(summands));
  return global ? twist(bundle, *global) : bundle;
}

std::pair<Space, Bundle> parse_bundle(std::string_view space_text, std::string_view bundle_text) {
  Space space = parse_space(space_text);
  Bundle bundle = parse_bundle(space, bundle_text);
  return {std::move(space), std::move(bundle)};
}

std::string to_dsl(const Atom& atom) {
  if (atom.is_line()) return "O(" + std::to_string(atom.twist()) + ")";
  return "W" + std::to_string(atom.p()) + "(" + std::to_string(atom.twist()) + ")";
}

std::string to_dsl(const BoxSummand& summand) {
  std::string out;
  for (int j = 0; j < summand.size(); ++j) {
    if (j) out += '*';
    out += to_dsl(summand[j]);
  }
  return out;
}

std::string to_dsl(const Bundle& bundle) {
  std::string out;
  for (const BoxSummand& s : bundle.summands()) {
    if (!out.empty()) out += " + ";
    out += to_dsl(s);
  }
  return out;
}

}  // namespace mpreg
