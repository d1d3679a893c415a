#include "asx/cli/paramfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "asx/algebra/errors.hpp"

namespace asx::cli {

namespace {

struct Position {
  int line = 1;
  int column = 1;
};

[[noreturn]] void fail(ErrorKind kind, Position at, const std::string& message) {
  throw Error(kind, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + message);
}

/// Scans the value list of one line. Values are separated by whitespace or
/// commas; whitespace inside a value ("1/2 + 3/4*sqrt(5)") is allowed.
class ValueScanner {
 public:
  ValueScanner(std::string_view text, int line, int column) : text_(text), line_(line), column0_(column) {}

  std::vector<std::pair<QuadraticNumber, Position>> values() {
    std::vector<std::pair<QuadraticNumber, Position>> out;
    for (;;) {
      skip_separators();
      if (pos_ >= text_.size()) break;
      const std::size_t start = pos_;
      std::string compact = scan_value();
      try {
        out.emplace_back(QuadraticNumber::parse(compact), here(start));
      } catch (const Error& e) {
        std::string msg = e.what();
        const std::string prefix = std::string(to_string(e.kind())) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
        fail(e.kind(), here(start), msg);
      }
    }
    return out;
  }

 private:
  Position here(std::size_t at) const { return {line_, column0_ + static_cast<int>(at)}; }

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  void skip_separators() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) ++pos_;
  }
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  bool at_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }

  std::string digits() {
    if (!at_digit()) {
      fail(ErrorKind::ParseError, here(pos_),
           pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "value ends early");
    }
    std::string out;
    while (at_digit()) out += text_[pos_++];
    return out;
  }

  // digits [ / digits ]
  std::string unsigned_rational() {
    std::string out = digits();
    const std::size_t save = pos_;
    skip_spaces();
    if (at('/')) {
      ++pos_;
      skip_spaces();
      const std::size_t den_at = pos_;
      const std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail(ErrorKind::ZeroDenominator, here(den_at), "zero denominator");
      out += "/" + den;
    } else {
      pos_ = save;
    }
    return out;
  }

  // sqrt ( digits )
  std::string sqrt_part() {
    pos_ += 4;
    skip_spaces();
    if (!at('(')) fail(ErrorKind::ParseError, here(pos_), "expected '(' after sqrt");
    ++pos_;
    skip_spaces();
    const std::string d = digits();
    skip_spaces();
    if (!at(')')) fail(ErrorKind::ParseError, here(pos_), "expected ')'");
    ++pos_;
    return "sqrt(" + d + ")";
  }

  // [rational *] sqrt(D), or nothing (pos_ restored) when no radical follows
  std::optional<std::string> radical() {
    const std::size_t save = pos_;
    if (at_word("sqrt")) return sqrt_part();
    if (!at_digit()) return std::nullopt;
    std::string coef = unsigned_rational();
    skip_spaces();
    if (at('*')) {
      ++pos_;
      skip_spaces();
      if (at_word("sqrt")) return coef + "*" + sqrt_part();
      fail(ErrorKind::ParseError, here(pos_), "expected sqrt after '*'");
    }
    pos_ = save;
    return std::nullopt;
  }

  std::string scan_value() {
    std::string out;
    if (at('-') || at('+')) {
      if (at('-')) out += '-';
      ++pos_;
      skip_spaces();
    }
    if (auto r = radical()) return out + *r;
    out += unsigned_rational();
    const std::size_t save = pos_;
    skip_spaces();
    if (at('+') || at('-')) {
      const char op = text_[pos_++];
      skip_spaces();
      if (auto r = radical()) return out + op + *r;
    }
    pos_ = save;
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',') {
      fail(ErrorKind::ParseError, here(pos_), "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return out;
  }

  std::string_view text_;
  int line_;
  int column0_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpz_class parse_field(const std::string& value, Position at) {
  std::string compact;
  for (char ch : value)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact == "Q") return 0;
  if (compact.rfind("Q(sqrt", 0) == 0 && compact.size() > 7 && compact.back() == ')') {
    const std::string d = compact.substr(6, compact.size() - 7);
    if (!d.empty() && d.find_first_not_of("0123456789") == std::string::npos) {
      const mpz_class radicand(d, 10);
      const auto [square, free] = split_square(radicand);
      if (radicand < 2 || square != 1) fail(ErrorKind::ParseError, at, "field radicand must be square-free and at least 2");
      return radicand;
    }
  }
  fail(ErrorKind::ParseError, at, "expected 'Q' or 'Q(sqrt D)', got '" + value + "'");
}

}  // namespace

std::optional<KreinTridiagonal<Rational>> ParamFile::rational_spec() const {
  for (const auto* arr : {&spec.c, &spec.a, &spec.b})
    for (const auto& v : *arr)
      if (!v.is_rational()) return std::nullopt;
  return spec.map([](const QuadraticNumber& v) { return v.as_rational(); });
}

ParamFile parse_param_file(std::string_view text) {
  ParamFile out;
  bool seen_format = false, seen_field = false;
  std::optional<int> d;
  std::optional<std::vector<std::pair<QuadraticNumber, Position>>> arrays[3];
  Position array_at[3];
  const std::string keys = "cab";

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t lead = 0;
    while (std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    const Position line_at{line_no, static_cast<int>(lead) + 1};
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::ParseError, line_at, "expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string_view rest = line.substr(colon + 1);
    const Position value_at{line_no, static_cast<int>(colon) + 2};

    if (!seen_format && key != "format") fail(ErrorKind::ParseError, line_at, "first line must be 'format: asx-params v1'");
    if (key == "format") {
      if (seen_format) fail(ErrorKind::ParseError, line_at, "duplicate key 'format'");
      std::istringstream words{std::string(rest)};
      std::string tag, version, extra;
      words >> tag >> version;
      if (tag != "asx-params" || version != "v1" || (words >> extra)) {
        fail(ErrorKind::ParseError, value_at, "unsupported format '" + trim(rest) + "'");
      }
      seen_format = true;
    } else if (key == "d") {
      if (d) fail(ErrorKind::ParseError, line_at, "duplicate key 'd'");
      const std::string v = trim(rest);
      if (v.empty() || v.size() > 3 || v.find_first_not_of("0123456789") != std::string::npos || std::stoi(v) < 1) {
        fail(ErrorKind::ParseError, value_at, "d must be a positive integer, got '" + v + "'");
      }
      d = std::stoi(v);
    } else if (key == "field") {
      if (seen_field) fail(ErrorKind::ParseError, line_at, "duplicate key 'field'");
      out.radicand = parse_field(trim(rest), value_at);
      seen_field = true;
    } else if (key.size() == 1 && keys.find(key[0]) != std::string::npos) {
      const auto slot = keys.find(key[0]);
      if (arrays[slot]) fail(ErrorKind::ParseError, line_at, "duplicate key '" + key + "'");
      arrays[slot] = ValueScanner(rest, line_no, value_at.column).values();
      array_at[slot] = line_at;
    } else {
      fail(ErrorKind::ParseError, line_at, "unknown key '" + key + "'");
    }
    if (end == text.size()) break;
  }

  const Position eof{line_no + 1, 1};
  if (!seen_format) fail(ErrorKind::ParseError, eof, "missing 'format: asx-params v1'");
  if (!d) fail(ErrorKind::ParseError, eof, "missing key 'd'");
  if (!seen_field) fail(ErrorKind::ParseError, eof, "missing key 'field'");
  out.spec.d = *d;
  std::vector<QuadraticNumber>* targets[3] = {&out.spec.c, &out.spec.a, &out.spec.b};
  for (int s = 0; s < 3; ++s) {
    if (!arrays[s]) fail(ErrorKind::ParseError, eof, std::string("missing key '") + keys[s] + "'");
    if (static_cast<int>(arrays[s]->size()) != *d) {
      fail(ErrorKind::ParseError, array_at[s],
           std::string(1, keys[s]) + " needs " + std::to_string(*d) + " values, got " + std::to_string(arrays[s]->size()));
    }
    for (const auto& [v, at] : *arrays[s]) {
      if (!v.is_rational() && v.radicand() != out.radicand) {
        fail(ErrorKind::ParseError, at, "value " + v.to_string() + " lies outside the declared field");
      }
      targets[s]->push_back(v);
    }
  }
  out.spec.validate();
  return out;
}

KreinTridiagonal<QuadraticNumber> parse_params_file(std::string_view text) { return parse_param_file(text).spec; }

std::string write_param_file(const ParamFile& file) {
  std::ostringstream os;
  os << "format: asx-params v1\n";
  os << "d: " << file.spec.d << "\n";
  os << "field: " << (file.radicand == 0 ? std::string("Q") : "Q(sqrt " + file.radicand.get_str() + ")") << "\n";
  const std::pair<char, const std::vector<QuadraticNumber>*> rows[] = {
      {'c', &file.spec.c}, {'a', &file.spec.a}, {'b', &file.spec.b}};
  for (const auto& [key, values] : rows) {
    os << key << ":";
    for (const auto& v : *values) os << " " << v.to_string();
    os << "\n";
  }
  return os.str();
}

std::string write_param_file(const KreinTridiagonal<Rational>& spec) {
  ParamFile f;
  f.spec = spec.map([](const Rational& v) { return QuadraticNumber(v); });
  return write_param_file(f);
}

ParamFile load_param_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_param_file(buf.str());
}

}  // namespace asx::cli
