#include "unimod/param_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "unimod/errors.hpp"

namespace unimod {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string>* warnings) : text_(text), warnings_(warnings) {}

  std::vector<Summand> parameter() {
    std::vector<Summand> out;
    out.push_back(summand());
    while (accept('+')) out.push_back(summand());
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

  CuspidalLabel label_only() {
    CuspidalLabel l = label();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' after label");
    return l;
  }

 private:
  Summand summand() {
    Summand s{label(), 1};
    if (accept('[')) {
      s.d = integer("bracket multiplicity");
      if (s.d < 1) fail("multiplicity must be positive");
      if (!accept(']')) fail("expected ']'");
    }
    return s;
  }

  CuspidalLabel label() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a label ('1' or 'D<weight>')");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      if (integer("label") != 1) fail_at(at, "the trivial label is written '1'");
      return CuspidalLabel::one();
    }
    if (c != 'D') fail("expected a label ('1' or 'D<weight>')");
    ++pos_;
    const int weight = integer("weight");
    std::optional<int> index;
    if (accept('.')) index = integer("eigenform index");
    Central central = Central::Auto;
    if (accept('!')) {
      if (consume("0"))
        central = Central::Zero;
      else if (consume("nz"))
        central = Central::NonZero;
      else
        fail("expected '!0' or '!nz'");
    }
    return resolve(weight, index, central);
  }

  CuspidalLabel resolve(int weight, std::optional<int> index, Central central) {
    if (weight % 2 != 0 || weight < 12)
      throw BadIndex("no level-one cusp form of weight " + std::to_string(weight));
    const auto dim = cusp_form_dimension(weight);
    if (dim && *dim == 0) throw BadIndex("no level-one cusp form of weight " + std::to_string(weight));
    if (index && *index < 1) throw BadIndex("eigenform index must be positive");
    if (dim && index && *index > *dim)
      throw BadIndex("weight " + std::to_string(weight) + " has " + std::to_string(*dim) +
                     " eigenform(s), index " + std::to_string(*index) + " is out of range");
    if (dim && *dim > 1 && !index) throw AmbiguousLabel(weight, *dim);
    if (!dim && warnings_ != nullptr)
      warnings_->push_back("weight " + std::to_string(weight) +
                           " is above the dimension table (k <= 30); the eigenform index is not checked");
    return CuspidalLabel::eigenform(weight, index.value_or(1), central);
  }

  int integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) fail_at(start, std::string(what) + " is too large");
    return v;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) { throw SyntaxError(at + 1, what); }

  std::string_view text_;
  std::vector<std::string>* warnings_;
  std::size_t pos_ = 0;
};

bool canonical_less(const Summand& a, const Summand& b) {
  const int na = a.label.n() * a.d, nb = b.label.n() * b.d;
  if (na != nb) return na > nb;
  if (a.label.trivial != b.label.trivial) return a.label.trivial;
  if (a.label.weight != b.label.weight) return a.label.weight < b.label.weight;
  if (a.label.index != b.label.index) return a.label.index < b.label.index;
  if (a.label.central != b.label.central) return a.label.central < b.label.central;
  return a.d < b.d;
}

}  // namespace

ArthurParameter parse_parameter(std::string_view text, int m, std::vector<std::string>* warnings) {
  return ArthurParameter{m, Parser(text, warnings).parameter()};
}

CuspidalLabel parse_label(std::string_view text, std::vector<std::string>* warnings) {
  return Parser(text, warnings).label_only();
}

ArthurParameter canonical(const ArthurParameter& psi) {
  ArthurParameter out = psi;
  std::stable_sort(out.summands.begin(), out.summands.end(), canonical_less);
  return out;
}

std::string format(const ArthurParameter& psi) {
  std::string out;
  for (const auto& s : canonical(psi).summands) {
    if (!out.empty()) out += "+";
    out += s.label.to_string();
    if (s.d != 1) out += "[" + std::to_string(s.d) + "]";
  }
  return out;
}

EpsilonTable parse_epsilon_table(std::string_view text) {
  EpsilonTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> parts;
    for (std::string w; words >> w;) parts.push_back(w);
    if (parts.empty()) continue;
    const std::string where = "epsilon table line " + std::to_string(no) + ": ";
    if (parts.size() != 3) throw ParseError(where + "expected 'labelA labelB +1|-1'");
    int sign = 0;
    if (parts[2] == "+1" || parts[2] == "1")
      sign = 1;
    else if (parts[2] == "-1")
      sign = -1;
    else
      throw ParseError(where + "sign must be +1 or -1, got '" + parts[2] + "'");
    try {
      table.set(parse_label(parts[0]), parse_label(parts[1]), sign);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  return table;
}

}  // namespace unimod
