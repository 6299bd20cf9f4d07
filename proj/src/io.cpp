#include "engel/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "engel/prime_field.hpp"

namespace engel {
namespace io {

namespace {

enum class Tok { integer, name, star, caret, plus, minus, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) { tok_ = {Tok::end, "", start}; return; }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      tok_ = {Tok::integer, s_.substr(start, i_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      tok_ = {Tok::name, s_.substr(start, i_ - start), start};
      return;
    }
    ++i_;
    switch (c) {
      case '*': tok_ = {Tok::star, "*", start}; return;
      case '^': tok_ = {Tok::caret, "^", start}; return;
      case '+': tok_ = {Tok::plus, "+", start}; return;
      case '-': tok_ = {Tok::minus, "-", start}; return;
      default: throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

int generator_index(const std::string& name, const std::vector<std::string>& generators,
                    std::size_t pos) {
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (generators[g] == name) return static_cast<int>(g);
  throw parse_error("unknown generator '" + name + "'", pos);
}

// factor := generator ('^' positive-integer)? ; appends letters.
void parse_factor(Lexer& lex, const std::vector<std::string>& generators,
                  std::vector<std::uint8_t>& letters) {
  Token t = lex.take();
  if (t.kind != Tok::name)
    throw parse_error("expected a generator name", t.pos);
  int g = generator_index(t.text, generators, t.pos);
  long exp = 1;
  if (lex.peek().kind == Tok::caret) {
    lex.take();
    Token e = lex.take();
    if (e.kind != Tok::integer) throw parse_error("expected an exponent", e.pos);
    try {
      exp = std::stol(e.text);
    } catch (const std::out_of_range&) {
      throw parse_error("exponent out of range", e.pos);
    }
    if (exp < 1) throw parse_error("exponent must be >= 1", e.pos);
    if (exp > 4096) throw parse_error("exponent out of range", e.pos);
  }
  letters.insert(letters.end(), static_cast<std::size_t>(exp), static_cast<std::uint8_t>(g));
}

// term := integer ('*' factor)+ | factor ('*' factor)*
std::pair<mpz_class, Word> parse_term(Lexer& lex, const std::vector<std::string>& generators) {
  mpz_class coeff = 1;
  std::vector<std::uint8_t> letters;
  Token head = lex.peek();
  if (head.kind == Tok::integer) {
    lex.take();
    coeff = mpz_class(head.text);
    if (lex.peek().kind != Tok::star)
      throw parse_error("constant terms are not allowed in the free algebra without unity",
                        head.pos);
    lex.take();
    parse_factor(lex, generators, letters);
  } else {
    parse_factor(lex, generators, letters);
  }
  while (lex.peek().kind == Tok::star) {
    lex.take();
    parse_factor(lex, generators, letters);
  }
  return {std::move(coeff), Word(std::move(letters), static_cast<int>(generators.size()))};
}

} // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  Lexer lex(text);
  if (lex.peek().kind == Tok::end) throw parse_error("empty word", 0);
  std::vector<std::uint8_t> letters;
  parse_factor(lex, generators, letters);
  while (lex.peek().kind == Tok::star) {
    lex.take();
    parse_factor(lex, generators, letters);
  }
  Token t = lex.peek();
  if (t.kind != Tok::end) throw parse_error("trailing input after word", t.pos);
  return Word(std::move(letters), static_cast<int>(generators.size()));
}

IntFreePoly parse_int_poly(const std::string& text, const std::vector<std::string>& generators) {
  Lexer lex(text);
  if (lex.peek().kind == Tok::end) throw parse_error("empty polynomial", 0);
  IntFreePoly p;
  bool negate = false;
  if (lex.peek().kind == Tok::minus) { // optional sign on the leading term
    lex.take();
    negate = true;
    if (lex.peek().kind == Tok::end) throw parse_error("dangling operator", 0);
  }
  while (true) {
    auto [coeff, word] = parse_term(lex, generators);
    if (negate) coeff = -coeff;
    auto it = p.terms.find(word);
    if (it == p.terms.end()) {
      if (coeff != 0) p.terms.emplace(std::move(word), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) p.terms.erase(it);
    }
    Token t = lex.take();
    if (t.kind == Tok::end) break;
    if (t.kind == Tok::plus) negate = false;
    else if (t.kind == Tok::minus) negate = true;
    else throw parse_error("expected '+', '-' or end of input", t.pos);
    if (lex.peek().kind == Tok::end)
      throw parse_error("dangling operator", t.pos);
  }
  return p;
}

std::string render_int_poly(const IntFreePoly& p, const std::vector<std::string>& generators) {
  if (p.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, z] : p.terms) {
    mpz_class mag = z < 0 ? mpz_class(-z) : z;
    bool negative = z < 0;
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    if (mag != 1) { s += mag.get_str(); s += "*"; }
    s += w.str(generators);
  }
  return s;
}

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& msg) { throw parse_error(msg, 0); }

std::vector<Word> parse_word_list(const json& arr, const std::vector<std::string>& generators,
                                  const char* field) {
  if (!arr.is_array() || arr.empty())
    schema_error(std::string(field) + " must be a non-empty array of words");
  std::vector<Word> out;
  for (const auto& item : arr) {
    if (!item.is_string()) schema_error(std::string(field) + " entries must be strings");
    out.push_back(parse_word(item.get<std::string>(), generators));
  }
  return out;
}

PresentationSpec parse_presentation_doc(const json& doc) {
  if (!doc.is_object()) schema_error("presentation document must be a JSON object");

  PresentationSpec spec;
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    schema_error("'generators' must be a non-empty array of names");
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) schema_error("generator names must be strings");
    std::string name = g.get<std::string>();
    if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
      schema_error("generator name '" + name + "' is not an identifier");
    for (const auto& seen : spec.generators)
      if (seen == name) schema_error("duplicate generator '" + name + "'");
    spec.generators.push_back(name);
  }
  if (spec.generators.size() > 250) schema_error("too many generators");

  if (!doc.contains("characteristic") || !doc["characteristic"].is_number_integer())
    schema_error("'characteristic' must be an integer (0 or a prime)");
  spec.characteristic = doc["characteristic"].get<long>();
  if (spec.characteristic != 0 &&
      !is_prime_u64(static_cast<std::uint64_t>(spec.characteristic)))
    schema_error("characteristic must be 0 or a prime, got " +
                 std::to_string(spec.characteristic));

  if (!doc.contains("relations") || !doc["relations"].is_array())
    schema_error("'relations' must be an array of clause objects");
  for (const auto& clause : doc["relations"]) {
    if (!clause.is_object() || !clause.contains("kind") || !clause["kind"].is_string())
      schema_error("each relation clause needs a string 'kind'");
    std::string kind = clause["kind"].get<std::string>();
    if (kind == "degree_cap") {
      int d = clause.at("min_total_degree").get<int>();
      if (d < 1) schema_error("degree_cap.min_total_degree must be >= 1");
      spec.relations.push_back(DegreeCap{d});
    } else if (kind == "generator_degree_cap") {
      std::string g = clause.at("generator").get<std::string>();
      int idx = -1;
      for (std::size_t i = 0; i < spec.generators.size(); ++i)
        if (spec.generators[i] == g) idx = static_cast<int>(i);
      if (idx < 0) schema_error("generator_degree_cap names unknown generator '" + g + "'");
      int d = clause.at("min_degree").get<int>();
      if (d < 1) schema_error("generator_degree_cap.min_degree must be >= 1");
      spec.relations.push_back(GeneratorDegreeCap{idx, d});
    } else if (kind == "degree_slice_except") {
      int d = clause.at("degree").get<int>();
      if (d < 1) schema_error("degree_slice_except.degree must be >= 1");
      auto kept = parse_word_list(clause.at("kept_words"), spec.generators, "kept_words");
      for (const auto& w : kept)
        if (w.degree() != d)
          schema_error("kept word of degree " + std::to_string(w.degree()) +
                       " in a degree-" + std::to_string(d) + " slice");
      spec.relations.push_back(DegreeSliceExcept{d, std::move(kept)});
    } else if (kind == "divisor_support") {
      int d = clause.at("max_degree").get<int>();
      if (d < 1) schema_error("divisor_support.max_degree must be >= 1");
      auto support =
          parse_word_list(clause.at("support_words"), spec.generators, "support_words");
      spec.relations.push_back(DivisorSupport{d, std::move(support)});
    } else if (kind == "polynomial") {
      if (!clause.contains("poly") || !clause["poly"].is_string())
        schema_error("polynomial clause needs a string 'poly'");
      spec.relations.push_back(
          ExplicitPolynomial{parse_int_poly(clause["poly"].get<std::string>(), spec.generators)});
    } else {
      schema_error("unknown relation kind '" + kind + "'");
    }
  }

  if (!spec.degree_bound())
    schema_error("unbounded presentation: a degree_cap clause is required");
  return spec;
}

} // namespace

PresentationSpec parse_presentation(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    return parse_presentation_doc(doc);
  } catch (const json::exception& e) {
    throw parse_error(std::string("presentation schema violation: ") + e.what(), 0);
  }
}

std::string render_presentation(const PresentationSpec& spec) {
  ordered_json doc;
  doc["generators"] = spec.generators;
  doc["characteristic"] = spec.characteristic;
  doc["relations"] = ordered_json::array();
  for (const auto& clause : spec.relations) {
    ordered_json c;
    if (auto* cap = std::get_if<DegreeCap>(&clause)) {
      c["kind"] = "degree_cap";
      c["min_total_degree"] = cap->min_total_degree;
    } else if (auto* gcap = std::get_if<GeneratorDegreeCap>(&clause)) {
      c["kind"] = "generator_degree_cap";
      c["generator"] = spec.generators[gcap->generator];
      c["min_degree"] = gcap->min_degree;
    } else if (auto* slice = std::get_if<DegreeSliceExcept>(&clause)) {
      c["kind"] = "degree_slice_except";
      c["degree"] = slice->degree;
      auto arr = ordered_json::array();
      for (const auto& w : slice->kept_words) arr.push_back(w.str(spec.generators));
      c["kept_words"] = arr;
    } else if (auto* div = std::get_if<DivisorSupport>(&clause)) {
      c["kind"] = "divisor_support";
      c["max_degree"] = div->max_degree;
      auto arr = ordered_json::array();
      for (const auto& w : div->support_words) arr.push_back(w.str(spec.generators));
      c["support_words"] = arr;
    } else if (auto* poly = std::get_if<ExplicitPolynomial>(&clause)) {
      c["kind"] = "polynomial";
      c["poly"] = render_int_poly(poly->poly, spec.generators);
    }
    doc["relations"].push_back(c);
  }
  return doc.dump(2) + "\n";
}

PresentationSpec load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open presentation file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

} // namespace io
} // namespace engel
