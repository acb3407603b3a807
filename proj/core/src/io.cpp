#include "lrclab/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "lrclab/error.hpp"

namespace lrclab {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n' &&
             text[i] != '#')
        ++i;
      out.push_back({text.substr(start, i - start), line});
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  [[nodiscard]] bool done() const { return pos_ >= t_.size(); }
  [[nodiscard]] std::optional<std::string_view> peek() const {
    return done() ? std::nullopt : std::optional<std::string_view>(t_[pos_].text);
  }
  void skip() { ++pos_; }

  std::uint64_t number(const char* what) {
    if (done()) fail(Errc::ParseError, std::string("unexpected end of input, expected ") + what);
    const Token& tok = t_[pos_++];
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
      fail(Errc::ParseError, "line " + std::to_string(tok.line) + ": expected " + what + ", got '" +
                                 std::string(tok.text) + "'");
    return v;
  }

  GFMatrix matrix() {
    const auto q = number("field order");
    const auto rows = number("row count");
    const auto cols = number("column count");
    if (q < 2 || q > 65536) fail(Errc::ParseError, "field order " + std::to_string(q) + " out of range");
    FieldSpec f = [&] {
      try {
        return FieldSpec::from_order(static_cast<std::uint32_t>(q));
      } catch (const Error& e) {
        fail(Errc::ParseError, std::string("field order: ") + e.what());
      }
    }();
    if (rows * cols > (std::uint64_t{1} << 26)) fail(Errc::ParseError, "matrix too large");
    GFMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const auto v = number("matrix entry");
        if (v >= q)
          fail(Errc::ParseError, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v) +
                                     " is not below q = " + std::to_string(q));
        m.set(i, j, FieldElement{static_cast<std::uint32_t>(v)});
      }
    return m;
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string write_matrix(const GFMatrix& m) {
  std::string out = std::to_string(m.field().q()) + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(m.at(i, j).value);
    }
    out += '\n';
  }
  return out;
}

GFMatrix parse_matrix(std::string_view text) {
  Reader r(tokenize(text));
  GFMatrix m = r.matrix();
  if (!r.done()) fail(Errc::ParseError, "trailing data after matrix");
  return m;
}

std::string write_code(const LinearCode& c) {
  return "G\n" + write_matrix(c.generator()) + "H\n" + write_matrix(c.parity_check());
}

LinearCode parse_code(std::string_view text) {
  Reader r(tokenize(text));
  std::optional<GFMatrix> g, h;
  while (!r.done()) {
    const auto tag = *r.peek();
    if (tag == "G" || tag == "H") {
      r.skip();
      auto& slot = tag == "G" ? g : h;
      if (slot) fail(Errc::ParseError, "duplicate " + std::string(tag) + " block");
      slot = r.matrix();
    } else if (!g && !h) {
      g = r.matrix();
    } else {
      fail(Errc::ParseError, "unexpected token '" + std::string(tag) + "'");
    }
  }
  if (!g && !h) fail(Errc::ParseError, "no matrix found");
  const auto build = [](auto&& make) {
    try {
      return make();
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) throw;
      fail(Errc::ParseError, std::string("invalid code: ") + e.what());
    }
  };
  if (!g) return build([&] { return LinearCode::from_parity(*h); });
  LinearCode c = build([&] { return LinearCode::from_generator(*g); });
  if (h) {
    if (h->field() != g->field() || h->cols() != g->cols())
      fail(Errc::ParseError, "G and H blocks disagree on field or length");
    if (!g->mul_transpose(*h).is_zero() || rank(*h) + c.k() != c.n())
      fail(Errc::ParseError, "H is not a parity-check matrix of G");
  }
  return c;
}

GFMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

LinearCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write " + path.string());
  out << text;
}

}  // namespace lrclab
