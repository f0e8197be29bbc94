#include "pgroup/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>

namespace pgroup {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits a line at '#', then on whitespace. A ':' ends a token by itself so
// "pow 1: ..." and "pow 1 : ..." tokenize the same way.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ':') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != ':' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class BlockParser {
public:
  BlockParser(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  std::vector<PcPresentation> run() {
    std::vector<PcPresentation> groups;
    while (next_line()) {
      if (tokens_.empty()) continue;
      expect_keyword("group");
      if (tokens_.size() != 2)
        fail(tokens_.size() > 2 ? tokens_[2].column : last_column(),
             "expected 'group <name>'");
      groups.push_back(parse_block(std::string(tokens_[1].text)));
    }
    return groups;
  }

private:
  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(source_, line_no_, column, message);
  }

  std::size_t last_column() const {
    return tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
  }

  bool next_line() {
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    std::string_view line = end == std::string_view::npos
                                ? text_.substr(pos_)
                                : text_.substr(pos_, end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_no_;
    tokens_ = tokenize(line);
    return true;
  }

  void expect_keyword(std::string_view kw) const {
    if (tokens_.empty() || tokens_[0].text != kw)
      fail(tokens_.empty() ? 1 : tokens_[0].column,
           "expected '" + std::string(kw) + "', got '" +
               (tokens_.empty() ? "" : std::string(tokens_[0].text)) + "'");
  }

  std::int64_t parse_int(const Token& t) const {
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec == std::errc::result_out_of_range)
      fail(t.column, "exponent out of range: '" + std::string(t.text) + "'");
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return value;
  }

  std::uint32_t parse_index(const Token& t) const {
    std::int64_t v = parse_int(t);
    if (v < 1 || v > UINT32_MAX)
      fail(t.column, "generator index out of range: '" + std::string(t.text) + "'");
    return static_cast<std::uint32_t>(v);
  }

  // "pow 1: 0 0 1" -> keyword, indices..., ':', exponents. Negative exponents
  // are normalized mod p here.
  ExponentVec parse_exponents(std::size_t from, std::uint32_t prime,
                              std::uint32_t ngens) const {
    if (from < tokens_.size() && tokens_[from].text == ":") ++from;
    if (tokens_.size() - from != ngens)
      fail(from < tokens_.size() ? tokens_[from].column : last_column(),
           "expected " + std::to_string(ngens) + " exponents, got " +
               std::to_string(tokens_.size() - from));
    ExponentVec v(ngens, 0);
    for (std::size_t k = 0; k < ngens; ++k) {
      std::int64_t e = parse_int(tokens_[from + k]) % static_cast<std::int64_t>(prime);
      if (e < 0) e += prime;
      v[k] = static_cast<std::uint32_t>(e);
    }
    return v;
  }

  PcPresentation parse_block(std::string name) {
    std::optional<std::uint32_t> prime;
    std::optional<std::uint32_t> ngens;
    std::map<std::uint32_t, ExponentVec> powers;
    std::map<std::pair<std::uint32_t, std::uint32_t>, ExponentVec> comms;
    const std::size_t header_line = line_no_;

    while (next_line()) {
      if (tokens_.empty()) continue;
      const Token& head = tokens_[0];
      if (head.text == "end") {
        if (tokens_.size() != 1) fail(tokens_[1].column, "unexpected tokens after 'end'");
        if (!prime) fail(1, "group '" + name + "' has no 'prime' line");
        if (!ngens) fail(1, "group '" + name + "' has no 'ngens' line");
        try {
          return PcPresentation(std::move(name), *prime, *ngens,
                                std::move(powers), std::move(comms));
        } catch (const DomainError& e) {
          throw ParseError(source_, header_line, 1, e.what());
        }
      } else if (head.text == "prime") {
        if (prime) fail(head.column, "duplicate 'prime' line");
        if (tokens_.size() != 2) fail(last_column(), "expected 'prime <p>'");
        prime = parse_index(tokens_[1]);
      } else if (head.text == "ngens") {
        if (ngens) fail(head.column, "duplicate 'ngens' line");
        if (tokens_.size() != 2) fail(last_column(), "expected 'ngens <n>'");
        std::uint32_t n = parse_index(tokens_[1]);
        if (n > 64) fail(tokens_[1].column, "ngens must be <= 64");
        ngens = n;
      } else if (head.text == "pow") {
        if (!prime || !ngens)
          fail(head.column, "'pow' before 'prime'/'ngens'");
        if (tokens_.size() < 2) fail(last_column(), "expected 'pow <i>: ...'");
        std::uint32_t i = parse_index(tokens_[1]);
        if (i > *ngens) fail(tokens_[1].column, "generator index out of range");
        if (powers.count(i))
          fail(tokens_[1].column, "duplicate relation pow " + std::to_string(i));
        powers[i] = parse_exponents(2, *prime, *ngens);
      } else if (head.text == "comm") {
        if (!prime || !ngens)
          fail(head.column, "'comm' before 'prime'/'ngens'");
        if (tokens_.size() < 3) fail(last_column(), "expected 'comm <j> <i>: ...'");
        std::uint32_t j = parse_index(tokens_[1]);
        std::uint32_t i = parse_index(tokens_[2]);
        if (j > *ngens || i > *ngens)
          fail(tokens_[1].column, "generator index out of range");
        if (j <= i)
          fail(tokens_[1].column, "relation comm " + std::to_string(j) + " " +
                                      std::to_string(i) + " requires j > i");
        if (comms.count({j, i}))
          fail(tokens_[1].column, "duplicate relation comm " +
                                      std::to_string(j) + " " + std::to_string(i));
        comms[{j, i}] = parse_exponents(3, *prime, *ngens);
      } else {
        fail(head.column, "unknown directive '" + std::string(head.text) + "'");
      }
    }
    fail(1, "group '" + name + "' is missing its 'end' line");
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<PcPresentation> parse_presentations(std::string_view text,
                                                const std::string& source_name) {
  return BlockParser(text, source_name).run();
}

PcPresentation parse_presentation(std::string_view text,
                                  const std::string& source_name) {
  auto groups = parse_presentations(text, source_name);
  if (groups.size() != 1)
    throw ParseError(source_name, 1, 1,
                     "expected exactly one group block, found " +
                         std::to_string(groups.size()));
  return std::move(groups.front());
}

}  // namespace pgroup
