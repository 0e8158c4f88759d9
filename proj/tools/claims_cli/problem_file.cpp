#include "problem_file.hpp"

#include <istream>
#include <sstream>

namespace claims::cli {

namespace {

[[noreturn]] void fail_at(const std::string& name, int line, std::size_t column,
                          const std::string& message) {
  throw ParseError(name + ":" + std::to_string(line) + ":" + std::to_string(column + 1) + ": " +
                   message);
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& text, std::string_view separators) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (separators.find(text[i]) != std::string_view::npos) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && separators.find(text[i]) == std::string_view::npos) ++i;
    tokens.push_back(Token{text.substr(start, i - start), start});
  }
  return tokens;
}

Rational parse_decimal_token(const Token& token, const std::string& name, int line) {
  auto value = parse_decimal(token.text);
  if (!value) {
    fail_at(name, line, token.column, "not a finite decimal: '" + token.text + "'");
  }
  return *value;
}

}  // namespace

ProblemFile parse_problem_file(std::istream& in, const std::string& name) {
  ProblemFile file;
  bool saw_claims = false;
  bool saw_estate = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    std::vector<Token> tokens = tokenize(line, " \t\r,=");
    if (tokens.empty()) continue;
    const std::string& key = tokens.front().text;
    std::vector<Token> values(tokens.begin() + 1, tokens.end());
    if (key == "claims") {
      if (values.empty()) fail_at(name, line_no, tokens.front().column, "claims needs values");
      for (const Token& t : values) file.claims.push_back(parse_decimal_token(t, name, line_no));
      saw_claims = true;
    } else if (key == "estate") {
      if (values.size() != 1) {
        fail_at(name, line_no, tokens.front().column, "estate needs exactly one value");
      }
      file.estate = parse_decimal_token(values.front(), name, line_no);
      saw_estate = true;
    } else if (key == "labels") {
      for (const Token& t : values) file.labels.push_back(t.text);
    } else {
      fail_at(name, line_no, tokens.front().column, "unknown key '" + key + "'");
    }
  }
  if (!saw_claims) throw ParseError(name + ": missing 'claims' line");
  if (!saw_estate) throw ParseError(name + ": missing 'estate' line");
  if (!file.labels.empty() && file.labels.size() != file.claims.size()) {
    throw ParseError(name + ": labels count differs from claims count");
  }
  return file;
}

ProblemFile parse_batch_line(const std::string& line, const std::string& name, int line_no) {
  auto semi = line.find(';');
  if (semi == std::string::npos) {
    fail_at(name, line_no, line.size(), "batch line needs 'claims;estate'");
  }
  ProblemFile file;
  for (const Token& t : tokenize(line.substr(0, semi), " \t\r,")) {
    file.claims.push_back(parse_decimal_token(t, name, line_no));
  }
  if (file.claims.empty()) fail_at(name, line_no, 0, "batch line has no claims");
  std::vector<Token> estate_tokens = tokenize(line.substr(semi + 1), " \t\r,");
  if (estate_tokens.size() != 1) {
    fail_at(name, line_no, semi + 1, "batch line needs exactly one estate");
  }
  Token estate_token = estate_tokens.front();
  estate_token.column += semi + 1;
  file.estate = parse_decimal_token(estate_token, name, line_no);
  return file;
}

}  // namespace claims::cli
