#include "kron/hrep.hpp"

#include <sstream>

#include "kron/error.hpp"

namespace kron {

namespace {

std::string join_row(const IntVec& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(row[i]);
  }
  return s;
}

// Splits into non-empty, comment-stripped lines.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string s(line);
    if (s.find_first_not_of(" \t\r") != std::string::npos) out.push_back(s);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

IntVec parse_ints(const std::string& line, std::size_t expected, std::size_t lineno) {
  std::istringstream in(line);
  IntVec v;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      v.push_back(x);
    } catch (const std::exception&) {
      throw_parse("hrep: bad integer '" + tok + "' on content line " + std::to_string(lineno));
    }
  }
  if (v.size() != expected) {
    throw_parse("hrep: expected " + std::to_string(expected) + " integers on content line " +
                std::to_string(lineno) + ", got " + std::to_string(v.size()));
  }
  return v;
}

std::size_t parse_header(const std::string& line, const std::string& key, std::size_t lineno) {
  std::istringstream in(line);
  std::string word;
  long long n = -1;
  std::string extra;
  if (!(in >> word >> n) || word != key || n < 0 || (in >> extra)) {
    throw_parse("hrep: expected '" + key + " <count>' on content line " + std::to_string(lineno));
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

std::string HRep::emit() const {
  std::ostringstream out;
  out << "dim " << dim << '\n';
  out << "ineq " << ineq.size() << '\n';
  for (std::size_t i = 0; i < ineq.size(); ++i) {
    out << join_row(ineq[i]);
    if (i < ineq_notes.size() && !ineq_notes[i].empty()) out << "  # " << ineq_notes[i];
    out << '\n';
  }
  out << "eq " << eq.size() << '\n';
  for (std::size_t i = 0; i < eq.size(); ++i) out << join_row(eq[i]) << ' ' << eq_rhs[i] << '\n';
  return out.str();
}

HRep HRep::parse(std::string_view text) {
  auto lines = content_lines(text);
  std::size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= lines.size()) throw_parse("hrep: unexpected end of input");
    return lines[at++];
  };
  HRep h;
  std::size_t dim = parse_header(next(), "dim", at);
  h.dim = static_cast<int>(dim);
  std::size_t m = parse_header(next(), "ineq", at);
  for (std::size_t i = 0; i < m; ++i) h.ineq.push_back(parse_ints(next(), dim, at));
  std::size_t k = parse_header(next(), "eq", at);
  for (std::size_t i = 0; i < k; ++i) {
    IntVec row = parse_ints(next(), dim + 1, at);
    h.eq_rhs.push_back(row.back());
    row.pop_back();
    h.eq.push_back(std::move(row));
  }
  if (at != lines.size()) throw_parse("hrep: trailing content after the equality block");
  return h;
}

std::string emit_points(const std::vector<IntVec>& points) {
  std::string s;
  for (const auto& p : points) s += join_row(p) + '\n';
  return s;
}

}  // namespace kron
