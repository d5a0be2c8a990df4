#include "lgmf/mf_io.hpp"

#include <sstream>

#include "lgmf/errors.hpp"

namespace lgmf {

std::string write_mf(const MatrixFactorization& m) {
  std::ostringstream os;
  os << "mf v1\n";
  os << m.ring->describe() << "\n";
  os << "wleft " << m.w_left.to_string() << "\n";
  os << "wright " << m.w_right.to_string() << "\n";
  os << "gens";
  for (const auto& g : m.gens) os << " " << g.parity << ":" << g.degree;
  os << "\n";
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (!m.diff(i, j).is_zero()) os << "d " << i << " " << j << " = " << m.diff(i, j).to_string() << "\n";
  return os.str();
}

Ring parse_ring_line(const std::string& line) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  if (word != "ring") throw ParseError("expected 'ring' line, got '" + line + "'");
  std::vector<std::string> names;
  std::vector<Rational> weights;
  int order = 1;
  while (is >> word) {
    if (word == "cyclo") {
      if (!(is >> order)) throw ParseError("missing cyclotomic order in '" + line + "'");
      continue;
    }
    auto colon = word.find(':');
    if (colon == std::string::npos) throw ParseError("bad variable spec '" + word + "'");
    names.push_back(word.substr(0, colon));
    weights.push_back(Rational::parse(word.substr(colon + 1)));
  }
  return make_ring(names, weights, order);
}

namespace {

std::string after_keyword(const std::string& line, const std::string& key) {
  if (line.compare(0, key.size() + 1, key + " ") != 0 && line != key)
    throw ParseError("expected '" + key + "' line, got '" + line + "'");
  return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
}

std::vector<std::string> occurring(const MultiPoly& p) {
  std::vector<std::string> out;
  for (auto i : p.support_vars()) out.push_back(p.ring()->names[i]);
  return out;
}

}  // namespace

MatrixFactorization read_mf(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 5 || lines[0] != "mf v1") throw ParseError("not an 'mf v1' document");
  MatrixFactorization m;
  m.ring = parse_ring_line(lines[1]);
  m.w_left = parse_poly(after_keyword(lines[2], "wleft"), m.ring);
  m.w_right = parse_poly(after_keyword(lines[3], "wright"), m.ring);
  m.left_vars = occurring(m.w_left);
  m.right_vars = occurring(m.w_right);
  std::istringstream gs(after_keyword(lines[4], "gens"));
  std::string tok;
  while (gs >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("bad generator '" + tok + "'");
    int parity = std::stoi(tok.substr(0, colon));
    if (parity != 0 && parity != 1) throw ParseError("bad parity in '" + tok + "'");
    m.gens.push_back({parity, Rational::parse(tok.substr(colon + 1))});
  }
  const std::size_t n = m.gens.size();
  m.diff = PolyMatrix(m.ring, n, n);
  for (std::size_t k = 5; k < lines.size(); ++k) {
    std::istringstream ls(lines[k]);
    std::string d, eq;
    std::size_t i = 0, j = 0;
    if (!(ls >> d >> i >> j >> eq) || d != "d" || eq != "=") throw ParseError("bad entry line '" + lines[k] + "'");
    if (i >= n || j >= n) throw ParseError("entry index out of range in '" + lines[k] + "'");
    std::string rest;
    std::getline(ls, rest);
    m.diff(i, j) = parse_poly(rest, m.ring);
  }
  return m;
}

}  // namespace lgmf
