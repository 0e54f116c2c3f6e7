#include "charprod/error.hpp"
#include "charprod/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace charprod {

namespace {

std::vector<std::string> nonblank_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos)
      continue;
    out.push_back(line);
  }
  return out;
}

unsigned parse_unsigned(std::string_view tok, const char* what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" +
                     std::string(tok) + "'");
  return v;
}

// "(1 2 3)(4 5)" with 1-based points -> 0-based image vector.
std::vector<unsigned> parse_cycles(const std::string& line, unsigned degree) {
  std::vector<unsigned> image(degree);
  for (unsigned i = 0; i < degree; ++i)
    image[i] = i;
  std::vector<char> used(degree, 0);
  std::size_t pos = 0;
  bool any = false;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
      ++pos;
  };
  skip_ws();
  while (pos < line.size()) {
    if (line[pos] != '(')
      throw ParseError("malformed cycle notation: '" + line + "'");
    ++pos;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (pos >= line.size())
        throw ParseError("unterminated cycle: '" + line + "'");
      if (line[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9')
        ++pos;
      if (start == pos)
        throw ParseError("malformed cycle notation: '" + line + "'");
      unsigned pt = parse_unsigned(std::string_view(line).substr(start, pos - start), "cycle point");
      if (pt < 1 || pt > degree)
        throw ParseError("cycle point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      if (used[pt - 1])
        throw ParseError("point " + std::to_string(pt) + " repeated in generator '" + line + "'");
      used[pt - 1] = 1;
      cycle.push_back(pt - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    any = true;
    skip_ws();
  }
  if (!any)
    throw ParseError("empty generator line");
  return image;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

} // namespace

Group group_from_permutations(unsigned degree, const std::vector<std::vector<unsigned>>& gens,
                              std::string label, std::size_t cap) {
  using Perm = std::vector<unsigned>;
  for (const auto& p : gens)
    if (p.size() != degree)
      throw ParseError("generator has the wrong degree");
  Perm identity(degree);
  for (unsigned i = 0; i < degree; ++i)
    identity[i] = i;

  // BFS over right multiplication by generators; (x*s)(i) = s(x(i)).
  std::map<Perm, Element> index;
  std::vector<Perm> elems{identity};
  index.emplace(identity, 0);
  std::vector<std::vector<Element>> rmul;
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<Element> row(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm y(degree);
      for (unsigned pt = 0; pt < degree; ++pt)
        y[pt] = gens[s][elems[i][pt]];
      auto [it, inserted] = index.emplace(y, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() + 1 > cap)
          throw CapacityError("group order exceeds the cap of " + std::to_string(cap));
        elems.push_back(std::move(y));
        parent.push_back(static_cast<Element>(i));
        via.push_back(s);
      }
      row[s] = it->second;
    }
    rmul.push_back(std::move(row));
  }

  // Column b of the table from column parent(b): a*b = (a*parent(b))*gen.
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    table[a * n] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      table[a * n + b] = rmul[table[a * n + parent[b]]][via[b]];

  Group g(n, std::move(table), std::move(label));
  return g.with_perm_presentation(PermPresentation{degree, gens});
}

Group load_group(std::string_view text, std::size_t cap) {
  auto lines = nonblank_lines(text);
  if (lines.empty())
    throw ParseError("empty group description");
  auto head = split_ws(lines[0]);
  if (head.size() != 2)
    throw ParseError("header must be 'perm <degree>' or 'cayley <n>'");

  if (head[0] == "perm") {
    unsigned degree = parse_unsigned(head[1], "degree");
    if (degree == 0)
      throw ParseError("permutation degree must be positive");
    std::vector<std::vector<unsigned>> gens;
    for (std::size_t i = 1; i < lines.size(); ++i)
      gens.push_back(parse_cycles(lines[i], degree));
    return group_from_permutations(degree, gens, "perm", cap);
  }

  if (head[0] == "cayley") {
    unsigned n = parse_unsigned(head[1], "order");
    if (n == 0)
      throw ParseError("group order must be positive");
    if (n > cap)
      throw CapacityError("group order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    if (lines.size() != std::size_t(n) + 1)
      throw ParseError("expected " + std::to_string(n) + " table rows");
    std::vector<Element> table;
    table.reserve(std::size_t(n) * n);
    for (std::size_t i = 1; i <= n; ++i) {
      auto toks = split_ws(lines[i]);
      if (toks.size() != n)
        throw ParseError("row " + std::to_string(i - 1) + " has " + std::to_string(toks.size()) + " entries");
      for (const auto& t : toks)
        table.push_back(parse_unsigned(t, "table entry"));
    }
    return Group(n, std::move(table), "cayley");
  }

  throw ParseError("unknown group format '" + head[0] + "'");
}

std::string to_cayley_text(const Group& g) {
  std::string out = "cayley " + std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (b)
        out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  return out;
}

} // namespace charprod
