#include "charprod/cli.hpp"

#include "charprod/chains.hpp"
#include "charprod/error.hpp"
#include "charprod/zoo.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace charprod::cli {

std::optional<Command> parse_command(const std::string& name) {
  if (name == "table")
    return Command::table;
  if (name == "decompose")
    return Command::decompose;
  if (name == "eta")
    return Command::eta;
  if (name == "chain")
    return Command::chain;
  if (name == "verify")
    return Command::verify;
  if (name == "corpus")
    return Command::corpus;
  if (name == "pmax")
    return Command::pmax;
  return std::nullopt;
}

ChiSelector parse_chi_selector(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw ParseError("--chi expects row=<i> or deg=<d>, got '" + text + "'");
  const std::string key = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9)
    throw ParseError("--chi value must be a non-negative integer, got '" + value + "'");
  ChiSelector s;
  if (key == "row")
    s.kind = ChiSelector::Kind::row;
  else if (key == "deg")
    s.kind = ChiSelector::Kind::degree;
  else
    throw ParseError("--chi key must be row or deg, got '" + key + "'");
  s.value = std::stoul(value);
  return s;
}

namespace {

Group resolve_group(const RunConfig& c) {
  if (c.zoo && c.file)
    throw ParseError("give exactly one of --zoo and --file");
  if (c.zoo)
    return from_label(*c.zoo);
  if (c.file) {
    std::ifstream in(*c.file);
    if (!in)
      throw ParseError("cannot read " + *c.file);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_group(ss.str());
  }
  throw ParseError("a group is required: --zoo <label> or --file <path>");
}

std::vector<std::size_t> select_rows(const CharacterTable& t, const std::optional<ChiSelector>& sel) {
  std::vector<std::size_t> rows;
  if (!sel) {
    for (std::size_t i = 0; i < t.size(); ++i)
      rows.push_back(i);
    return rows;
  }
  if (sel->kind == ChiSelector::Kind::row) {
    if (sel->value >= t.size())
      throw ParseError("row " + std::to_string(sel->value) + " out of range; the table has " +
                       std::to_string(t.size()) + " rows");
    return {sel->value};
  }
  for (const auto& r : t.rows)
    if (r.degree == sel->value)
      return {r.index};
  throw ParseError("no irreducible of degree " + std::to_string(sel->value));
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void print_chain(Workspace& ws, std::size_t row, std::ostream& out) {
  const auto f = ws.faithful(row);
  const CharacterAnalysis a = analyze(*f.ws, f.row);
  out << "chain group=" << ws.group().label() << " chi=" << row << " faithful-order=" << f.ws->group().order()
      << " eta=" << a.eta();
  if (!f.ws->solvable()) {
    out << " status=hypotheses-not-met detail=group not solvable\n";
    return;
  }
  const OmegaLattice om = omega(f.ws->group(), a.alpha_kernels);
  const Chain c = build_maximal_chain(a, om);
  std::size_t sum = 0;
  std::uint64_t prod = 1;
  for (std::size_t r : c.r) {
    sum += r;
    prod *= r;
  }
  out << " omega=" << om.members.size() << " k=" << c.k() << " sum-r=" << sum << " prod-r=" << prod << "\n";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const View& v = f.ws->view(c.steps[i].n);
    out << "  step=" << i << " order=" << c.steps[i].n.order() << " theta=" << c.steps[i].theta
        << " deg=" << v.table.rows[c.steps[i].theta].degree;
    if (i > 0)
      out << " r=" << c.r[i - 1];
    out << "\n";
  }
}

bool verify_group(Workspace& ws, const std::optional<ChiSelector>& sel, const VerifyOptions& opts,
                  std::ostream& out) {
  bool ok = true;
  for (std::size_t row : select_rows(ws.table(), sel))
    for (const auto& r : verify_character(ws, row, opts)) {
      out << r.line() << "\n";
      ok = ok && r.status != Status::fail;
    }
  return ok;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
  case Command::pmax:
    if (c.pmax_n < 1 || c.pmax_n > 64)
      throw ParseError("pmax expects 1 <= n <= 64");
    out << "p(" << c.pmax_n << ")=" << p_max(c.pmax_n) << "\n";
    return exit_ok;
  case Command::corpus:
    for (const auto& label : corpus_labels(CorpusSpec{c.max_order, {}, true}))
      out << label << " " << from_label(label).order() << "\n";
    return exit_ok;
  default:
    break;
  }

  if (c.command == Command::verify && c.corpus) {
    if (c.zoo || c.file || c.chi)
      throw ParseError("verify --corpus takes no group or --chi");
    bool ok = true;
    std::size_t groups = 0;
    for (const auto& label : corpus_labels(CorpusSpec{c.max_order, {}, true})) {
      Workspace ws(from_label(label));
      ok = verify_group(ws, std::nullopt, {c.exhaustive_chains}, out) && ok;
      ++groups;
    }
    out << "corpus groups=" << groups << " result=" << (ok ? "pass" : "fail") << "\n";
    return ok ? exit_ok : exit_verification_failed;
  }
  if (c.corpus)
    throw ParseError("--corpus applies to verify only");

  Workspace ws(resolve_group(c));
  const CharacterTable& t = ws.table();
  switch (c.command) {
  case Command::table:
    out << format_table(t);
    return exit_ok;
  case Command::decompose:
    for (std::size_t row : select_rows(t, c.chi)) {
      const Decomposition d = norm_decomposition(t, t.rows[row].values);
      out << format_decomposition(row, t.rows[row].degree, d) << "\n";
      out << "coeffs=" << join_ints(d.coeffs) << "\n";
    }
    return exit_ok;
  case Command::eta:
    for (std::size_t row : select_rows(t, c.chi)) {
      const Eta e = eta(t, t.rows[row].values);
      out << "eta=" << e.n << "\n";
      out << "chi=" << row << " deg=" << t.rows[row].degree << " multiplicities=" << join_ints(e.multiplicities)
          << "\n";
    }
    return exit_ok;
  case Command::chain:
    for (std::size_t row : select_rows(t, c.chi))
      print_chain(ws, row, out);
    return exit_ok;
  case Command::verify:
    return verify_group(ws, c.chi, {c.exhaustive_chains}, out) ? exit_ok : exit_verification_failed;
  default:
    return exit_usage;
  }
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

} // namespace charprod::cli
