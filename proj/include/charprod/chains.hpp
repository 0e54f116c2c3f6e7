#pragma once

#include "charprod/char_algebra.hpp"
#include "charprod/char_table.hpp"
#include "charprod/group.hpp"
#include "charprod/normal_lattice.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace charprod {

/// A subgroup of a workspace group together with its own character table.
struct View {
  EmbeddedGroup embedded;
  CharacterTable table;
};

/// Lazily computed data for one group: its table, normal subgroups, chief
/// series, subgroup views and faithful quotients. Not thread-safe; use one
/// workspace per task. References it hands out stay valid for its lifetime.
class Workspace {
public:
  explicit Workspace(Group g);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const Group& group() const { return group_; }
  const CharacterTable& table();
  const std::vector<Subgroup>& normal_subgroups();
  const ChiefSeries& chief_series();
  bool solvable();
  bool supersolvable();

  const View& view(const Subgroup& s);

  /// (G/Ker chi, deflated chi). The workspace itself when chi is faithful.
  struct Faithful {
    Workspace* ws = nullptr;
    std::size_t row = 0;
    Subgroup kernel;
  };
  Faithful faithful(std::size_t row);

private:
  struct QuotientData {
    std::unique_ptr<Workspace> ws;
    std::vector<std::size_t> lift;  ///< quotient row -> row of this table
  };

  Group group_;
  std::optional<CharacterTable> table_;
  std::optional<std::vector<Subgroup>> normals_;
  std::optional<ChiefSeries> series_;
  std::optional<bool> solvable_;
  std::map<std::vector<Element>, std::unique_ptr<View>> views_;
  std::map<std::vector<Element>, QuotientData> quotients_;
};

/// s, a subgroup of the workspace group, written in the indices of v's group.
Subgroup localize(const View& v, const Subgroup& s);

/// chi * conj(chi) data for a character of a workspace group.
struct CharacterAnalysis {
  Workspace* ws = nullptr;
  std::size_t row = 0;
  unsigned degree = 1;
  Decomposition decomposition;
  std::vector<std::size_t> alphas;  ///< non-principal constituents
  std::vector<Subgroup> alpha_kernels;

  std::size_t eta() const { return alphas.size(); }
};

CharacterAnalysis analyze(Workspace& ws, std::size_t row);

/// All intersections of the alpha kernels, the empty intersection being G.
struct OmegaLattice {
  std::vector<Subgroup> members;  ///< sorted by (order, members)
  Subgroup bottom;
};

inline constexpr std::size_t omega_capacity = 4096;

/// Kernels are folded in one at a time with deduplication. Throws
/// CapacityError if the lattice grows beyond omega_capacity members.
OmegaLattice omega(const Group& g, const std::vector<Subgroup>& alpha_kernels);

struct ChainStep {
  Subgroup n;
  std::size_t theta = 0;  ///< row in the table of view(n)
};

/// (N_0, theta_0) > ... > (N_k, theta_k) with N_0 = G, theta_0 = chi.
struct Chain {
  std::vector<ChainStep> steps;
  /// r[i-1] = #{alpha_j : N_i <= Ker alpha_j, N_{i-1} not <= Ker alpha_j}
  std::vector<std::size_t> r;

  std::size_t k() const { return steps.size() - 1; }
};

/// theta restricted to m is reducible. theta is a row of view(n), m <= n.
bool restriction_reducible(Workspace& ws, const Subgroup& n, std::size_t theta, const Subgroup& m);

/// Irreducible constituents of theta restricted to m, as rows of view(m).
std::vector<std::size_t> restriction_constituents(Workspace& ws, const Subgroup& n, std::size_t theta,
                                                  const Subgroup& m);

/// At each step takes, among the members of omega below N_{i-1} on which
/// theta_{i-1} reduces, the one of largest order (then smallest member
/// list), and the first constituent in table order.
Chain build_maximal_chain(const CharacterAnalysis& a, const OmegaLattice& om);

/// Every maximal chain, over all choices of maximal member and constituent.
/// Throws CapacityError beyond `limit` chains.
std::vector<Chain> all_maximal_chains(const CharacterAnalysis& a, const OmegaLattice& om, std::size_t limit = 5000);

/// (N_i, theta_i^g) for every step, conjugating by g in G.
Chain conjugate_chain(const CharacterAnalysis& a, const Chain& c, Element g);

std::vector<std::size_t> chain_r(const CharacterAnalysis& a, const Chain& c);

/// Normal subgroups L of G with L/N_i a chief factor and L <= N_{i-1}.
std::vector<Subgroup> step_chief_factors(const CharacterAnalysis& a, const Chain& c, std::size_t i);

/// Maximum product of a composition of n, 1 <= n <= 64.
std::uint64_t p_max(unsigned n);

// --- reports ---------------------------------------------------------------

enum class Status { pass, fail, hypotheses_not_met };

std::string to_string(Status s);

struct VerificationReport {
  std::string check;
  std::string group;
  std::size_t chi = 0;
  Status status = Status::pass;
  std::string detail;

  std::string line() const;
};

/// Label and row of the character as the caller knows it, before any
/// faithfulness normalization.
struct ReportContext {
  std::string group;
  std::size_t chi = 0;
};

VerificationReport verify_lemma_basico1(Workspace& ws, const Subgroup& l, const Subgroup& n, std::size_t theta,
                                        const ReportContext& ctx);
VerificationReport verify_lemma_basicon(Workspace& ws, std::size_t row, const ReportContext& ctx);
VerificationReport verify_theorem_C(Workspace& ws, std::size_t row, const ReportContext& ctx);
VerificationReport verify_lemma_center(Workspace& ws, std::size_t row, const ReportContext& ctx);
VerificationReport verify_theorem_B(Workspace& ws, std::size_t row, const ReportContext& ctx);
VerificationReport verify_supersolvable_bound(Workspace& ws, std::size_t row, const ReportContext& ctx);
VerificationReport verify_eta_parity(Workspace& ws, std::size_t row, const ReportContext& ctx);

/// The chain checks take a faithful analysis (see Workspace::faithful).
VerificationReport verify_lemma_maximal(const CharacterAnalysis& a, const Chain& c, const ReportContext& ctx);
VerificationReport verify_plusone_steps(const CharacterAnalysis& a, const Chain& c, const ReportContext& ctx);
VerificationReport verify_lemma_uinthemiddle(const CharacterAnalysis& a, const Chain& c, const ReportContext& ctx);
VerificationReport verify_chain_definition(const CharacterAnalysis& a, const OmegaLattice& om, const Chain& c,
                                           const ReportContext& ctx);

struct VerifyOptions {
  /// Run the chain checks on every maximal chain (orders <= 96 only).
  bool exhaustive_chains = false;
};

inline constexpr std::size_t exhaustive_chain_order_limit = 96;

/// Every check for one character, in a fixed order: lemma-basico1,
/// lemma-basicon, theorem-C, lemma-center, lemma-maximal, theorem-B,
/// supersolvable-bound, plusone-steps, lemma-uinthemiddle, chain-definition,
/// eta-parity.
std::vector<VerificationReport> verify_character(Workspace& ws, std::size_t row, const VerifyOptions& opts = {});

} // namespace charprod
