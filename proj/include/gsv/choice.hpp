#ifndef GSV_CHOICE_HPP
#define GSV_CHOICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gsv {

// Alternatives are 0-indexed: a_0, ..., a_{n-1}.
using Alternative = int;

long long factorial(int n);

// A strict total ranking of n alternatives, best to worst.
// `position[a]` is the rank of alternative a (0 = best), kept in sync
// with `ranking` so preference queries are O(1).
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }

  Alternative top() const { return ranking_.front(); }

  // True iff a is ranked strictly above b. Requires a != b.
  bool prefers(Alternative a, Alternative b) const;

  // True iff every alternative that a beats under *this is still beaten
  // under `other` (a's standing weakly improves).
  bool is_improvement_for(const LinearOrder& other, Alternative a) const;

  // a moved to the first position, relative order of the rest unchanged.
  LinearOrder push_to_top(Alternative a) const;

  bool operator==(const LinearOrder& o) const { return ranking_ == o.ranking_; }
  bool operator!=(const LinearOrder& o) const { return !(*this == o); }

 private:
  std::vector<int> ranking_;
  std::vector<int> position_;
};

// Lehmer-code rank of an order among the n! orders, and its inverse.
long long rank_of_order(const LinearOrder& o);
LinearOrder order_of_rank(long long r, int n);

// An N-tuple of linear orders over the same n alternatives.
struct Profile {
  std::vector<LinearOrder> orders;

  int voters() const { return static_cast<int>(orders.size()); }
  bool operator==(const Profile& p) const { return orders == p.orders; }
};

// Base-(n!) positional code, voter 0 most significant.
long long rank_of_profile(const Profile& p);
Profile profile_of_rank(long long r, int n, int N);
long long profile_count(int n, int N);  // (n!)^N

enum class ScfKind { kTable, kDictatorship, kConstant, kPluralityLex, kBordaLex };

// A total map from profiles to alternatives, either a named rule or a
// dense table indexed by profile rank.
class SocialChoiceFunction {
 public:
  static SocialChoiceFunction dictatorship(int n, int N, int voter);
  static SocialChoiceFunction constant(int n, int N, Alternative a);
  static SocialChoiceFunction plurality_lex(int n, int N);
  static SocialChoiceFunction borda_lex(int n, int N);
  static SocialChoiceFunction from_table(int n, int N, std::vector<int> table);
  // Uniform random table from a deterministic seeded generator.
  static SocialChoiceFunction random_table(int n, int N, std::uint64_t seed);

  int n() const { return n_; }
  int voters() const { return N_; }
  ScfKind kind() const { return kind_; }
  std::string name() const;

  Alternative choose(const Profile& p) const;
  Alternative choose_rank(long long profile_rank) const;

 private:
  SocialChoiceFunction(int n, int N, ScfKind kind) : n_(n), N_(N), kind_(kind) {}

  int n_ = 0;
  int N_ = 0;
  ScfKind kind_ = ScfKind::kTable;
  int param_ = 0;              // voter for dictatorship, alternative for constant
  std::vector<int> table_;     // present iff kind == kTable
};

// Parses "dictatorship:1", "constant:0", "plurality_lex", "borda_lex".
SocialChoiceFunction scf_from_rule_name(const std::string& rule, int n, int N);

// JSON table format:
//   {"n":3, "N":2, "entries":[{"profile":[[0,1,2],[2,1,0]], "choice":1}, ...]}
// The loader rejects non-total tables, duplicates, and out-of-range entries.
SocialChoiceFunction load_scf_table_json(const std::string& path);
std::string scf_table_to_json(const SocialChoiceFunction& f);

struct MonotonicityCounterexample {
  Profile before;  // f(before) = a
  Profile after;   // coordinatewise a-improvement with f(after) != a
};

struct ManipulationWitness {
  Profile profile;
  int voter;
  LinearOrder misreport;
};

// Exhaustive checkers. Counterexamples, when present, are lexicographically
// smallest by (profile rank, voter index, misreport rank).
std::optional<MonotonicityCounterexample> check_monotonic(const SocialChoiceFunction& f);
std::optional<Profile> check_unanimous(const SocialChoiceFunction& f);
std::optional<ManipulationWitness> check_strategy_proof(const SocialChoiceFunction& f);
bool check_surjective(const SocialChoiceFunction& f);
std::optional<int> dictator_of(const SocialChoiceFunction& f);

// (monotonic and unanimous) <=> (surjective and strategy-proof).
bool check_axiom_equivalence(const SocialChoiceFunction& f);

}  // namespace gsv

#endif
