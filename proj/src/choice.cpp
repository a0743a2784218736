#include "gsv/choice.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gsv {

long long factorial(int n) {
  if (n < 0 || n > 20)  // 21! overflows long long
    throw std::invalid_argument("factorial: argument outside [0, 20]");
  long long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

LinearOrder::LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
  const int n = static_cast<int>(ranking_.size());
  position_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    const int a = ranking_[k];
    if (a < 0 || a >= n || position_[a] != -1)
      throw std::invalid_argument("LinearOrder: ranking is not a permutation");
    position_[a] = k;
  }
}

bool LinearOrder::prefers(Alternative a, Alternative b) const {
  if (a == b) throw std::invalid_argument("prefers: a == b");
  return position_[a] < position_[b];
}

bool LinearOrder::is_improvement_for(const LinearOrder& other, Alternative a) const {
  for (int b = 0; b < size(); ++b) {
    if (b == a) continue;
    if (prefers(a, b) && !other.prefers(a, b)) return false;
  }
  return true;
}

LinearOrder LinearOrder::push_to_top(Alternative a) const {
  std::vector<int> r;
  r.reserve(ranking_.size());
  r.push_back(a);
  for (int b : ranking_)
    if (b != a) r.push_back(b);
  return LinearOrder(std::move(r));
}

long long rank_of_order(const LinearOrder& o) {
  const int n = o.size();
  const auto& r = o.ranking();
  long long rank = 0;
  for (int k = 0; k < n; ++k) {
    int smaller = 0;
    for (int m = k + 1; m < n; ++m)
      if (r[m] < r[k]) ++smaller;
    rank += smaller * factorial(n - 1 - k);
  }
  return rank;
}

LinearOrder order_of_rank(long long r, int n) {
  if (r < 0 || r >= factorial(n)) throw std::out_of_range("order_of_rank: rank out of range");
  std::vector<int> pool(n);
  for (int k = 0; k < n; ++k) pool[k] = k;
  std::vector<int> ranking;
  ranking.reserve(n);
  for (int k = n - 1; k >= 0; --k) {
    const long long f = factorial(k);
    const int idx = static_cast<int>(r / f);
    r %= f;
    ranking.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return LinearOrder(std::move(ranking));
}

long long profile_count(int n, int N) {
  const long long f = factorial(n);
  long long c = 1;
  for (int l = 0; l < N; ++l) {
    if (c > std::numeric_limits<long long>::max() / f)
      throw std::invalid_argument("profile_count: (n!)^N exceeds the representable range");
    c *= f;
  }
  return c;
}

long long rank_of_profile(const Profile& p) {
  const int n = p.orders.front().size();
  long long rank = 0;
  for (const auto& o : p.orders) rank = rank * factorial(n) + rank_of_order(o);
  return rank;
}

Profile profile_of_rank(long long r, int n, int N) {
  if (r < 0 || r >= profile_count(n, N))
    throw std::out_of_range("profile_of_rank: rank out of range");
  const long long f = factorial(n);
  std::vector<LinearOrder> orders(N);
  for (int l = N - 1; l >= 0; --l) {
    orders[l] = order_of_rank(r % f, n);
    r /= f;
  }
  return Profile{std::move(orders)};
}

SocialChoiceFunction SocialChoiceFunction::dictatorship(int n, int N, int voter) {
  if (voter < 0 || voter >= N) throw std::invalid_argument("dictatorship: bad voter");
  SocialChoiceFunction f(n, N, ScfKind::kDictatorship);
  f.param_ = voter;
  return f;
}

SocialChoiceFunction SocialChoiceFunction::constant(int n, int N, Alternative a) {
  if (a < 0 || a >= n) throw std::invalid_argument("constant: bad alternative");
  SocialChoiceFunction f(n, N, ScfKind::kConstant);
  f.param_ = a;
  return f;
}

SocialChoiceFunction SocialChoiceFunction::plurality_lex(int n, int N) {
  return SocialChoiceFunction(n, N, ScfKind::kPluralityLex);
}

SocialChoiceFunction SocialChoiceFunction::borda_lex(int n, int N) {
  return SocialChoiceFunction(n, N, ScfKind::kBordaLex);
}

SocialChoiceFunction SocialChoiceFunction::from_table(int n, int N, std::vector<int> table) {
  if (static_cast<long long>(table.size()) != profile_count(n, N))
    throw std::invalid_argument("from_table: table length must be (n!)^N");
  for (int a : table)
    if (a < 0 || a >= n) throw std::invalid_argument("from_table: entry out of range");
  SocialChoiceFunction f(n, N, ScfKind::kTable);
  f.table_ = std::move(table);
  return f;
}

SocialChoiceFunction SocialChoiceFunction::random_table(int n, int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> table(profile_count(n, N));
  for (auto& e : table) e = pick(rng);
  return from_table(n, N, std::move(table));
}

std::string SocialChoiceFunction::name() const {
  switch (kind_) {
    case ScfKind::kTable: return "table";
    case ScfKind::kDictatorship: return "dictatorship:" + std::to_string(param_);
    case ScfKind::kConstant: return "constant:" + std::to_string(param_);
    case ScfKind::kPluralityLex: return "plurality_lex";
    case ScfKind::kBordaLex: return "borda_lex";
  }
  return "?";
}

Alternative SocialChoiceFunction::choose(const Profile& p) const {
  switch (kind_) {
    case ScfKind::kTable:
      return table_[rank_of_profile(p)];
    case ScfKind::kDictatorship:
      return p.orders[param_].top();
    case ScfKind::kConstant:
      return param_;
    case ScfKind::kPluralityLex: {
      std::vector<int> count(n_, 0);
      for (const auto& o : p.orders) ++count[o.top()];
      return static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    }
    case ScfKind::kBordaLex: {
      std::vector<long long> score(n_, 0);
      for (const auto& o : p.orders)
        for (int k = 0; k < n_; ++k) score[o.ranking()[k]] += n_ - 1 - k;
      return static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
    }
  }
  throw std::logic_error("unreachable");
}

Alternative SocialChoiceFunction::choose_rank(long long profile_rank) const {
  if (kind_ == ScfKind::kTable) return table_[profile_rank];
  return choose(profile_of_rank(profile_rank, n_, N_));
}

SocialChoiceFunction scf_from_rule_name(const std::string& rule, int n, int N) {
  const auto colon = rule.find(':');
  const std::string head = rule.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : rule.substr(colon + 1);
  if (head == "dictatorship") return SocialChoiceFunction::dictatorship(n, N, std::stoi(arg));
  if (head == "constant") return SocialChoiceFunction::constant(n, N, std::stoi(arg));
  if (head == "plurality_lex") return SocialChoiceFunction::plurality_lex(n, N);
  if (head == "borda_lex") return SocialChoiceFunction::borda_lex(n, N);
  throw std::invalid_argument("unknown rule: " + rule);
}

SocialChoiceFunction load_scf_table_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  const int n = doc.at("n").get<int>();
  const int N = doc.at("N").get<int>();
  if (n < 1 || N < 1) throw std::runtime_error("scf table: bad n/N");
  const long long total = profile_count(n, N);
  std::vector<int> table(total, -1);
  long long seen = 0;
  for (const auto& e : doc.at("entries")) {
    std::vector<LinearOrder> orders;
    for (const auto& r : e.at("profile")) orders.emplace_back(r.get<std::vector<int>>());
    if (static_cast<int>(orders.size()) != N) throw std::runtime_error("scf table: wrong voter count");
    for (const auto& o : orders)
      if (o.size() != n) throw std::runtime_error("scf table: wrong order length");
    const long long rank = rank_of_profile(Profile{std::move(orders)});
    const int choice = e.at("choice").get<int>();
    if (choice < 0 || choice >= n) throw std::runtime_error("scf table: choice out of range");
    if (table[rank] != -1) throw std::runtime_error("scf table: duplicate profile");
    table[rank] = choice;
    ++seen;
  }
  if (seen != total) throw std::runtime_error("scf table: not total (expected (n!)^N entries)");
  return SocialChoiceFunction::from_table(n, N, std::move(table));
}

std::string scf_table_to_json(const SocialChoiceFunction& f) {
  nlohmann::json doc;
  doc["n"] = f.n();
  doc["N"] = f.voters();
  auto& entries = doc["entries"] = nlohmann::json::array();
  for (long long r = 0; r < profile_count(f.n(), f.voters()); ++r) {
    const Profile p = profile_of_rank(r, f.n(), f.voters());
    nlohmann::json e;
    for (const auto& o : p.orders) e["profile"].push_back(o.ranking());
    e["choice"] = f.choose_rank(r);
    entries.push_back(std::move(e));
  }
  return doc.dump();
}

std::optional<MonotonicityCounterexample> check_monotonic(const SocialChoiceFunction& f) {
  const int n = f.n(), N = f.voters();
  const long long total = profile_count(n, N);
  std::vector<Profile> profiles;
  profiles.reserve(total);
  for (long long r = 0; r < total; ++r) profiles.push_back(profile_of_rank(r, n, N));
  for (long long r = 0; r < total; ++r) {
    const Alternative a = f.choose_rank(r);
    for (long long r2 = 0; r2 < total; ++r2) {
      bool improves = true;
      for (int l = 0; l < N && improves; ++l)
        improves = profiles[r].orders[l].is_improvement_for(profiles[r2].orders[l], a);
      if (improves && f.choose_rank(r2) != a)
        return MonotonicityCounterexample{profiles[r], profiles[r2]};
    }
  }
  return std::nullopt;
}

std::optional<Profile> check_unanimous(const SocialChoiceFunction& f) {
  const int n = f.n(), N = f.voters();
  for (long long r = 0; r < profile_count(n, N); ++r) {
    const Profile p = profile_of_rank(r, n, N);
    const Alternative t = p.orders.front().top();
    bool all_top = true;
    for (const auto& o : p.orders) all_top = all_top && o.top() == t;
    if (all_top && f.choose_rank(r) != t) return p;
  }
  return std::nullopt;
}

std::optional<ManipulationWitness> check_strategy_proof(const SocialChoiceFunction& f) {
  const int n = f.n(), N = f.voters();
  const long long nf = factorial(n);
  for (long long r = 0; r < profile_count(n, N); ++r) {
    const Profile p = profile_of_rank(r, n, N);
    const Alternative honest = f.choose_rank(r);
    for (int l = 0; l < N; ++l) {
      for (long long m = 0; m < nf; ++m) {
        Profile q = p;
        q.orders[l] = order_of_rank(m, n);
        const Alternative lied = f.choose(q);
        if (lied != honest && p.orders[l].prefers(lied, honest))
          return ManipulationWitness{p, l, q.orders[l]};
      }
    }
  }
  return std::nullopt;
}

bool check_surjective(const SocialChoiceFunction& f) {
  std::vector<char> hit(f.n(), 0);
  int distinct = 0;
  for (long long r = 0; r < profile_count(f.n(), f.voters()); ++r) {
    const int a = f.choose_rank(r);
    if (!hit[a]) {
      hit[a] = 1;
      if (++distinct == f.n()) return true;
    }
  }
  return false;
}

std::optional<int> dictator_of(const SocialChoiceFunction& f) {
  const int n = f.n(), N = f.voters();
  for (int l = 0; l < N; ++l) {
    bool ok = true;
    for (long long r = 0; r < profile_count(n, N) && ok; ++r)
      ok = f.choose_rank(r) == profile_of_rank(r, n, N).orders[l].top();
    if (ok) return l;
  }
  return std::nullopt;
}

bool check_axiom_equivalence(const SocialChoiceFunction& f) {
  const bool lhs = !check_monotonic(f).has_value() && !check_unanimous(f).has_value();
  const bool rhs = check_surjective(f) && !check_strategy_proof(f).has_value();
  return lhs == rhs;
}

}  // namespace gsv
