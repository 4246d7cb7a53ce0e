#pragma once

// Recursive enumeration of the saturated Borel-fixed ideals with a given
// Hilbert polynomial: start from the hyperplane-section root in few
// variables, then repeatedly adjoin the next smaller variable and remove
// minimal monomials until every level's complement count matches the
// successive differences of the polynomial. A DegLex threshold keeps
// removal sequences strictly increasing so no Borel set is produced twice.

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/ideal.hpp"
#include "borel/monomial.hpp"

namespace borel {

struct EnumerationProblem {
  int n = 1;
  HilbertPolynomial p;
  int r = 0;                              // Gotzmann number of p
  std::vector<HilbertPolynomial> deltas;  // delta^0 .. delta^(deg p + 1)
  std::vector<std::int64_t> delta_at_r;   // each evaluated at r

  // Validation order matters for callers mapping errors to exit codes:
  // the degree bound is checked before admissibility.
  static EnumerationProblem create(int n, const HilbertPolynomial& p,
                                   int term_cap = kDefaultTermCap) {
    if (n < 1) throw Error("ambient projective space needs n >= 1");
    if (p.degree() >= n)
      throw DegreeTooLarge("polynomial degree must be below n");
    EnumerationProblem prob;
    prob.n = n;
    prob.p = p;
    prob.r = decompose(p, term_cap).gotzmann_number();
    const int levels = std::max(p.degree(), 0) + 1;
    HilbertPolynomial q = p;
    for (int k = 0; k <= levels; ++k) {
      prob.deltas.push_back(q);
      const Rational v = q.evaluate(prob.r);
      if (v.denominator() != 1)
        throw Error("internal: difference polynomial non-integral at r");
      if (v.numerator() > Int(1) << 62 || v.numerator() < -(Int(1) << 62))
        throw CapExceeded("polynomial value at the Gotzmann number "
                          "overflows the counter range");
      prob.delta_at_r.push_back(
          static_cast<std::int64_t>(v.numerator().convert_to<long long>()));
      q = delta(q);
    }
    return prob;
  }
};

// Removal budget diagnostic: how many removals level k can admit.
inline std::int64_t removal_bound(const EnumerationProblem& prob, int k) {
  const HilbertPolynomial dk = k < static_cast<int>(prob.deltas.size())
                                   ? prob.deltas[k]
                                   : delta_power(prob.p, k);
  return prob.r - gotzmann_number(dk);
}

// Recursion tree for DOT export. Nodes are the saturated ideals handed to
// each level, keyed by (level, label) so repeated labels across levels stay
// distinct; output is sorted, insertion order does not matter.
class TreeTrace {
 public:
  int add_node(int level, const std::string& label) {
    const auto key = std::make_pair(level, label);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    index_.emplace(key, id);
    nodes_.push_back(key);
    return id;
  }

  void add_edge(int parent, int child) { edges_.emplace_back(parent, child); }

  void write_dot(std::ostream& os) const {
    std::vector<int> order(nodes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (nodes_[a].first != nodes_[b].first)
        return nodes_[a].first > nodes_[b].first;  // root level first
      return nodes_[a].second < nodes_[b].second;
    });
    std::vector<int> rank(nodes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    os << "digraph borel_tree {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& node = nodes_[order[i]];
      os << "  n" << i << " [label=\"" << node.second << "\"];\n";
    }
    auto edges = edges_;
    for (auto& e : edges) e = {rank[e.first], rank[e.second]};
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges)
      os << "  n" << e.first << " -> n" << e.second << ";\n";
    os << "}\n";
  }

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<std::pair<int, std::string>>& nodes() const {
    return nodes_;
  }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  std::vector<std::pair<int, std::string>> nodes_;
  std::map<std::pair<int, std::string>, int> index_;
  std::vector<std::pair<int, int>> edges_;
};

// Observed removal counts per level transition, for diagnostics and the
// removal_bound comparison.
struct EnumerationStats {
  std::vector<std::vector<std::int64_t>> q_by_level;
};

struct EnumerateOptions {
  int jobs = 1;
  TreeTrace* trace = nullptr;
  EnumerationStats* stats = nullptr;
};

namespace detail {

// Shared removal walk: invoke fn on every Borel set reachable by exactly q
// removals of x_low-divisible minimal elements in strictly increasing
// DegLex order.
template <typename Fn>
void walk_removals(const BorelSet& b, std::int64_t q,
                   const Monomial& threshold, Fn&& fn) {
  if (q == 0) {
    fn(b);
    return;
  }
  for (const auto& m : b.removable_minimals()) {
    if (!deglex_greater(m, threshold)) continue;
    walk_removals(b.remove(m), q - 1, m, fn);
  }
}

}  // namespace detail

inline std::vector<BorelSet> remove_q(const BorelSet& b, std::int64_t q,
                                      const Monomial& threshold) {
  if (q < 0) throw Error("negative removal count");
  std::vector<BorelSet> out;
  detail::walk_removals(b, q, threshold,
                        [&](const BorelSet& s) { out.push_back(s); });
  return out;
}

namespace detail {

class Engine {
 public:
  Engine(const EnumerationProblem& prob, const EnumerateOptions& opts)
      : prob_(prob), opts_(opts) {
    if (opts_.stats)
      opts_.stats->q_by_level.assign(prob_.deltas.size() + 1, {});
  }

  std::vector<IdealOutput> take_results() {
    std::sort(results_.begin(), results_.end(), ideal_less);
    return std::move(results_);
  }

  int trace_root(int level, const BorelSet& b) {
    if (!opts_.trace) return -1;
    std::lock_guard lock(mu_);
    return opts_.trace->add_node(level, IdealOutput{b.generators()}.to_string());
  }

  void run_level(int k, const BorelSet& b, int parent_node) {
    if (k == 0) {
      emit(b);
      return;
    }
    const BorelSet embedded = b.embed();
    const std::int64_t q =
        prob_.delta_at_r[k - 1] - embedded.complement_total();
    record_q(k, q);
    if (q < 0) return;
    const Monomial sentinel =
        Monomial::unit(embedded.ambient().low, embedded.ambient().high);
    run_remove(k, embedded, q, sentinel, parent_node);
  }

  void run_remove(int k, const BorelSet& b, std::int64_t q,
                  const Monomial& threshold, int parent_node) {
    walk_removals(b, q, threshold, [&](const BorelSet& s) {
      const int child = trace_child(parent_node, k - 1, s);
      run_level(k - 1, s, child);
    });
  }

  // Breadth-first expansion of the recursion into independent work items,
  // then fan out. Every path below a work item is disjoint from every
  // other, so workers only share the result collector.
  void run_parallel(int k, const BorelSet& b, int root_node, int jobs) {
    struct WorkItem {
      int k;
      BorelSet set;
      std::int64_t q;
      Monomial threshold;
      int parent_node;
      bool at_level;
    };
    std::deque<WorkItem> queue;
    queue.push_back({k, b, 0, Monomial(), root_node, true});
    const std::size_t target = static_cast<std::size_t>(jobs) * 8;
    int steps = 0;
    while (!queue.empty() && queue.size() < target && steps < 4096) {
      ++steps;
      WorkItem it = std::move(queue.front());
      queue.pop_front();
      if (it.at_level) {
        if (it.k == 0) {
          emit(it.set);
          continue;
        }
        BorelSet embedded = it.set.embed();
        const std::int64_t q =
            prob_.delta_at_r[it.k - 1] - embedded.complement_total();
        record_q(it.k, q);
        if (q < 0) continue;
        const Monomial sentinel =
            Monomial::unit(embedded.ambient().low, embedded.ambient().high);
        queue.push_back({it.k, std::move(embedded), q, sentinel,
                         it.parent_node, false});
      } else if (it.q == 0) {
        const int child = trace_child(it.parent_node, it.k - 1, it.set);
        queue.push_back({it.k - 1, std::move(it.set), 0, Monomial(), child,
                         true});
      } else {
        for (const auto& m : it.set.removable_minimals()) {
          if (!deglex_greater(m, it.threshold)) continue;
          queue.push_back({it.k, it.set.remove(m), it.q - 1, m,
                           it.parent_node, false});
        }
      }
    }
    std::vector<WorkItem> items(std::make_move_iterator(queue.begin()),
                                std::make_move_iterator(queue.end()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        const WorkItem& it = items[i];
        if (it.at_level)
          run_level(it.k, it.set, it.parent_node);
        else
          run_remove(it.k, it.set, it.q, it.threshold, it.parent_node);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

 private:
  void emit(const BorelSet& b) {
    std::lock_guard lock(mu_);
    results_.push_back(IdealOutput{b.generators()});
  }

  void record_q(int k, std::int64_t q) {
    if (!opts_.stats) return;
    std::lock_guard lock(mu_);
    opts_.stats->q_by_level[k].push_back(q);
  }

  int trace_child(int parent_node, int level, const BorelSet& b) {
    if (!opts_.trace) return -1;
    std::lock_guard lock(mu_);
    const int child = opts_.trace->add_node(
        level, IdealOutput{b.generators()}.to_string());
    if (parent_node >= 0) opts_.trace->add_edge(parent_node, child);
    return child;
  }

  const EnumerationProblem& prob_;
  const EnumerateOptions& opts_;
  std::mutex mu_;
  std::vector<IdealOutput> results_;
};

}  // namespace detail

// Contribution of one Borel set at level k (ambient x_k..x_n), canonically
// sorted.
inline std::vector<IdealOutput> borel_ideals(const EnumerationProblem& prob,
                                             int k, const BorelSet& b,
                                             const EnumerateOptions& opts = {}) {
  detail::Engine engine(prob, opts);
  const int root = engine.trace_root(k, b);
  if (opts.jobs > 1)
    engine.run_parallel(k, b, root, opts.jobs);
  else
    engine.run_level(k, b, root);
  return engine.take_results();
}

// All saturated Borel-fixed ideals of K[x_0..x_n] with Hilbert polynomial
// p, canonically sorted. Root: a principal power of x_n in two variables
// when deg p = n-1, otherwise the full poset over x_{deg p + 1}..x_n.
inline std::vector<IdealOutput> borel_fixed_ideals_generator(
    const EnumerationProblem& prob, const EnumerateOptions& opts = {}) {
  if (prob.p.is_zero()) {
    if (opts.trace) opts.trace->add_node(0, "(1)");
    return {IdealOutput{{Monomial::unit(0, prob.n)}}};
  }
  const int d = prob.p.degree();
  BorelSet root = d == prob.n - 1
                      ? BorelSet::principal_power(
                            Ambient(prob.n - 1, prob.n, prob.r),
                            static_cast<int>(prob.delta_at_r[d]))
                      : BorelSet::full_poset(
                            Ambient(d + 1, prob.n, prob.r));
  const int k0 = d == prob.n - 1 ? d : d + 1;
  return borel_ideals(prob, k0, root, opts);
}

inline std::vector<IdealOutput> borel_fixed_ideals_generator(
    int n, const HilbertPolynomial& p, const EnumerateOptions& opts = {}) {
  return borel_fixed_ideals_generator(EnumerationProblem::create(n, p), opts);
}

}  // namespace borel
