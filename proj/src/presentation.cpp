#include "adjunct/presentation.hpp"

#include <deque>
#include <string>
#include <utility>

#include "adjunct/error.hpp"

namespace adjunct {

namespace {

// Coset table for the morphisms out of one source object. Node 0 is the
// identity; following generator s from node n gives s∘n.
class CosetTable {
 public:
  CosetTable(int root, const std::vector<std::vector<int>>& gens_from,
             const std::vector<int>& gen_pos, const Presentation& p)
      : gens_from_(gens_from), gen_pos_(gen_pos), p_(p) {
    add_node(root);
  }

  std::size_t size() const { return at_.size(); }
  std::size_t live() const { return live_; }
  bool is_live(int n) const { return parent_[n] == n; }
  int at(int n) const { return at_[n]; }

  int find(int n) {
    while (parent_[n] != n) {
      auto& pn = parent_[n];
      pn = parent_[pn];
      n = pn;
    }
    return n;
  }

  int edge(int n, int s) {
    const int target = next_[n][gen_pos_[s]];
    return target < 0 ? -1 : find(target);
  }

  int define(int n, int s) {
    const int fresh = add_node(p_.generators[s].dst);
    next_[n][gen_pos_[s]] = fresh;
    return fresh;
  }

  int trace_defining(int n, const std::vector<int>& path) {
    int cur = find(n);
    for (int s : path) {
      int nxt = edge(cur, s);
      if (nxt < 0) nxt = define(cur, s);
      cur = nxt;
    }
    return cur;
  }

  void coincidence(int a, int b) {
    std::deque<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      // y dies and x inherits its edges
      parent_[y] = x;
      --live_;
      auto& nx = next_[x];
      const auto& ny = next_[y];
      for (std::size_t k = 0; k < ny.size(); ++k) {
        if (ny[k] < 0) continue;
        if (nx[k] < 0) {
          nx[k] = ny[k];
        } else {
          queue.emplace_back(nx[k], ny[k]);
        }
      }
    }
  }

 private:
  int add_node(int object) {
    const int id = static_cast<int>(at_.size());
    at_.push_back(object);
    parent_.push_back(id);
    next_.emplace_back(gens_from_[object].size(), -1);
    ++live_;
    return id;
  }

  const std::vector<std::vector<int>>& gens_from_;
  const std::vector<int>& gen_pos_;
  const Presentation& p_;
  std::vector<int> at_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> next_;
  std::size_t live_ = 0;
};

}  // namespace

PresentedCategory PresentedCategory::close(const Presentation& p, std::size_t cap) {
  PresentedCategory out;
  const auto n = p.object_count;
  out.gens_from_.assign(n, {});
  out.gen_pos_.assign(p.generators.size(), 0);
  for (std::size_t s = 0; s < p.generators.size(); ++s) {
    const auto& g = p.generators[s];
    if (g.src < 0 || g.dst < 0 || g.src >= p.object_count || g.dst >= p.object_count) {
      throw Error(ErrorCode::MalformedInput, "generator " + std::to_string(s) + " has an unknown endpoint");
    }
    out.gen_pos_[s] = static_cast<int>(out.gens_from_[g.src].size());
    out.gens_from_[g.src].push_back(static_cast<int>(s));
  }
  std::vector<std::vector<const Presentation::Relation*>> relations_at(n);
  for (const auto& r : p.relations) {
    relations_at[r.src].push_back(&r);
  }

  const std::size_t hard_cap = cap * 64 + 1024;
  std::size_t live_total = 0;
  for (int x = 0; x < n; ++x) {
    CosetTable table(x, out.gens_from_, out.gen_pos_, p);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const int node = static_cast<int>(i);
      if (!table.is_live(node)) continue;
      for (const auto* r : relations_at[table.at(node)]) {
        const int a = table.trace_defining(node, r->lhs);
        const int b = table.trace_defining(node, r->rhs);
        table.coincidence(a, b);
        if (!table.is_live(node)) break;
      }
      if (table.is_live(node)) {
        for (int s : out.gens_from_[table.at(node)]) {
          if (table.edge(node, s) < 0) table.define(node, s);
        }
      }
      if (live_total + table.live() > cap || table.size() > hard_cap) {
        throw Error(ErrorCode::ClosureBoundExceeded,
                    "closure from object " + std::to_string(x) + " exceeds " + std::to_string(cap) +
                        " morphisms");
      }
    }

    // Compact: breadth-first numbering from the root over live nodes.
    std::vector<int> order;
    std::vector<int> number(table.size(), -1);
    std::vector<std::vector<int>> paths;
    order.push_back(0);
    number[0] = 0;
    paths.emplace_back();
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int nd = order[k];
      for (int s : out.gens_from_[table.at(nd)]) {
        const int t = table.edge(nd, s);
        if (number[t] < 0) {
          number[t] = static_cast<int>(order.size());
          order.push_back(t);
          auto path = paths[k];
          path.push_back(s);
          paths.push_back(std::move(path));
        }
      }
    }
    std::vector<Node> compact(order.size());
    std::vector<int> elem_of_node(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int nd = order[k];
      compact[k].at = table.at(nd);
      for (int s : out.gens_from_[table.at(nd)]) {
        compact[k].next.push_back(number[table.edge(nd, s)]);
      }
      elem_of_node[k] = static_cast<int>(out.elements_.size());
      out.element_node_.push_back(static_cast<int>(k));
      out.elements_.push_back(Element{x, table.at(nd), paths[k]});
    }
    live_total += order.size();
    out.identity_.push_back(elem_of_node[0]);
    out.tables_.push_back(std::move(compact));
    out.node_element_.push_back(std::move(elem_of_node));
  }

  out.generator_.resize(p.generators.size());
  for (std::size_t s = 0; s < p.generators.size(); ++s) {
    const auto& g = p.generators[s];
    const auto& root = out.tables_[g.src][0];
    const int node = root.next[out.gen_pos_[s]];
    out.generator_[s] = out.node_element_[g.src][node];
  }
  return out;
}

int PresentedCategory::compose(int g, int f) const {
  const auto& ef = elements_[f];
  const auto& eg = elements_[g];
  if (ef.dst != eg.src) {
    throw Error(ErrorCode::MalformedInput, "composing non-composable presented morphisms");
  }
  const auto& table = tables_[ef.src];
  int node = element_node_[f];
  for (int s : eg.path) {
    node = table[node].next[gen_pos_[s]];
  }
  return node_element_[ef.src][node];
}

}  // namespace adjunct
