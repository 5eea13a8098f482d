#include "twr/ndl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twr {

size_t NDLProgram::size() const {
  size_t n = 0;
  for (const auto& c : clauses) n += 1 + c.body.size();
  return n;
}

std::vector<std::string> NDLProgram::intensional() const {
  std::set<std::string> s;
  for (const auto& c : clauses) s.insert(c.head.pred);
  return {s.begin(), s.end()};
}

std::vector<std::string> NDLProgram::check_and_order() const {
  std::set<std::string> intens;
  for (const auto& c : clauses) intens.insert(c.head.pred);

  std::map<std::string, std::set<std::string>> deps;  // head -> body intensional preds
  for (const auto& c : clauses) {
    std::set<std::string> bound;
    for (const auto& b : c.body) {
      if (b.is_eq) {
        bound.insert(b.lhs);
        bound.insert(b.rhs);
      } else {
        for (const auto& t : b.atom.args)
          if (t.is_var) bound.insert(t.name);
        if (intens.count(b.atom.pred)) deps[c.head.pred].insert(b.atom.pred);
      }
    }
    deps[c.head.pred];  // ensure node exists
    for (const auto& t : c.head.args)
      if (t.is_var && !bound.count(t.name))
        fail(Err::UnboundVariable,
             "head variable " + t.name + " of " + c.head.pred + " unbound in body");
  }

  // Kahn topological sort over intensional predicates
  std::map<std::string, int> indeg;
  for (const auto& [p, ds] : deps) indeg.emplace(p, 0);
  for (const auto& [p, ds] : deps)
    for (const auto& d : ds) (void)d, (void)p;
  std::map<std::string, std::set<std::string>> rdeps;
  for (const auto& [p, ds] : deps)
    for (const auto& d : ds) {
      rdeps[d].insert(p);
      indeg[p]++;
    }
  std::vector<std::string> ready, order;
  for (const auto& [p, n] : indeg)
    if (n == 0) ready.push_back(p);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end());
    std::string p = ready.front();
    ready.erase(ready.begin());
    order.push_back(p);
    for (const auto& r : rdeps[p])
      if (--indeg[r] == 0) ready.push_back(r);
  }
  if (order.size() != indeg.size())
    fail(Err::RecursionDetected, "recursive predicate dependency");
  return order;
}

}  // namespace twr
