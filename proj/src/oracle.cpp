#include "relsem/oracle.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "relsem/semantics.hpp"

namespace relsem {

namespace {

// One interpreter instance per (program, state space). Completed calls are
// memoized; execution is deterministic, so a (procedure, state) pair always
// yields the same outcome, divergence included.
class Interp {
 public:
  Interp(const Program& p, const StateSpacePtr& space) : space_(space) {
    for (std::size_t i = 0; i < p.decls.size(); ++i)
      procs_.emplace(p.decls[i].name, p.decls[i].body.get());
  }

  // nullopt = divergence.
  std::optional<std::size_t> run_proc(const std::string& name, std::size_t s) {
    auto it = procs_.find(name);
    if (it == procs_.end())
      throw SemanticError("call to undeclared procedure '" + name + "'");
    const Key key{it->second, s};
    if (auto m = memo_.find(key); m != memo_.end()) return m->second;
    if (!active_.insert(key).second) {
      // Re-entering an active configuration: the unique run loops forever.
      return std::nullopt;
    }
    auto out = exec(*it->second, s);
    active_.erase(key);
    memo_.emplace(key, out);
    return out;
  }

 private:
  using Key = std::pair<const Stmt*, std::size_t>;

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<const void*>()(k.first) * 1000003u ^ k.second;
    }
  };

  std::optional<std::size_t> exec(const Stmt& st, std::size_t s) {
    const Interpretation none;
    if (std::holds_alternative<Stmt::Skip>(st.node)) return s;
    if (const auto* a = std::get_if<Stmt::Assign>(&st.node)) {
      auto v = eval_aexp(*a->rhs, *space_, s, none);
      if (!v) return std::nullopt;  // domain exit diverges
      auto idx = space_->var_index(a->var);
      if (!idx) throw SemanticError("unbound variable '" + a->var + "'");
      return space_->with_value(s, *idx, *v);
    }
    if (const auto* q = std::get_if<Stmt::Seq>(&st.node)) {
      auto mid = exec(*q->first, s);
      if (!mid) return std::nullopt;
      return exec(*q->second, *mid);
    }
    if (const auto* i = std::get_if<Stmt::If>(&st.node)) {
      return eval_bexp(*i->cond, *space_, s, none) ? exec(*i->then_branch, s)
                                                   : exec(*i->else_branch, s);
    }
    if (const auto* w = std::get_if<Stmt::While>(&st.node)) {
      std::unordered_set<std::size_t> seen;
      std::size_t cur = s;
      while (eval_bexp(*w->cond, *space_, cur, none)) {
        if (!seen.insert(cur).second) return std::nullopt;
        auto next = exec(*w->body, cur);
        if (!next) return std::nullopt;
        cur = *next;
      }
      return cur;
    }
    return run_proc(std::get<Stmt::Call>(st.node).proc, s);
  }

  StateSpacePtr space_;
  std::map<std::string, const Stmt*, std::less<>> procs_;
  std::unordered_set<Key, KeyHash> active_;
  std::unordered_map<Key, std::optional<std::size_t>, KeyHash> memo_;
};

void require_closed(const Program& p) {
  auto [required, provided] = static_interface(p);
  if (!required.empty())
    throw SemanticError("oracle needs a closed program; missing '" +
                        *required.begin() + "'");
}

}  // namespace

RunResult run_operational(const Program& p, std::string_view entry,
                          const State& s) {
  require_closed(p);
  if (!p.find(entry))
    throw SemanticError("entry procedure '" + std::string(entry) +
                        "' is not declared");
  auto space = make_state_space(p.domain);
  Interp interp(p, space);
  auto out = interp.run_proc(std::string(entry), space->encode(s));
  if (!out) return RunResult{std::nullopt};
  return RunResult{space->decode(*out)};
}

BitRel oracle_denotation(const Program& p, std::string_view entry,
                         const StateSpacePtr& space) {
  require_closed(p);
  if (!p.find(entry))
    throw SemanticError("entry procedure '" + std::string(entry) +
                        "' is not declared");
  Interp interp(p, space);
  BitRel rel = BitRel::empty(space);
  const std::string name(entry);
  for (std::size_t s = 0; s < space->size(); ++s) {
    auto out = interp.run_proc(name, s);
    if (out) rel.set(s, *out);
  }
  return rel;
}

BitRel oracle_denotation(const Program& p, std::string_view entry) {
  return oracle_denotation(p, entry, make_state_space(p.domain));
}

}  // namespace relsem
