#include "catalan/checks.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

// Terms are compiled once into a postfix program and replayed per
// assignment, so the hot loop never touches the shared node tree.
struct Instr {
  enum class Op { PushVar, Add, Mul, Pow } op;
  int arg = 0;
};

void compile_term(const Term& t, const std::vector<char>& vars,
                  std::vector<Instr>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = std::find(vars.begin(), vars.end(), t.variable_name());
      if (it == vars.end())
        throw DomainError(std::string("unbound variable '") +
                          t.variable_name() + "' in term");
      out.push_back({Instr::Op::PushVar, static_cast<int>(it - vars.begin())});
      break;
    }
    case Term::Kind::Sum:
      compile_term(t.left(), vars, out);
      compile_term(t.right(), vars, out);
      out.push_back({Instr::Op::Add, 0});
      break;
    case Term::Kind::Product:
      compile_term(t.left(), vars, out);
      compile_term(t.right(), vars, out);
      out.push_back({Instr::Op::Mul, 0});
      break;
    case Term::Kind::Power:
      compile_term(t.base(), vars, out);
      out.push_back({Instr::Op::Pow, t.exponent()});
      break;
  }
}

std::size_t run_program(const std::vector<Instr>& prog, const FiniteSemiring& s,
                        const std::size_t* env, std::vector<std::size_t>& stack) {
  stack.clear();
  for (const Instr& ins : prog) {
    switch (ins.op) {
      case Instr::Op::PushVar:
        stack.push_back(env[ins.arg]);
        break;
      case Instr::Op::Add: {
        std::size_t b = stack.back();
        stack.pop_back();
        stack.back() = s.add(stack.back(), b);
        break;
      }
      case Instr::Op::Mul: {
        std::size_t b = stack.back();
        stack.pop_back();
        stack.back() = s.mul(stack.back(), b);
        break;
      }
      case Instr::Op::Pow: {
        // left-to-right binary exponentiation; exponents are >= 1, so no
        // multiplicative identity is ever needed
        std::size_t base = stack.back();
        std::size_t acc = base;
        unsigned k = static_cast<unsigned>(ins.arg);
        for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
          acc = s.mul(acc, acc);
          if ((k >> bit) & 1U) acc = s.mul(acc, base);
        }
        stack.back() = acc;
        break;
      }
    }
  }
  return stack.back();
}

// rank -> assignment digits, first variable slowest.
void rank_to_assignment(unsigned long long rank, std::size_t m,
                        std::vector<std::size_t>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::size_t>(rank % m);
    rank /= m;
  }
}

struct SliceResult {
  unsigned long long examined = 0;
  unsigned long long witness_rank = ~0ULL;
  std::vector<std::size_t> witness_env;
  std::size_t lhs = 0, rhs = 0;
};

void scan_slice(const FiniteSemiring& s, const std::vector<Instr>& lhs_prog,
                const std::vector<Instr>& rhs_prog, std::size_t k,
                unsigned long long begin, unsigned long long end,
                const std::atomic<unsigned long long>& best_rank,
                SliceResult& result) {
  const std::size_t m = s.size();
  std::vector<std::size_t> env(k);
  rank_to_assignment(begin, m, env);
  std::vector<std::size_t> stack;
  stack.reserve(16);
  for (unsigned long long rank = begin; rank < end; ++rank) {
    if ((rank & 0xFFF) == 0 &&
        best_rank.load(std::memory_order_relaxed) < begin)
      return;  // an earlier slice already holds the first witness
    ++result.examined;
    std::size_t lv = run_program(lhs_prog, s, env.data(), stack);
    std::size_t rv = run_program(rhs_prog, s, env.data(), stack);
    if (lv != rv) {
      result.witness_rank = rank;
      result.witness_env = env;
      result.lhs = lv;
      result.rhs = rv;
      return;
    }
    // advance the odometer, last variable fastest
    for (std::size_t i = k; i-- > 0;) {
      if (++env[i] < m) break;
      env[i] = 0;
    }
  }
}

}  // namespace

std::size_t eval_term(const FiniteSemiring& s, const Term& term,
                      const std::map<char, std::size_t>& assignment) {
  std::vector<char> vars;
  std::vector<std::size_t> env;
  for (const auto& [name, value] : assignment) {
    if (value >= s.size())
      throw DomainError("assignment value out of range for '" + s.name() + "'");
    vars.push_back(name);
    env.push_back(value);
  }
  std::vector<Instr> prog;
  compile_term(term, vars, prog);
  std::vector<std::size_t> stack;
  return run_program(prog, s, env.data(), stack);
}

CheckReport check_identity(const FiniteSemiring& s, const Identity& id,
                           const CheckOptions& options) {
  const std::vector<char> vars = id.variables();
  const std::size_t k = vars.size();
  const std::size_t m = s.size();

  unsigned long long total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > ~0ULL / m) {
      total = ~0ULL;  // saturate; any budget is exceeded anyway
      break;
    }
    total *= m;
  }
  if (total > options.budget)
    throw ResourceLimitError(
        "identity check over '" + s.name() + "' needs " +
        (total == ~0ULL ? std::string("more than 10^18")
                        : std::to_string(total)) +
        " assignments, above the budget of " + std::to_string(options.budget) +
        "; raise the budget to run it");

  std::vector<Instr> lhs_prog, rhs_prog;
  compile_term(id.lhs, vars, lhs_prog);
  compile_term(id.rhs, vars, rhs_prog);

  int jobs = std::max(1, options.jobs);
  unsigned int hw = std::thread::hardware_concurrency();
  if (hw != 0) jobs = std::min<int>(jobs, static_cast<int>(hw));
  if (static_cast<unsigned long long>(jobs) > total)
    jobs = static_cast<int>(std::max<unsigned long long>(total, 1ULL));

  std::vector<SliceResult> results(static_cast<std::size_t>(jobs));
  std::atomic<unsigned long long> best_rank{~0ULL};

  if (jobs == 1) {
    scan_slice(s, lhs_prog, rhs_prog, k, 0, total, best_rank, results[0]);
  } else {
    std::vector<std::thread> threads;
    const unsigned long long chunk = total / jobs;
    for (int t = 0; t < jobs; ++t) {
      unsigned long long begin = chunk * t;
      unsigned long long end = (t == jobs - 1) ? total : chunk * (t + 1);
      threads.emplace_back([&, t, begin, end] {
        scan_slice(s, lhs_prog, rhs_prog, k, begin, end, best_rank,
                   results[static_cast<std::size_t>(t)]);
        if (results[static_cast<std::size_t>(t)].witness_rank != ~0ULL) {
          unsigned long long mine =
              results[static_cast<std::size_t>(t)].witness_rank;
          unsigned long long cur = best_rank.load(std::memory_order_relaxed);
          while (mine < cur && !best_rank.compare_exchange_weak(
                                   cur, mine, std::memory_order_relaxed)) {
          }
        }
      });
    }
    for (auto& th : threads) th.join();
  }

  CheckReport report;
  const SliceResult* best = nullptr;
  for (const auto& r : results) {
    report.checked += r.examined;
    if (r.witness_rank != ~0ULL &&
        (best == nullptr || r.witness_rank < best->witness_rank))
      best = &r;
  }
  if (best == nullptr) {
    report.holds = true;
    return report;
  }
  report.holds = false;
  Witness w;
  for (std::size_t i = 0; i < k; ++i)
    w.assignment.emplace_back(vars[i], best->witness_env[i]);
  w.operation = "";
  w.lhs_value = best->lhs;
  w.rhs_value = best->rhs;
  report.witness = std::move(w);
  return report;
}

CheckReport check_homomorphism(const FiniteSemiring& source,
                               const FiniteSemiring& target,
                               const std::vector<std::size_t>& map, Ops ops,
                               const CheckOptions& options) {
  const std::size_t m = source.size();
  if (map.size() != m)
    throw DimensionError("map covers " + std::to_string(map.size()) +
                         " elements but the source has " + std::to_string(m));
  for (std::size_t v : map)
    if (v >= target.size())
      throw DomainError("map value " + std::to_string(v) +
                        " is outside the target carrier");
  if (static_cast<unsigned long long>(m) * m > options.budget)
    throw ResourceLimitError("homomorphism check needs " +
                             std::to_string(static_cast<unsigned long long>(m) * m) +
                             " pairs, above the budget of " +
                             std::to_string(options.budget));

  CheckReport report;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      ++report.checked;
      if (ops.mul) {
        std::size_t lhs = map[source.mul(a, b)];
        std::size_t rhs = target.mul(map[a], map[b]);
        if (lhs != rhs) {
          report.witness = Witness{{{'a', a}, {'b', b}}, "mul", lhs, rhs};
          return report;
        }
      }
      if (ops.add) {
        std::size_t lhs = map[source.add(a, b)];
        std::size_t rhs = target.add(map[a], map[b]);
        if (lhs != rhs) {
          report.witness = Witness{{{'a', a}, {'b', b}}, "add", lhs, rhs};
          return report;
        }
      }
    }
  }
  report.holds = true;
  return report;
}

CheckReport check_injective(const std::vector<std::size_t>& map) {
  CheckReport report;
  std::map<std::size_t, std::size_t> seen;  // value -> first preimage
  for (std::size_t i = 0; i < map.size(); ++i) {
    ++report.checked;
    auto [it, inserted] = seen.emplace(map[i], i);
    if (!inserted) {
      report.witness =
          Witness{{{'a', it->second}, {'b', i}}, "image", map[it->second],
                  map[i]};
      return report;
    }
  }
  report.holds = true;
  return report;
}

namespace {

// Cheap isomorphism invariants of one element: idempotency plus row and
// column fixed-point counts and distinct-value counts, per operation.
std::vector<long long> element_profile(const FiniteSemiring& s, std::size_t x,
                                       Ops ops) {
  std::vector<long long> profile;
  auto describe = [&](auto op) {
    long long idem = op(x, x) == x ? 1 : 0;
    long long row_fix = 0, col_fix = 0;
    std::vector<char> row_seen(s.size(), 0), col_seen(s.size(), 0);
    long long row_distinct = 0, col_distinct = 0;
    for (std::size_t y = 0; y < s.size(); ++y) {
      std::size_t r = op(x, y);
      std::size_t c = op(y, x);
      if (r == x) ++row_fix;
      if (c == x) ++col_fix;
      if (!row_seen[r]) { row_seen[r] = 1; ++row_distinct; }
      if (!col_seen[c]) { col_seen[c] = 1; ++col_distinct; }
    }
    profile.insert(profile.end(), {idem, row_fix, col_fix, row_distinct,
                                   col_distinct});
  };
  if (ops.add) describe([&](std::size_t a, std::size_t b) { return s.add(a, b); });
  if (ops.mul) describe([&](std::size_t a, std::size_t b) { return s.mul(a, b); });
  return profile;
}

bool full_check(const FiniteSemiring& a, const FiniteSemiring& b,
                const std::vector<std::size_t>& f, Ops ops) {
  const std::size_t m = a.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (ops.add && f[a.add(x, y)] != b.add(f[x], f[y])) return false;
      if (ops.mul && f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_isomorphism_exists(const FiniteSemiring& source,
                                     const FiniteSemiring& target, Ops ops,
                                     const CheckOptions& options) {
  CheckReport report;
  if (source.size() != target.size()) return report;  // holds == false
  const std::size_t m = source.size();
  if (!ops.add && !ops.mul)
    throw DomainError("isomorphism search needs at least one operation");

  std::vector<std::vector<long long>> sp(m), tp(m);
  for (std::size_t i = 0; i < m; ++i) {
    sp[i] = element_profile(source, i, ops);
    tp[i] = element_profile(target, i, ops);
  }
  {
    auto ssort = sp, tsort = tp;
    std::sort(ssort.begin(), ssort.end());
    std::sort(tsort.begin(), tsort.end());
    if (ssort != tsort) return report;  // profiles already distinguish them
  }

  std::vector<std::size_t> f(m, m);     // source -> target, m = unassigned
  std::vector<std::size_t> finv(m, m);  // target -> source
  unsigned long long nodes = 0;

  // Depth-first over source indices in order; candidates in ascending
  // target order, so the bijection found first is deterministic.
  auto compatible = [&](std::size_t x, std::size_t y) {
    auto probe = [&](auto op_s, auto op_t) {
      for (std::size_t x2 = 0; x2 < m; ++x2) {
        if (f[x2] == m) continue;
        for (auto [p, q] : {std::pair{x, x2}, std::pair{x2, x}}) {
          std::size_t r = op_s(p, q);
          std::size_t img =
              op_t(p == x ? y : f[p], q == x ? y : f[q]);
          if (f[r] != m) {
            if (f[r] != img) return false;
          } else if (finv[img] != m) {
            return false;  // image already taken by a different preimage
          }
        }
      }
      return true;
    };
    if (ops.add &&
        !probe([&](std::size_t a, std::size_t b) { return source.add(a, b); },
               [&](std::size_t a, std::size_t b) { return target.add(a, b); }))
      return false;
    if (ops.mul &&
        !probe([&](std::size_t a, std::size_t b) { return source.mul(a, b); },
               [&](std::size_t a, std::size_t b) { return target.mul(a, b); }))
      return false;
    return true;
  };

  std::vector<std::size_t> cursor(m, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == m) {
      if (full_check(source, target, f, ops)) {
        report.holds = true;
        report.checked = nodes;
        report.bijection = f;
        return report;
      }
      // threadbare partial pruning let an impostor through; backtrack
      --depth;
      finv[f[depth]] = m;
      f[depth] = m;
      ++cursor[depth];
    }
    bool advanced = false;
    for (std::size_t y = cursor[depth]; y < m; ++y) {
      if (finv[y] != m || sp[depth] != tp[y]) continue;
      if (++nodes > options.budget)
        throw ResourceLimitError(
            "isomorphism search exceeded the budget of " +
            std::to_string(options.budget) + " nodes");
      if (!compatible(depth, y)) continue;
      f[depth] = y;
      finv[y] = depth;
      cursor[depth] = y;
      ++depth;
      if (depth < m) cursor[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) break;  // search space exhausted
    cursor[depth] = 0;
    --depth;
    finv[f[depth]] = m;
    f[depth] = m;
    ++cursor[depth];
  }
  report.checked = nodes;
  return report;
}

}  // namespace catalan
