#include "catalan/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "catalan/bool_matrix.hpp"
#include "catalan/counting.hpp"
#include "catalan/errors.hpp"
#include "catalan/identities.hpp"
#include "catalan/representations.hpp"
#include "catalan/semiring.hpp"
#include "catalan/transformation.hpp"

namespace catalan {

namespace {

std::string flat_label(const BoolMatrix& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) out.push_back(m.get(i, j) ? '1' : '0');
  return out;
}

CheckResult make(std::string suite, std::string name, bool passed,
                 unsigned long long checked, std::string detail) {
  return CheckResult{std::move(suite), std::move(name), passed, checked,
                     std::move(detail)};
}

std::string witness_text(const Witness& w, const FiniteSemiring& domain,
                         const FiniteSemiring& values) {
  std::string out;
  for (const auto& [var, idx] : w.assignment) {
    out += var;
    out += '=';
    out += domain.label(idx);
    out += ' ';
  }
  if (w.operation == "image") {
    out += "both map to " + values.label(w.lhs_value);
  } else {
    if (!w.operation.empty()) out += "op=" + w.operation + " ";
    out += values.label(w.lhs_value) + " != " + values.label(w.rhs_value);
  }
  return out;
}

// target indices of rep(element) for every element, in enumeration order;
// elements whose image is missing from the target carrier are reported via
// `all_found`.
template <class Rep>
std::vector<std::size_t> image_index_map(
    const std::vector<Transformation>& elems, const FiniteSemiring& target,
    Rep rep, bool& all_found) {
  std::vector<std::size_t> map;
  map.reserve(elems.size());
  all_found = true;
  for (const auto& t : elems) {
    auto idx = target.index_of(flat_label(rep(t)));
    if (!idx) {
      all_found = false;
      map.push_back(0);
    } else {
      map.push_back(*idx);
    }
  }
  return map;
}

void require_range(const std::string& suite, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw DomainError("suite '" + suite + "' accepts n in [" +
                      std::to_string(lo) + ", " + std::to_string(hi) +
                      "], got " + std::to_string(n));
}

std::vector<CheckResult> suite_unary_rep(int n, const CheckOptions& opts) {
  require_range("unary-rep", n, 1, kMaxMatrixTriangular);
  std::vector<CheckResult> out;
  auto source = semiring_from_transformations(n + 1, MonoidClass::Cminus);
  auto target = semiring_from_matrices(n, MatrixShape::Lower);
  auto elems = enumerate_transformations(n + 1, MonoidClass::Cminus);

  out.push_back(make("unary-rep", "carrier-count",
                     source.size() == catalan_number(n + 1), source.size(),
                     std::to_string(source.size()) + " decreasing maps on [" +
                         std::to_string(n + 1) + "]"));

  bool all_found = false;
  auto map = image_index_map(elems, target,
                             [](const Transformation& t) { return unary_matrix(t); },
                             all_found);
  out.push_back(make("unary-rep", "image-in-lower", all_found, elems.size(),
                     "every image is a lower triangular " + std::to_string(n) +
                         "x" + std::to_string(n) + " matrix"));
  if (!all_found) return out;

  auto hom = check_homomorphism(source, target, map, Ops::both(), opts);
  out.push_back(make("unary-rep", "homomorphism-add-mul", hom.holds,
                     hom.checked,
                     hom.holds ? std::to_string(hom.checked) +
                                     " pairs, both operations"
                               : witness_text(*hom.witness, source, target)));
  auto inj = check_injective(map);
  out.push_back(make("unary-rep", "injective", inj.holds, inj.checked,
                     inj.holds ? std::to_string(map.size()) + " distinct images"
                               : witness_text(*inj.witness, source, target)));
  return out;
}

std::vector<CheckResult> suite_conjugate_rep(int n, const CheckOptions& opts) {
  require_range("conjugate-rep", n, 1, kMaxMatrixTriangular);
  std::vector<CheckResult> out;
  auto source = semiring_from_transformations(n + 1, MonoidClass::Cminus);
  auto target = semiring_from_matrices(n, MatrixShape::Upper);
  auto elems = enumerate_transformations(n + 1, MonoidClass::Cminus);

  bool all_found = false;
  auto map = image_index_map(
      elems, target,
      [](const Transformation& t) { return unary_matrix_conjugated(t); },
      all_found);
  out.push_back(make("conjugate-rep", "image-in-upper", all_found, elems.size(),
                     "every conjugated image is upper triangular"));
  if (!all_found) return out;

  auto hom = check_homomorphism(source, target, map, Ops::both(), opts);
  out.push_back(make("conjugate-rep", "homomorphism-add-mul", hom.holds,
                     hom.checked,
                     hom.holds ? std::to_string(hom.checked) +
                                     " pairs, both operations"
                               : witness_text(*hom.witness, source, target)));
  auto inj = check_injective(map);
  out.push_back(make("conjugate-rep", "injective", inj.holds, inj.checked,
                     inj.holds ? std::to_string(map.size()) + " distinct images"
                               : witness_text(*inj.witness, source, target)));
  return out;
}

std::vector<CheckResult> suite_stair_rep(int n, const CheckOptions& opts) {
  require_range("stair-rep", n, 1, 7);
  std::vector<CheckResult> out;
  auto source = semiring_from_transformations(n, MonoidClass::C);
  auto target = semiring_from_matrices(n, MatrixShape::Stair);
  auto elems = enumerate_transformations(n, MonoidClass::C);

  out.push_back(make(
      "stair-rep", "carrier-counts",
      source.size() == catalan_number(n) && target.size() == catalan_number(n),
      source.size() + target.size(),
      std::to_string(source.size()) + " extensive maps, " +
          std::to_string(target.size()) + " stair matrices, expected " +
          std::to_string(catalan_number(n))));

  bool all_found = false;
  auto map = image_index_map(elems, target,
                             [](const Transformation& t) { return stair_matrix(t); },
                             all_found);
  out.push_back(make("stair-rep", "image-in-stair", all_found, elems.size(),
                     "every interval matrix is stair triangular"));
  if (!all_found) return out;

  auto hom = check_homomorphism(source, target, map, Ops::both(), opts);
  out.push_back(make("stair-rep", "homomorphism-add-mul", hom.holds,
                     hom.checked,
                     hom.holds ? std::to_string(hom.checked) +
                                     " pairs, both operations"
                               : witness_text(*hom.witness, source, target)));
  auto inj = check_injective(map);
  out.push_back(make("stair-rep", "injective", inj.holds, inj.checked,
                     inj.holds ? std::to_string(map.size()) + " distinct images"
                               : witness_text(*inj.witness, source, target)));

  auto sorted = map;
  std::sort(sorted.begin(), sorted.end());
  bool onto = sorted.size() == target.size();
  for (std::size_t i = 0; onto && i < sorted.size(); ++i) onto = sorted[i] == i;
  out.push_back(make("stair-rep", "onto-stair-set", onto, map.size(),
                     "the map is a bijection onto the stair matrices"));
  return out;
}

std::vector<CheckResult> suite_action_rep(int n, const CheckOptions& opts) {
  require_range("action-rep", n, 1, kMaxMatrixTriangular);
  std::vector<CheckResult> out;
  auto source = semiring_from_transformations(n, MonoidClass::C);
  auto target = semiring_from_matrices(n, MatrixShape::Upper);
  auto elems = enumerate_transformations(n, MonoidClass::C);

  bool all_found = false;
  auto map = image_index_map(
      elems, target, [](const Transformation& t) { return action_matrix(t); },
      all_found);
  out.push_back(make("action-rep", "image-in-upper", all_found, elems.size(),
                     "one-hot rows of extensive maps are upper triangular"));
  if (!all_found) return out;

  auto mul_hom = check_homomorphism(source, target, map, Ops::mul_only(), opts);
  out.push_back(make("action-rep", "homomorphism-mul", mul_hom.holds,
                     mul_hom.checked,
                     mul_hom.holds
                         ? std::to_string(mul_hom.checked) + " pairs"
                         : witness_text(*mul_hom.witness, source, target)));
  auto inj = check_injective(map);
  out.push_back(make("action-rep", "injective", inj.holds, inj.checked,
                     inj.holds ? std::to_string(map.size()) + " distinct images"
                               : witness_text(*inj.witness, source, target)));

  if (n >= 2) {
    auto add_hom = check_homomorphism(source, target, map, Ops::add_only(), opts);
    out.push_back(make(
        "action-rep", "addition-violated", !add_hom.holds, add_hom.checked,
        add_hom.holds
            ? "expected an additive counterexample, found none"
            : "counterexample " + witness_text(*add_hom.witness, source, target)));
  }
  return out;
}

std::vector<CheckResult> suite_complementarity(int n, const CheckOptions&) {
  require_range("complementarity", n, 1, 8);
  std::vector<CheckResult> out;
  auto elems = enumerate_transformations(n + 1, MonoidClass::C);
  unsigned long long checked = 0;
  std::string mismatch;
  for (const auto& a : elems) {
    ++checked;
    BoolMatrix lhs = complement_pipeline(a);
    BoolMatrix rhs = unary_matrix_conjugated(bar(a));
    if (!(lhs == rhs)) {
      mismatch = format_transformation(a);
      break;
    }
  }
  out.push_back(make("complementarity", "pipeline-equals-conjugated-bar",
                     mismatch.empty(), checked,
                     mismatch.empty()
                         ? "all " + std::to_string(elems.size()) +
                               " extensive maps on [" + std::to_string(n + 1) +
                               "] agree"
                         : "mismatch at " + mismatch));

  bool bar_ok = true;
  for (const auto& a : elems)
    if (!is_in_class(bar(a), MonoidClass::Cminus)) {
      bar_ok = false;
      break;
    }
  out.push_back(make("complementarity", "bar-lands-in-decreasing", bar_ok,
                     elems.size(),
                     "order reversal sends extensive maps to decreasing ones"));
  return out;
}

std::vector<CheckResult> suite_young_count(int n, const CheckOptions&) {
  require_range("young-count", n, 1, kMaxStaircase);
  std::vector<CheckResult> out;
  const std::uint64_t expected = catalan_number(n + 1);
  const std::uint64_t counted = count_staircase_partitions(n);
  out.push_back(make("young-count", "recursive-count", counted == expected,
                     counted,
                     std::to_string(counted) + " partitions in the staircase (" +
                         std::to_string(n) + ",...,1); expected " +
                         std::to_string(expected)));
  if (n > 8) return out;

  auto list = enumerate_staircase_partitions(n);
  bool distinct =
      std::adjacent_find(list.begin(), list.end()) == list.end();
  out.push_back(make("young-count", "enumeration-count",
                     list.size() == expected && distinct, list.size(),
                     std::to_string(list.size()) + " distinct partitions listed"));

  auto maps = enumerate_transformations(n + 1, MonoidClass::Cminus);
  std::vector<Partition> from_reps;
  from_reps.reserve(maps.size());
  for (const auto& a : maps) from_reps.push_back(matrix_to_partition(unary_matrix(a)));
  std::sort(from_reps.begin(), from_reps.end());
  auto sorted = list;
  std::sort(sorted.begin(), sorted.end());
  out.push_back(make("young-count", "bijection-with-decreasing-maps",
                     from_reps == sorted, maps.size(),
                     "partitions read off the matrix images coincide with the "
                     "direct enumeration"));
  return out;
}

std::vector<CheckResult> suite_lattice(int n, const CheckOptions&) {
  require_range("lattice", n, 1, 5);
  std::vector<CheckResult> out;
  auto elems = enumerate_transformations(n, MonoidClass::O);
  const std::size_t m = elems.size();

  out.push_back(make("lattice", "carrier-count",
                     m == order_preserving_count(n), m,
                     std::to_string(m) + " order-preserving maps on [" +
                         std::to_string(n) + "], expected " +
                         std::to_string(order_preserving_count(n))));

  auto locate = [&elems](const Transformation& t) {
    auto it = std::lower_bound(elems.begin(), elems.end(), t);
    return it != elems.end() && *it == t;
  };

  bool closed = true, order_matches = true;
  unsigned long long pair_count = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      ++pair_count;
      if (!locate(add(a, b)) || !locate(meet(a, b))) closed = false;
      if (leq(a, b) != (add(a, b) == b)) order_matches = false;
    }
  }
  out.push_back(make("lattice", "join-meet-closed", closed, pair_count,
                     "pointwise max and min stay order-preserving"));
  out.push_back(make("lattice", "order-agrees-with-addition", order_matches,
                     pair_count, "a <= b exactly when a + b = b"));

  bool lub = true, glb = true, distrib = true;
  unsigned long long triples = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const Transformation j = add(a, b);
      const Transformation w = meet(a, b);
      for (const auto& c : elems) {
        ++triples;
        if (leq(j, c) != (leq(a, c) && leq(b, c))) lub = false;
        if (leq(c, w) != (leq(c, a) && leq(c, b))) glb = false;
        if (!(meet(c, j) == add(meet(c, a), meet(c, b)))) distrib = false;
      }
    }
  }
  out.push_back(make("lattice", "join-is-least-upper-bound", lub, triples,
                     "checked against the pointwise order on all triples"));
  out.push_back(make("lattice", "meet-is-greatest-lower-bound", glb, triples,
                     "checked against the pointwise order on all triples"));
  out.push_back(make("lattice", "distributive", distrib, triples,
                     "meet distributes over join"));

  const Transformation e = Transformation::identity(n);
  std::vector<Transformation> up, down;
  for (const auto& a : elems) {
    if (leq(e, a)) up.push_back(a);
    if (leq(a, e)) down.push_back(a);
  }
  out.push_back(make("lattice", "up-set-is-extensive-class",
                     up == enumerate_transformations(n, MonoidClass::C), m,
                     "maps above the identity are exactly the extensive ones"));
  out.push_back(make("lattice", "down-set-is-decreasing-class",
                     down == enumerate_transformations(n, MonoidClass::Cminus),
                     m,
                     "maps below the identity are exactly the decreasing ones"));

  auto edges = hasse_edges(elems);
  // Reachability along covering edges must reproduce the order itself.
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(m,
                                                std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < m; ++i) reach[i][i / 64] |= 1ULL << (i % 64);
  // Lexicographic order is a linear extension, so a reverse sweep settles
  // every successor before it is consumed.
  std::vector<std::vector<std::size_t>> succ(m);
  for (auto [i, j] : edges) succ[i].push_back(j);
  for (std::size_t i = m; i-- > 0;)
    for (std::size_t j : succ[i])
      for (std::size_t wd = 0; wd < words; ++wd) reach[i][wd] |= reach[j][wd];
  bool covers_generate = true;
  for (std::size_t i = 0; i < m && covers_generate; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      bool reachable = (reach[i][j / 64] >> (j % 64)) & 1ULL;
      if (reachable != leq(elems[i], elems[j])) {
        covers_generate = false;
        break;
      }
    }
  out.push_back(make("lattice", "covering-edges-generate-order",
                     covers_generate, m * m,
                     std::to_string(edges.size()) + " covering pairs"));

  if (n == 3) {
    static const char* kGolden[] = {
        "111-112", "112-113", "112-122", "113-123", "122-123", "122-222",
        "123-133", "123-223", "133-233", "222-223", "223-233", "233-333"};
    std::vector<std::string> expected(std::begin(kGolden), std::end(kGolden));
    std::vector<std::string> got;
    for (auto [i, j] : edges)
      got.push_back(format_transformation(elems[i]) + "-" +
                    format_transformation(elems[j]));
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    out.push_back(make("lattice", "covering-edges-golden", got == expected,
                       got.size(),
                       std::to_string(got.size()) +
                           " edges, expected the known 12-edge diagram"));
  }
  return out;
}

std::vector<CheckResult> suite_closure(int n, const CheckOptions&) {
  require_range("closure", n, 1, 5);
  std::vector<CheckResult> out;

  {
    auto ambient = semiring_from_transformations(n, MonoidClass::O);
    for (MonoidClass cls : {MonoidClass::C, MonoidClass::Cminus}) {
      const char* label = cls == MonoidClass::C ? "extensive" : "decreasing";
      std::vector<std::size_t> subset;
      for (const auto& t : enumerate_transformations(n, cls))
        subset.push_back(*ambient.index_of(format_transformation(t)));
      bool ok = closed_under(ambient, subset, Ops::both());
      if (ok && subset.size() <= FiniteSemiring::kAxiomCheckThreshold)
        ok = subsemiring(ambient, subset).axioms_verified();
      out.push_back(make("closure",
                         std::string(label) + "-closed-in-order-preserving",
                         ok, subset.size() * subset.size(),
                         std::to_string(subset.size()) +
                             " elements closed under both operations"));
    }
  }

  if (n <= kMaxMatrixTriangular) {
    auto ambient = semiring_from_matrices(n, MatrixShape::Upper);
    std::vector<std::size_t> subset;
    for (const auto& mtx : enumerate_matrices(n, MatrixShape::Stair))
      subset.push_back(*ambient.index_of(flat_label(mtx)));
    bool ok = closed_under(ambient, subset, Ops::both());
    out.push_back(make("closure", "stair-closed-in-upper", ok,
                       subset.size() * subset.size(),
                       std::to_string(subset.size()) +
                           " stair matrices inside upper(" +
                           std::to_string(n) + ")"));
  }

  if (n <= kMaxMatrixFull) {
    auto ambient = semiring_from_matrices(n, MatrixShape::Full);
    for (MatrixShape shape : {MatrixShape::Upper, MatrixShape::Lower}) {
      const char* label = shape == MatrixShape::Upper ? "upper" : "lower";
      std::vector<std::size_t> subset;
      for (const auto& mtx : enumerate_matrices(n, shape))
        subset.push_back(*ambient.index_of(flat_label(mtx)));
      bool ok = closed_under(ambient, subset, Ops::both());
      out.push_back(make("closure", std::string(label) + "-closed-in-full", ok,
                         subset.size() * subset.size(),
                         std::to_string(subset.size()) +
                             " triangular matrices inside all of full(" +
                             std::to_string(n) + ")"));
    }
  }

  {
    // Identities pass to closed subsets: every closed subset of upper(2)
    // still satisfies the mixed-power law.
    auto upper2 = semiring_from_matrices(2, MatrixShape::Upper);
    const Identity law = mixed_power_identity(2);
    unsigned long long assignments = 0;
    unsigned closed_count = 0;
    bool inherited = true;
    for (unsigned mask = 1; mask < (1u << upper2.size()); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < upper2.size(); ++i)
        if (mask & (1u << i)) subset.push_back(i);
      if (!closed_under(upper2, subset, Ops::both())) continue;
      ++closed_count;
      auto sub = subsemiring(upper2, subset);
      auto rep = check_identity(sub, law);
      assignments += rep.checked;
      if (!rep.holds) {
        inherited = false;
        break;
      }
    }
    out.push_back(make("closure", "identity-inherited-by-closed-subsets",
                       inherited, assignments,
                       std::to_string(closed_count) +
                           " closed subsets of upper(2), mixed-power law "
                           "holds on each"));
  }
  return out;
}

std::vector<CheckResult> suite_identities(int n, const CheckOptions& opts) {
  require_range("identities", n, 1, 8);
  std::vector<CheckResult> out;

  if (n <= kMaxMatrixTriangular) {
    auto upper = semiring_from_matrices(n, MatrixShape::Upper);
    const Identity law1 = power_stability_identity(n);
    auto rep = check_identity(upper, law1, opts);
    out.push_back(make("identities", "power-stability-holds-in-upper",
                       rep.holds, rep.checked,
                       law1.to_text() + " over " + std::to_string(upper.size()) +
                           " matrices" +
                           (rep.holds ? ""
                                      : "; " + witness_text(*rep.witness, upper,
                                                            upper))));
    if (n >= 2 && n <= 4) {
      const Identity law2 = mixed_power_identity(n);
      auto rep2 = check_identity(upper, law2, opts);
      out.push_back(make("identities", "mixed-power-holds-in-upper", rep2.holds,
                         rep2.checked,
                         law2.to_text() + " over " +
                             std::to_string(rep2.checked) + " assignments" +
                             (rep2.holds ? ""
                                         : "; " + witness_text(*rep2.witness,
                                                               upper, upper))));
    }
  }

  if (n + 2 <= kMaxChainCatalan) {
    const Identity law1 = power_stability_identity(n);
    auto cs = semiring_from_transformations(n + 2, MonoidClass::C);
    auto rep = check_identity(cs, law1, opts);
    const Transformation alpha = power_stability_witness(n);
    const bool displayed_ok =
        power(alpha, static_cast<unsigned>(n)).image_of(1) == n + 1 &&
        power(alpha, static_cast<unsigned>(n) + 1).image_of(1) == n + 2;
    out.push_back(make(
        "identities", "power-stability-fails-one-size-up", !rep.holds && displayed_ok,
        rep.checked,
        rep.holds
            ? "expected a failure in the extensive maps on [" +
                  std::to_string(n + 2) + "], found none"
            : "witness " + witness_text(*rep.witness, cs, cs) +
                  "; displayed witness " + format_transformation(alpha) +
                  " sends 1 to " + std::to_string(n + 1) + " then " +
                  std::to_string(n + 2)));

    auto cms = semiring_from_transformations(n + 2, MonoidClass::Cminus);
    auto repm = check_identity(cms, law1, opts);
    const Transformation dual = bar(alpha);
    const bool dual_ok =
        !(power(dual, static_cast<unsigned>(n)) ==
          power(dual, static_cast<unsigned>(n) + 1));
    out.push_back(make(
        "identities", "power-stability-fails-in-decreasing", !repm.holds && dual_ok,
        repm.checked,
        repm.holds ? "expected a failure in the decreasing maps, found none"
                   : "witness " + witness_text(*repm.witness, cms, cms)));
  }

  if (n >= 2 && n + 1 <= kMaxChainCatalan) {
    const Identity law2 = mixed_power_identity(n);
    auto cs = semiring_from_transformations(n + 1, MonoidClass::C);
    auto rep = check_identity(cs, law2, opts);
    auto [beta, gamma] = mixed_power_witnesses(n);
    bool displayed_ok = false;
    std::string displayed;
    {
      auto bi = cs.index_of(format_transformation(beta));
      auto gi = cs.index_of(format_transformation(gamma));
      if (bi && gi) {
        std::size_t lhs = eval_term(cs, law2.lhs, {{'x', *bi}, {'y', *gi}});
        std::size_t rhs = eval_term(cs, law2.rhs, {{'x', *bi}, {'y', *gi}});
        Transformation lt = parse_transformation(cs.label(lhs));
        Transformation rt = parse_transformation(cs.label(rhs));
        displayed_ok =
            lhs != rhs && lt.image_of(1) == n && rt.image_of(1) == n + 1;
        displayed = "displayed pair x=" + format_transformation(beta) +
                    " y=" + format_transformation(gamma) + ": sides send 1 to " +
                    std::to_string(lt.image_of(1)) + " and " +
                    std::to_string(rt.image_of(1));
      }
    }
    out.push_back(make("identities", "mixed-power-fails-one-size-up",
                       !rep.holds && displayed_ok, rep.checked,
                       rep.holds ? "expected a failure in the extensive maps on [" +
                                       std::to_string(n + 1) + "], found none"
                                 : displayed));
  }
  return out;
}

std::vector<CheckResult> suite_noniso(int n, const CheckOptions& opts) {
  require_range("noniso", n, 1, 5);
  std::vector<CheckResult> out;
  auto cs = semiring_from_transformations(n, MonoidClass::C);
  auto cms = semiring_from_transformations(n, MonoidClass::Cminus);
  auto elems = enumerate_transformations(n, MonoidClass::C);

  std::vector<std::size_t> bar_map;
  for (const auto& t : elems)
    bar_map.push_back(*cms.index_of(format_transformation(bar(t))));
  auto bar_hom = check_homomorphism(cs, cms, bar_map, Ops::mul_only(), opts);
  auto bar_inj = check_injective(bar_map);
  out.push_back(make("noniso", "order-reversal-is-multiplicative-iso",
                     bar_hom.holds && bar_inj.holds,
                     bar_hom.checked + bar_inj.checked,
                     "the explicit order-reversal bijection respects "
                     "composition"));

  auto mul_search = check_isomorphism_exists(cs, cms, Ops::mul_only(), opts);
  out.push_back(make("noniso", "multiplicative-iso-found", mul_search.holds,
                     mul_search.checked,
                     mul_search.holds ? "search confirms the monoids are "
                                        "isomorphic"
                                      : "no multiplicative isomorphism found"));

  auto full_search = check_isomorphism_exists(cs, cms, Ops::both(), opts);
  const bool expect_full = n == 1;
  out.push_back(make(
      "noniso", "semiring-iso-absent-beyond-size-1",
      full_search.holds == expect_full, full_search.checked,
      expect_full
          ? "size 1: the two one-element semirings coincide"
          : "exhaustive search over both operations finds no isomorphism"));

  auto add_search = check_isomorphism_exists(cs, cms, Ops::add_only(), opts);
  const bool expect_add = n <= 2;
  out.push_back(make("noniso", "additive-reduct-iso-matches-size",
                     add_search.holds == expect_add, add_search.checked,
                     expect_add
                         ? "additive reducts are isomorphic at this size"
                         : "additive reducts are not isomorphic at this size"));
  return out;
}

}  // namespace

const std::vector<std::string>& verify_tokens() {
  static const std::vector<std::string> tokens = {
      "unary-rep",   "conjugate-rep", "stair-rep", "action-rep",
      "complementarity", "young-count", "lattice",   "closure",
      "identities",  "noniso"};
  return tokens;
}

std::vector<CheckResult> verify_suite(const std::string& token, int n,
                                      const CheckOptions& options) {
  if (token == "unary-rep") return suite_unary_rep(n, options);
  if (token == "conjugate-rep") return suite_conjugate_rep(n, options);
  if (token == "stair-rep") return suite_stair_rep(n, options);
  if (token == "action-rep") return suite_action_rep(n, options);
  if (token == "complementarity") return suite_complementarity(n, options);
  if (token == "young-count") return suite_young_count(n, options);
  if (token == "lattice") return suite_lattice(n, options);
  if (token == "closure") return suite_closure(n, options);
  if (token == "identities") return suite_identities(n, options);
  if (token == "noniso") return suite_noniso(n, options);
  throw DomainError("unknown verification suite '" + token + "'");
}

std::vector<CheckResult> report_all(int n_max, const CheckOptions& options) {
  if (n_max < 1) throw DomainError("report needs n_max >= 1");
  std::vector<CheckResult> out;

  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    auto c = enumerate_transformations(n, MonoidClass::C);
    auto cm = enumerate_transformations(n, MonoidClass::Cminus);
    bool ok = c.size() == catalan_number(n) && cm.size() == catalan_number(n);
    out.push_back(make("counts", "catalan-count-n" + std::to_string(n), ok,
                       c.size() + cm.size(),
                       std::to_string(c.size()) + " extensive and " +
                           std::to_string(cm.size()) +
                           " decreasing maps, expected " +
                           std::to_string(catalan_number(n))));
  }
  for (int n = 1; n <= std::min(n_max, 5); ++n) {
    auto o = enumerate_transformations(n, MonoidClass::O);
    out.push_back(make("counts", "order-preserving-count-n" + std::to_string(n),
                       o.size() == order_preserving_count(n), o.size(),
                       std::to_string(o.size()) + " maps, expected " +
                           std::to_string(order_preserving_count(n))));
  }

  {
    auto o3 = semiring_from_transformations(3, MonoidClass::O);
    auto u2 = semiring_from_matrices(2, MatrixShape::Upper);
    out.push_back(make("axioms", "order-preserving-3", o3.axioms_verified(),
                       o3.size() * o3.size() * o3.size(),
                       "all ai-semiring axioms checked exhaustively"));
    out.push_back(make("axioms", "upper-2", u2.axioms_verified(),
                       u2.size() * u2.size() * u2.size(),
                       "all ai-semiring axioms checked exhaustively"));
  }

  static const std::pair<const char*, int> kPlan[] = {
      {"unary-rep", 4},   {"conjugate-rep", 4}, {"stair-rep", 5},
      {"action-rep", 5},  {"complementarity", 4}, {"young-count", 8},
      {"lattice", 4},     {"closure", 4},       {"identities", 4},
      {"noniso", 4}};
  for (const auto& [token, cap] : kPlan) {
    for (int n = 1; n <= std::min(n_max, cap); ++n) {
      auto results = verify_suite(token, n, options);
      for (auto& r : results) {
        r.name += " n=" + std::to_string(n);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace catalan
