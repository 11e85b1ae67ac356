#include "catalan/identities.hpp"

#include "catalan/errors.hpp"

namespace catalan {

Identity power_stability_identity(int n) {
  if (n < 1) throw DomainError("power stability needs level >= 1");
  Term x = Term::variable('x');
  return Identity{Term::power(x, n), Term::power(x, n + 1)};
}

Identity mixed_power_identity(int n) {
  if (n < 2) throw DomainError("mixed power law needs level >= 2");
  Term x = Term::variable('x');
  Term y = Term::variable('y');
  Term lhs = Term::product(Term::power(x, n - 1), Term::power(y, n - 1));
  Term rhs = Term::sum(
      Term::product(Term::power(x, n), Term::power(y, n - 1)),
      Term::product(Term::power(x, n - 1), Term::power(y, n)));
  return Identity{std::move(lhs), std::move(rhs)};
}

std::vector<Identity> triangular_identities(int n) {
  std::vector<Identity> out;
  out.push_back(power_stability_identity(n));
  if (n >= 2) out.push_back(mixed_power_identity(n));
  return out;
}

Transformation power_stability_witness(int n) {
  if (n < 1) throw DomainError("power stability witness needs level >= 1");
  const int m = n + 2;
  std::vector<int> images(m);
  for (int i = 1; i <= m; ++i) images[i - 1] = i <= n + 1 ? i + 1 : m;
  return Transformation(std::move(images));
}

std::pair<Transformation, Transformation> mixed_power_witnesses(int n) {
  if (n < 1) throw DomainError("mixed power witnesses need level >= 1");
  const int m = n + 1;
  std::vector<int> b(m), c(m);
  for (int i = 1; i <= m; ++i) {
    b[i - 1] = i <= n ? i + 1 : m;
    c[i - 1] = i <= n ? n : m;
  }
  return {Transformation(std::move(b)), Transformation(std::move(c))};
}

}  // namespace catalan
