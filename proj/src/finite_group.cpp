#include "vilenkin/finite_group.hpp"

#include "vilenkin/heisenberg.hpp"

namespace vilenkin {

int FiniteGroup::trivial_irrep() const {
  for (int i = 0; i < num_irreps(); ++i) {
    if (irrep_dims[static_cast<size_t>(i)] != 1) continue;
    bool all_one = true;
    for (const Cyclo& t : irrep_traces[static_cast<size_t>(i)])
      if (!(t == Cyclo(p, Rat(1)))) {
        all_one = false;
        break;
      }
    if (all_one) return i;
  }
  throw DomainError("group has no trivial representation in its table");
}

std::shared_ptr<const FiniteGroup> cyclic_group(long long p, int n) {
  if (n < 1) throw DomainError("cyclic_group: n must be >= 1");
  const long long q = checked_pow(p, n);
  auto g = std::make_shared<FiniteGroup>();
  g->name = "Z/" + std::to_string(q);
  g->p = p;
  g->order = static_cast<int>(q);
  g->identity = 0;
  g->mul.assign(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  g->inverse.assign(static_cast<size_t>(q), 0);
  for (long long a = 0; a < q; ++a) {
    g->inverse[static_cast<size_t>(a)] = static_cast<int>((q - a) % q);
    for (long long b = 0; b < q; ++b)
      g->mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          static_cast<int>((a + b) % q);
  }
  for (long long j = 0; j < q; ++j) {
    g->irrep_names.push_back("chi_" + std::to_string(j));
    g->irrep_dims.push_back(1);
    std::vector<Cyclo> traces;
    traces.reserve(static_cast<size_t>(q));
    for (long long x = 0; x < q; ++x)
      traces.emplace_back(Phase(p, j * x, n));
    g->irrep_traces.push_back(std::move(traces));
  }
  return g;
}

std::shared_ptr<const FiniteGroup> heisenberg_quotient_group(long long p, int n, int d) {
  if (n < 1) throw DomainError("heisenberg_quotient_group: n must be >= 1");
  const long long order = heis_grid_size(p, d, n);
  if (order > 4096) throw DomainError("heisenberg_quotient_group: order too large");
  auto g = std::make_shared<FiniteGroup>();
  g->name = "H_" + std::to_string(d) + "(Z/" + std::to_string(checked_pow(p, n)) + ")";
  g->p = p;
  g->order = static_cast<int>(order);
  std::vector<HeisElement> elems;
  elems.reserve(static_cast<size_t>(order));
  for (long long i = 0; i < order; ++i)
    elems.push_back(heis_element_at(p, d, n, i));
  g->identity = static_cast<int>(heis_flat_index(HeisElement::identity(p, d, n)));
  g->mul.assign(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
  g->inverse.assign(static_cast<size_t>(order), 0);
  for (long long a = 0; a < order; ++a) {
    g->inverse[static_cast<size_t>(a)] =
        static_cast<int>(heis_flat_index(heis_inv(elems[static_cast<size_t>(a)])));
    for (long long b = 0; b < order; ++b)
      g->mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<int>(
          heis_flat_index(heis_mul(elems[static_cast<size_t>(a)],
                                   elems[static_cast<size_t>(b)])));
  }
  for (const HeisDualIndex& zeta : enumerate_dual(p, d, n)) {
    g->irrep_names.push_back(zeta.label());
    g->irrep_dims.push_back(zeta.dim());
    std::vector<Cyclo> traces;
    traces.reserve(static_cast<size_t>(order));
    for (const HeisElement& e : elems) traces.push_back(rep_trace(zeta, e));
    g->irrep_traces.push_back(std::move(traces));
  }
  return g;
}

}  // namespace vilenkin
