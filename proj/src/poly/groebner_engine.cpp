#include "groebner_engine.hpp"

#include <algorithm>

namespace mfcat::detail {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  std::uint32_t position;
  Monomial lcm;
};

bool pair_before(const CriticalPair& a, const CriticalPair& b) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// a - c * m * b, skipping the first `skip_a` terms of a and `skip_b` of b.
ModuleElement sub_multiple(const RingContext& ring, const ModuleElement& a, std::size_t skip_a, const ModuleElement& b,
                           std::size_t skip_b, const Monomial& m, const Rational& c) {
  const Field& k = ring.field();
  const MonomialOrder order = ring.order();
  ModuleElement out;
  out.reserve(a.size() - skip_a + b.size() - skip_b);
  std::size_t i = skip_a;
  std::size_t j = skip_b;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    ModuleTerm scaled{b[j].position, b[j].monomial * m, Rational()};
    if (i == a.size() || term_greater(order, scaled, a[i])) {
      scaled.coeff = k.neg(k.mul(c, b[j].coeff));
      out.push_back(std::move(scaled));
      ++j;
    } else if (term_greater(order, a[i], scaled)) {
      out.push_back(a[i++]);
    } else {
      Rational v = k.sub(a[i].coeff, k.mul(c, b[j].coeff));
      if (sgn(v) != 0) out.push_back({a[i].position, a[i].monomial, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(const RingContext& ring, ModuleElement& f) {
  if (f.empty() || f.front().coeff == 1) return;
  Rational inv = ring.field().inv(f.front().coeff);
  for (auto& t : f) t.coeff = ring.field().mul(t.coeff, inv);
}

const ModuleElement* find_reducer(const std::vector<std::vector<const ModuleElement*>>& by_position,
                                  const ModuleTerm& t) {
  for (const ModuleElement* g : by_position[t.position]) {
    if (g->front().monomial.divides(t.monomial)) return g;
  }
  return nullptr;
}

class Engine {
 public:
  Engine(const RingContext& ring, const EngineOptions& options) : ring_(ring), options_(options) {}

  std::vector<ModuleElement> run(std::vector<ModuleElement> gens) {
    for (auto& g : gens) consider(std::move(g));
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      CriticalPair p = std::move(*it);
      pairs_.erase(it);
      const ModuleElement& f = elems_[p.i];
      const ModuleElement& g = elems_[p.j];
      ModuleElement s = sub_multiple(ring_, times(f, p.lcm / f.front().monomial), 1, g, 1,
                                     p.lcm / g.front().monomial, Rational(1));
      consider(std::move(s));
    }
    return finish();
  }

 private:
  ModuleElement times(const ModuleElement& f, const Monomial& m) const {
    ModuleElement out = f;
    for (auto& t : out) t.monomial = t.monomial * m;
    return out;
  }

  std::vector<const ModuleElement*> active_reducers() const {
    std::vector<const ModuleElement*> out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (active_[i]) out.push_back(&elems_[i]);
    }
    return out;
  }

  void consider(ModuleElement f) {
    if (f.empty()) return;
    f = reduce(ring_, std::move(f), active_reducers(), options_.rank);
    if (f.empty()) return;
    if (!options_.keep_lower && f.front().position >= options_.cut) return;
    make_monic(ring_, f);
    add(std::move(f));
  }

  void add(ModuleElement h) {
    const std::size_t hi = elems_.size();
    const std::uint32_t pos = h.front().position;
    const Monomial& lt = h.front().monomial;

    std::vector<CriticalPair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g] || elems_[g].front().position != pos) continue;
      fresh.push_back({g, hi, pos, lcm(elems_[g].front().monomial, lt)});
    }

    // Gebauer-Moeller: drop new pairs whose lcm is a multiple of another
    // surviving new pair's lcm; coprime pairs (ideals) act as witnesses only.
    std::vector<CriticalPair> kept;
    std::vector<bool> coprime_flags;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool coprime = options_.ideal && elems_[p.i].front().monomial.coprime(lt);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b) dominated = fresh[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept[b].lcm.divides(p.lcm);
      }
      if (!dominated) {
        kept.push_back(p);
        coprime_flags.push_back(coprime);
      }
    }

    std::erase_if(pairs_, [&](const CriticalPair& p) {
      if (p.position != pos || !lt.divides(p.lcm)) return false;
      Monomial li = lcm(elems_[p.i].front().monomial, lt);
      Monomial lj = lcm(elems_[p.j].front().monomial, lt);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (std::size_t a = 0; a < kept.size(); ++a) {
      if (!coprime_flags[a]) pairs_.push_back(std::move(kept[a]));
    }

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && elems_[g].front().position == pos && lt.divides(elems_[g].front().monomial)) {
        active_[g] = false;
      }
    }
    elems_.push_back(std::move(h));
    active_.push_back(true);
  }

  std::vector<ModuleElement> finish() {
    std::vector<ModuleElement> basis;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (active_[i]) basis.push_back(elems_[i]);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<const ModuleElement*> others;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i) others.push_back(&basis[j]);
      }
      ModuleElement head{basis[i].front()};
      ModuleElement tail(basis[i].begin() + 1, basis[i].end());
      tail = reduce(ring_, std::move(tail), others, options_.rank);
      head.insert(head.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
      basis[i] = std::move(head);
    }
    std::sort(basis.begin(), basis.end(), [&](const ModuleElement& a, const ModuleElement& b) {
      return term_greater(ring_.order(), b.front(), a.front());
    });
    return basis;
  }

  const RingContext& ring_;
  EngineOptions options_;
  std::vector<ModuleElement> elems_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

bool term_greater(MonomialOrder order, const ModuleTerm& a, const ModuleTerm& b) {
  if (a.position != b.position) return a.position < b.position;
  return compare(order, a.monomial, b.monomial) == std::strong_ordering::greater;
}

ModuleElement reduce(const RingContext& ring, ModuleElement f, const std::vector<const ModuleElement*>& reducers,
                     std::size_t rank) {
  std::vector<std::vector<const ModuleElement*>> by_position(rank);
  for (const ModuleElement* g : reducers) {
    if (!g->empty()) by_position[g->front().position].push_back(g);
  }
  ModuleElement result;
  ModuleElement work = std::move(f);
  std::size_t head = 0;
  while (head < work.size()) {
    const ModuleTerm& t = work[head];
    const ModuleElement* g = find_reducer(by_position, t);
    if (g == nullptr) {
      result.push_back(work[head]);
      ++head;
      continue;
    }
    Rational c = ring.field().div(t.coeff, g->front().coeff);
    Monomial m = t.monomial / g->front().monomial;
    work = sub_multiple(ring, work, head + 1, *g, 1, m, c);
    head = 0;
  }
  return result;
}

std::vector<ModuleElement> compute_groebner(const RingContext& ring, std::vector<ModuleElement> gens,
                                            const EngineOptions& options) {
  return Engine(ring, options).run(std::move(gens));
}

}  // namespace mfcat::detail
