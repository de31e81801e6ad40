#include "veronese/group_actions.hpp"

#include <numeric>
#include <sstream>

namespace veronese {

WeightAssignment WeightAssignment::parse(std::string_view text) {
  std::vector<long> v;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(item, &used));
      if (used != item.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("malformed weight '" + item + "'");
    }
  }
  if (v.size() != 5) throw InputError("weights need five integers wx1,wx2,wx3,wy,wz");
  return {{v[0], v[1], v[2]}, v[3], v[4]};
}

std::string WeightAssignment::to_string() const {
  return std::to_string(wx[0]) + "," + std::to_string(wx[1]) + "," + std::to_string(wx[2]) + "," +
         std::to_string(wy) + "," + std::to_string(wz);
}

std::optional<long> gm_weight_of(const Polynomial& p, const WeightAssignment& w) {
  if (p.is_zero()) throw Error("gm_weight_of: the zero polynomial has no weight");
  const auto& ring = *p.ring();
  std::vector<long> per_var(ring.size(), 0);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& n = ring.name(i);
    if (n == "x1") per_var[i] = w.wx[0];
    else if (n == "x2") per_var[i] = w.wx[1];
    else if (n == "x3") per_var[i] = w.wx[2];
    else if (n == "y") per_var[i] = w.wy;
    else if (n == "z") per_var[i] = w.wz;
    else throw UnknownVariable(n);
  }
  std::optional<long> weight;
  for (const auto& t : p.terms()) {
    long tw = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) tw += per_var[i] * t.mono[i];
    if (weight && *weight != tw) return std::nullopt;
    weight = tw;
  }
  return weight;
}

bool gm_check_model(const SexticModel& m, const WeightAssignment& w) {
  auto w6 = gm_weight_of(m.phi6(), w);
  if (!w6 || *w6 != 3 * w.wy || *w6 != 2 * w.wz) return false;
  if (m.phi4().is_zero()) return true;
  auto w4 = gm_weight_of(m.phi4(), w);
  return w4 && *w4 == 2 * w.wy && 2 * *w6 == 3 * *w4;
}

std::vector<std::array<unsigned, 3>> enumerate_weighted_monomials(unsigned total_degree, long m_sharp, long n_sharp,
                                                                   long target) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned k1 = total_degree + 1; k1-- > 0;)
    for (unsigned k2 = total_degree - k1 + 1; k2-- > 0;) {
      unsigned k3 = total_degree - k1 - k2;
      if (m_sharp * long(k2) + n_sharp * long(k3) == target) out.push_back({k1, k2, k3});
    }
  return out;
}

const std::vector<GmTableRow>& gm_table() {
  using S = std::vector<std::array<unsigned, 3>>;
  static const std::vector<GmTableRow> rows = {
      {1, {{0, 0, 6}, 2, 3}, 6, S{{5, 0, 1}, {4, 1, 1}, {3, 2, 1}, {2, 3, 1}, {1, 4, 1}, {0, 5, 1}}, {}, {}},
      {2, {{0, 6, 12}, 10, 15}, 30, S{{3, 1, 2}, {2, 3, 1}, {1, 5, 0}}, {}, {}},
      {3, {{0, 1, 2}, 2, 3}, 6, S{{3, 0, 3}, {2, 2, 2}, {1, 4, 1}, {0, 6, 0}}, 4, S{{2, 0, 2}, {1, 2, 1}, {0, 4, 0}}},
      {4, {{0, 1, 3}, 2, 3}, 6, S{{4, 0, 2}, {2, 3, 1}, {0, 6, 0}}, 4, S{{2, 1, 1}, {0, 4, 0}}},
      {5, {{0, 6, 18}, 14, 21}, 42, S{{3, 1, 2}, {1, 4, 1}}, {}, {}},
      {6, {{0, 6, 24}, 10, 15}, 30, S{{4, 1, 1}, {1, 5, 0}}, {}, {}},
      {7, {{0, 1, 4}, 2, 3}, 6, S{{3, 2, 1}, {0, 6, 0}}, 4, S{{3, 0, 1}, {0, 4, 0}}},
      {8, {{0, 3, 12}, 8, 12}, 24, S{{4, 0, 2}, {1, 4, 1}}, {}, {}},
      {9, {{0, 2, 8}, 6, 9}, 18, S{{3, 1, 2}, {0, 5, 1}}, 12, S{{1, 2, 1}}},
      {10, {{0, 6, 30}, 10, 15}, 30, S{{5, 0, 1}, {1, 5, 0}}, {}, {}},
      {11, {{0, 1, 5}, 2, 3}, 6, S{{4, 1, 1}, {0, 6, 0}}, 4, S{{0, 4, 0}}},
      {12, {{0, 3, 15}, 10, 15}, 30, S{{4, 0, 2}, {0, 5, 1}}, {}, {}},
      {13, {{0, 6, 15}, 10, 15}, 30, S{{4, 0, 2}, {1, 5, 0}}, {}, {}},
      {14, {{0, 2, 5}, 4, 6}, 12, S{{3, 1, 2}, {0, 6, 0}}, 8, S{{0, 4, 0}}},
      {15, {{0, 4, 10}, 10, 15}, 30, S{{3, 0, 3}, {0, 5, 1}}, 20, S{{2, 0, 2}}},
      {16, {{0, 1, 6}, 2, 3}, 6, S{{5, 0, 1}, {0, 6, 0}}, 4, S{{0, 4, 0}}},
      {17, {{0, 1, 8}, 4, 6}, 12, S{{1, 4, 1}}, 8, S{{3, 0, 1}}},
      {18, {{0, 2, 20}, 10, 15}, 30, S{{0, 5, 1}}, 20, S{{3, 0, 1}}},
      {19, {{0, 6, 20}, 10, 15}, 30, S{{1, 5, 0}}, 20, S{{3, 0, 1}}},
  };
  return rows;
}

const GmTableRow& gm_table_row(int index) {
  const auto& rows = gm_table();
  if (index < 1 || index > static_cast<int>(rows.size()))
    throw InputError("InvalidRow: table rows are numbered 1.." + std::to_string(rows.size()));
  return rows[index - 1];
}

GmReduced reduce_weights(const GmTableRow& row) {
  long m = row.weights.wx[1], n = row.weights.wx[2];
  long d = std::gcd(m, n);
  GmReduced r{d, m / d, n / d, row.phi6_weight / d, std::nullopt};
  if (row.phi4_weight) r.w4 = *row.phi4_weight / d;
  return r;
}

namespace {

Polynomial from_support(const std::vector<std::array<unsigned, 3>>& support, const RingPtr& ring,
                        CoefficientSampler& sampler) {
  std::vector<Polynomial::Term> terms;
  for (const auto& e : support) {
    Monomial m;
    for (std::size_t i = 0; i < 3; ++i) m.set(i, e[i]);
    terms.push_back({m, sampler.nonzero()});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

GmFamilyMember table_gm_family(int row_index, std::uint64_t seed) {
  const auto& row = gm_table_row(row_index);
  CoefficientSampler sampler(seed);
  RingPtr ring = plane_ring();
  for (int attempt = 0;; ++attempt) {
    Polynomial phi6 = from_support(row.phi6_support, ring, sampler);
    Polynomial phi4 = from_support(row.phi4_support, ring, sampler);
    try {
      auto model = build_model(phi4, phi6, "gm_row_" + std::to_string(row_index));
      return {model, row.weights, seed};
    } catch (const ModelError&) {
      if (attempt > 100) throw;
    }
  }
}

PencilParameter parse_pencil_parameter(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return std::nullopt;
  return parse_rational(text);
}

std::string to_string(const PencilParameter& p) { return p ? to_string(*p) : "infinity"; }

Polynomial psi(const PencilParameter& lambda, const RingPtr& ring) {
  Polynomial x1 = Polynomial::variable(ring, "x1");
  Polynomial x2 = Polynomial::variable(ring, "x2");
  Polynomial x3 = Polynomial::variable(ring, "x3");
  if (!lambda) return x3 * x3;
  return x2 * x2 - (x1 * x3).scaled(2) + (x3 * x3).scaled(*lambda);
}

Polynomial ga_apply(const Polynomial& p, const RingPtr& target, const Polynomial& t) {
  Polynomial x1 = Polynomial::variable(target, "x1");
  Polynomial x2 = Polynomial::variable(target, "x2");
  Polynomial x3 = Polynomial::variable(target, "x3");
  std::map<std::string, Polynomial> images;
  images.emplace("x1", x1 + x2 * t + (x3 * t * t).scaled(Rational(1, 2)));
  images.emplace("x2", x2 + x3 * t);
  return substitute(p, target, images);
}

Polynomial ga_apply(const Polynomial& p) {
  RingPtr target = p.ring()->extended(p.ring()->fresh_name("t"));
  Polynomial t = Polynomial::variable(target, target->name(target->size() - 1));
  return ga_apply(p, target, t);
}

bool ga_check_invariance(const SexticModel& m) {
  Polynomial f = defining_polynomial(m);
  Polynomial moved = ga_apply(f);
  return moved == embed(f, moved.ring());
}

SexticModel build_ga_model(const GaParameters& params, std::string name) {
  RingPtr ring = plane_ring();
  Polynomial phi4 = (psi(params.lambda_prime[0], ring) * psi(params.lambda_prime[1], ring)).scaled(params.epsilon);
  Polynomial phi6 = psi(params.lambda[0], ring) * psi(params.lambda[1], ring) * psi(params.lambda[2], ring);
  return build_model(phi4, phi6, std::move(name));
}

}  // namespace veronese
